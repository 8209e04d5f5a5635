#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <unistd.h>

#include "reveal/forensics.hpp"
#include "reveal/image.hpp"
#include "reveal/verdict_parser.hpp"

namespace reveal::test {

/// Unique temp directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("reveal-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path,
                       const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

/// Deterministic procedural test image: smooth gradients plus a seeded
/// hash pattern, distinct per (seed, size).
inline RasterImage test_image(int width, int height, std::uint32_t seed) {
  RasterImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      std::uint32_t h = seed * 2654435761u + static_cast<std::uint32_t>(
                                                 y * width + x) * 2246822519u;
      h ^= h >> 15;
      img.set(x, y,
              {static_cast<std::uint8_t>((x * 255) / std::max(1, width - 1)),
               static_cast<std::uint8_t>((y * 255) / std::max(1, height - 1)),
               static_cast<std::uint8_t>(h & 0xFF)});
    }
  }
  return img;
}

inline std::string random_text(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> ch(32, 126);
  std::string out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    char c = static_cast<char>(ch(rng));
    if (c == '|' || c == '\n' || c == '\r') c = ' ';
    out.push_back(c);
  }
  if (trim(out).empty()) out = "x";
  return trim(out);
}

inline HolisticVerdict random_holistic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> score(1, 5);
  std::bernoulli_distribution coin(0.5);
  std::vector<FactorAssessment> assessments;
  for (auto f : canonical_factors()) {
    assessments.push_back(
        {f, LikertScore(score(rng)), random_text(rng, 60)});
  }
  return HolisticVerdict::create(
      std::move(assessments),
      coin(rng) ? GroundTruth::tampered : GroundTruth::authentic,
      random_text(rng, 80));
}

inline RegionVerdict random_region(std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> cell_count(0, 5);
  std::vector<int> cells = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::shuffle(cells.begin(), cells.end(), rng);
  std::vector<CellFinding> findings;
  const int n = cell_count(rng);
  for (int i = 0; i < n; ++i) {
    findings.push_back({cells[i], coin(rng), random_text(rng, 40)});
  }
  std::sort(findings.begin(), findings.end(),
            [](const CellFinding& a, const CellFinding& b) {
              return a.cell_index < b.cell_index;
            });
  bool cue = coin(rng);
  GroundTruth label =
      coin(rng) ? GroundTruth::tampered : GroundTruth::authentic;
  const bool any_anomalous =
      std::any_of(findings.begin(), findings.end(),
                  [](const CellFinding& f) { return f.anomalous; });
  if (!cue && label == GroundTruth::tampered && !any_anomalous) {
    cue = true;  // keep the generated verdict valid
  }
  return RegionVerdict::create(cue, std::move(findings), label,
                               random_text(rng, 80));
}

inline BinaryVerdict random_binary(std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  const bool tampered = coin(rng);
  return BinaryVerdict{
      tampered ? GroundTruth::tampered : GroundTruth::authentic,
      tampered ? "FAKE" : "REAL"};
}

}  // namespace reveal::test
