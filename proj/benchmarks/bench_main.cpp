#include <benchmark/benchmark.h>

#include <random>

#include "reveal/grid_overlay.hpp"
#include "reveal/metrics.hpp"
#include "reveal/verdict_parser.hpp"

using namespace reveal;

namespace {

RasterImage make_image(int w, int h) {
  RasterImage image(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      image.set(x, y, {static_cast<std::uint8_t>(x * 7 + y),
                       static_cast<std::uint8_t>(x ^ y),
                       static_cast<std::uint8_t>(y * 3)});
    }
  }
  return image;
}

std::string make_holistic_text() {
  std::string text;
  int score = 0;
  for (auto f : canonical_factors()) {
    text += "FACTOR: " + std::string(to_string(f)) +
            " | SCORE: " + std::to_string(1 + score++ % 5) +
            " | WHY: a short observation about the scene\n";
  }
  text += "LABEL: TAMPERED\nREASONING: cloned texture near the boundary\n";
  return text;
}

std::vector<ScoredRecord> make_scored(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> score(0.0, 1.0);
  std::vector<ScoredRecord> scored;
  scored.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    scored.push_back({i % 2 ? GroundTruth::tampered : GroundTruth::authentic,
                      TamperingScore{score(rng)}});
  }
  return scored;
}

void BM_OverlayGrid(benchmark::State& state) {
  const RasterImage image = make_image(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(overlay_grid(image, OverlayStyle{}));
  }
}
BENCHMARK(BM_OverlayGrid)->Arg(256)->Arg(1024);

void BM_EncodePng(benchmark::State& state) {
  const RasterImage image = make_image(512, 512);
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode_png(image));
  }
}
BENCHMARK(BM_EncodePng);

void BM_ParseHolisticStrict(benchmark::State& state) {
  const std::string text = make_holistic_text();
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse(text, "holistic_v1"));
  }
}
BENCHMARK(BM_ParseHolisticStrict);

void BM_ParseHolisticLenient(benchmark::State& state) {
  std::string text = make_holistic_text();
  for (auto& c : text) c = static_cast<char>(std::tolower(c));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse(text, "holistic_v1"));
  }
}
BENCHMARK(BM_ParseHolisticLenient);

void BM_RocCurve(benchmark::State& state) {
  const auto scored = make_scored(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(roc_curve(scored));
  }
}
BENCHMARK(BM_RocCurve)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
