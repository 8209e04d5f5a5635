// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything runs offline against the mock backend.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "reveal/grid_overlay.hpp"
#include "reveal/metrics.hpp"
#include "reveal/report.hpp"
#include "reveal/runner.hpp"
#include "reveal/verdict_parser.hpp"
#include "support.hpp"

using namespace reveal;
namespace fs = std::filesystem;
using Seconds = std::chrono::duration<double>;

namespace {

// Frozen regression values from the first run of the seeded mock
// evaluation (seed 11, authentic_mean 1.8, tampered_mean 4.2,
// noise_std 0.6, 100 samples per class).
constexpr double kFrozenHolisticAuc = 1.0;
constexpr double kFrozenHolisticAcc = 1.0;

int failures = 0;

template <typename F>
void criterion(const std::string& name, double time_limit_s, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    detail = body();
    ok = true;
  } catch (const std::exception& e) {
    detail = e.what();
  }
  const double elapsed = Seconds(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && elapsed > time_limit_s) {
    ok = false;
    detail += " [exceeded time limit]";
  }
  std::ostringstream line;
  line << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << std::fixed
       << std::setprecision(2) << elapsed << "s)";
  if (!detail.empty()) line << " - " << detail;
  std::cout << line.str() << "\n";
  if (!ok) ++failures;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

// --- criterion bodies -------------------------------------------------------

std::string check_runbook() {
  const std::string readme = test::read_text(
      fs::path(REVEAL_SOURCE_DIR) / "README.md");
  require(!readme.empty(), "README.md missing");
  require(readme.find("Live mode") != std::string::npos ||
              readme.find("live mode") != std::string::npos,
          "README.md lacks a live-mode runbook section");
  return "live-mode runbook documented";
}

std::string check_metrics_oracle() {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> size(1, 1000);
  std::uniform_int_distribution<int> kind(0, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<LabeledPrediction> records(size(rng));
    for (auto& r : records) {
      r.first = kind(rng) % 2 ? GroundTruth::tampered : GroundTruth::authentic;
      const int k = kind(rng);
      r.second = k == 0 ? std::nullopt
                        : std::make_optional(k % 2 ? GroundTruth::tampered
                                                   : GroundTruth::authentic);
    }
    const auto got = classification_metrics(records);
    // Brute-force record-by-record count.
    ConfusionCounts want;
    for (const auto& [truth, pred] : records) {
      if (!pred) ++want.unparsed;
      else if (truth == GroundTruth::tampered && *pred == GroundTruth::tampered) ++want.tp;
      else if (truth == GroundTruth::authentic && *pred == GroundTruth::tampered) ++want.fp;
      else if (truth == GroundTruth::tampered && *pred == GroundTruth::authentic) ++want.fn;
      else ++want.tn;
    }
    require(got.counts == want, "confusion counts diverged from oracle");
  }

  std::uniform_int_distribution<int> roc_size(2, 200);
  std::uniform_real_distribution<double> score(0.0, 1.0);
  std::uniform_int_distribution<int> quantize(0, 1);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = roc_size(rng);
    std::vector<ScoredRecord> scored;
    std::size_t pos = 0, neg = 0;
    for (int i = 0; i < n; ++i) {
      const GroundTruth truth =
          i % 2 ? GroundTruth::tampered : GroundTruth::authentic;
      (truth == GroundTruth::tampered ? pos : neg) += 1;
      double v = score(rng);
      if (quantize(rng)) v = std::round(v * 4) / 4;
      scored.push_back({truth, TamperingScore{v}});
    }
    if (pos == 0 || neg == 0) continue;
    double concordant = 0, ties = 0;
    for (const auto& [ta, sa] : scored) {
      if (ta != GroundTruth::tampered) continue;
      for (const auto& [tb, sb] : scored) {
        if (tb != GroundTruth::authentic) continue;
        if (sa.value > sb.value) concordant += 1;
        else if (sa.value == sb.value) ties += 1;
      }
    }
    const double oracle = (concordant + ties / 2) / double(pos * neg);
    require(std::abs(roc_curve(scored).auc - oracle) < 1e-9,
            "AUC diverged from pairwise concordance");
    ++checked;
  }
  return "1000 metric sets exact, " + std::to_string(checked) +
         " ROC sets within 1e-9";
}

std::string check_tampering_exactness() {
  std::vector<FactorAssessment> assessments;
  for (auto f : canonical_factors()) {
    assessments.push_back({f, LikertScore(1), "j"});
  }
  const auto with_scores = [&assessments](const std::array<int, 8>& scores) {
    auto copy = assessments;
    for (std::size_t i = 0; i < 8; ++i) copy[i].score = LikertScore(scores[i]);
    return HolisticVerdict::create(std::move(copy), GroundTruth::authentic,
                                   "r");
  };

  // Exhaustive: every 8-vector over {1..5}.
  std::array<int, 8> scores;
  long long count = 0;
  for (int code = 0; code < 390625; ++code) {
    int rem = code;
    int sum = 0;
    for (int i = 0; i < 8; ++i) {
      scores[i] = 1 + rem % 5;
      sum += scores[i];
      rem /= 5;
    }
    const double value = tampering_score(with_scores(scores)).value;
    const double expected = (sum / 8.0 - 1.0) / 4.0;
    require(value >= 0.0 && value <= 1.0, "score left [0,1]");
    require(std::abs(value - expected) < 1e-12, "affine map mismatch");
    ++count;
  }
  require(count == 390625, "exhaustive sweep incomplete");
  require(tampering_score(with_scores({1, 1, 1, 1, 1, 1, 1, 1})).value == 0.0,
          "minimum endpoint not exactly 0");
  require(tampering_score(with_scores({5, 5, 5, 5, 5, 5, 5, 5})).value == 1.0,
          "maximum endpoint not exactly 1");

  // Monotonicity over sampled comparable pairs.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(1, 5);
  std::uniform_int_distribution<int> bump(0, 2);
  for (int trial = 0; trial < 10000; ++trial) {
    std::array<int, 8> lo, hi;
    for (int i = 0; i < 8; ++i) {
      lo[i] = pick(rng);
      hi[i] = std::min(5, lo[i] + bump(rng));
    }
    require(tampering_score(with_scores(lo)).value <=
                tampering_score(with_scores(hi)).value,
            "monotonicity violated");
  }
  return "5^8 exhaustive + 10000 comparable pairs";
}

std::string check_grid_tiling() {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dim(3, 4096);
  for (int trial = 0; trial < 500; ++trial) {
    const int w = dim(rng);
    const int h = dim(rng);
    long long covered = 0;
    for (int cell = 1; cell <= 9; ++cell) {
      const CellRect r = cell_bounds(cell, w, h);
      covered += static_cast<long long>(r.w) * r.h;
      for (int other = 1; other < cell; ++other) {
        const CellRect o = cell_bounds(other, w, h);
        require(!(r.x < o.x + o.w && o.x < r.x + r.w && r.y < o.y + o.h &&
                  o.y < r.y + r.h),
                "cells overlap");
      }
    }
    require(covered == static_cast<long long>(w) * h, "cells do not cover");
  }
  return "500 random sizes tile exactly";
}

std::string check_overlay_determinism() {
  const fs::path dir = fs::path(REVEAL_TEST_FIXTURE_DIR) / "overlay";
  const char* inputs[] = {"input_gray_300.png", "input_pattern_301x299.png",
                          "input_gradient_256x128.png"};
  const char* goldens[] = {"golden_gray_300.png", "golden_pattern_301x299.png",
                           "golden_gradient_256x128.png"};
  for (int i = 0; i < 3; ++i) {
    const RasterImage input = load_image((dir / inputs[i]).string());
    const auto first = encode_png(overlay_grid(input, OverlayStyle{}));
    const auto second = encode_png(overlay_grid(input, OverlayStyle{}));
    require(first == second, "two runs differ");
    require(first == read_file_bytes((dir / goldens[i]).string()),
            std::string("golden mismatch for ") + inputs[i]);

    // Interior sample points away from lines and labels stay untouched.
    const RasterImage out = overlay_grid(input, OverlayStyle{});
    for (int cell = 1; cell <= 9; ++cell) {
      const CellRect r = cell_bounds(cell, input.width(), input.height());
      const int cx = r.x + r.w / 2;
      const int cy = r.y + 2 * r.h / 3;
      require(out.at(cx, cy) == input.at(cx, cy),
              "non-grid pixel was modified");
    }
  }
  return "3 golden files byte-equal across two runs";
}

std::string check_parser_roundtrip() {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    switch (trial % 3) {
      case 0: {
        const BinaryVerdict v = test::random_binary(rng);
        const ParseOutcome o = parse(render_canonical(v), "binary_v1");
        require(o.ok() && o.repairs_applied().empty() &&
                    std::get<BinaryVerdict>(o.verdict()) == v,
                "binary round-trip failed");
        break;
      }
      case 1: {
        const HolisticVerdict v = test::random_holistic(rng);
        const ParseOutcome o = parse(render_canonical(v), "holistic_v1");
        require(o.ok() && o.repairs_applied().empty() &&
                    std::get<HolisticVerdict>(o.verdict()) == v,
                "holistic round-trip failed");
        break;
      }
      default: {
        const RegionVerdict v = test::random_region(rng);
        const ParseOutcome o = parse(render_canonical(v), "region_v1");
        require(o.ok() && o.repairs_applied().empty() &&
                    std::get<RegionVerdict>(o.verdict()) == v,
                "region round-trip failed");
        break;
      }
    }
  }

  // Malformed corpus.
  const fs::path dir = fs::path(REVEAL_TEST_FIXTURE_DIR) / "parser";
  std::size_t malformed = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    const std::size_t suffix = name.find(".input.txt");
    if (suffix == std::string::npos) continue;
    const std::string schema = name.substr(0, name.find("__"));
    const std::string expected = test::read_text(
        dir / (name.substr(0, suffix) + ".expected.txt"));
    const std::string header = expected.substr(0, expected.find('\n'));
    const ParseOutcome o = parse(test::read_text(entry.path()), schema);
    if (header.rfind("FAILED ", 0) == 0) {
      ++malformed;
      require(!o.ok(), "corpus case unexpectedly parsed: " + name);
      require(std::string(to_string(o.error().kind)) == header.substr(7),
              "wrong error kind for " + name + ": got " +
                  std::string(to_string(o.error().kind)));
    } else {
      require(o.ok(), "corpus case failed to parse: " + name);
    }
  }
  require(malformed >= 60, "malformed corpus too small: " +
                               std::to_string(malformed));

  // Fuzz totality.
  std::uniform_int_distribution<int> len(0, 300);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> schema_pick(0, 2);
  for (int trial = 0; trial < 10000; ++trial) {
    std::string input;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) input.push_back(static_cast<char>(byte(rng)));
    parse(input, registered_schemas()[schema_pick(rng)]);  // must not throw
  }
  return "1000 round-trips, " + std::to_string(malformed) +
         " malformed cases, 10000 fuzz inputs";
}

struct E2E {
  double auc = 0.0;
  double acc = 0.0;
  RunResult result;
  RunConfig config;
};

E2E run_mock_eval(const test::TempDir& dir, const std::string& tag,
                  double authentic_mean, double tampered_mean) {
  const fs::path base = dir.path() / tag;
  fs::create_directories(base);
  std::ostringstream manifest;
  for (int i = 0; i < 100; ++i) {
    for (const char* label : {"authentic", "tampered"}) {
      const std::string id = std::string(label) + "-" + std::to_string(i);
      save_png(test::test_image(32, 24,
                                static_cast<std::uint32_t>(
                                    i * 2 + (label[0] == 't' ? 1 : 0))),
               (base / (id + ".png")).string());
      manifest << R"({"id":")" << id << R"(","image_path":")" << id
               << R"(.png","label":")" << label
               << R"(","domain":"photoshop","dataset":"mockset"})" << "\n";
    }
  }
  const std::string manifest_path = (base / "manifest.jsonl").string();
  test::write_text(manifest_path, manifest.str());

  E2E e2e;
  e2e.config.datasets = {manifest_path};
  e2e.config.strategies = {PromptStrategy::holistic};
  BackendConfig backend;
  backend.kind = BackendKind::mock_oracle;
  backend.model_name = "mock-oracle";
  backend.mock.seed = 11;
  backend.mock.authentic_mean = authentic_mean;
  backend.mock.tampered_mean = tampered_mean;
  backend.mock.noise_std = 0.6;
  e2e.config.backends = {backend};
  e2e.config.concurrency_limit = 4;
  e2e.config.output_dir = (base / "out").string();
  e2e.config.cache_dir = (base / "cache").string();
  e2e.config.template_dir = REVEAL_TEMPLATE_DIR;

  e2e.result = run(e2e.config);
  const auto records = read_records(e2e.result.records_path);
  std::vector<ScoredRecord> scored;
  std::vector<LabeledPrediction> predictions;
  for (const auto& r : records) {
    predictions.push_back(
        {r.ground_truth, r.parsed ? r.predicted_label : std::nullopt});
    if (r.tampering_score) {
      scored.push_back({r.ground_truth, TamperingScore{*r.tampering_score}});
    }
  }
  e2e.auc = roc_curve(scored).auc;
  e2e.acc = classification_metrics(predictions).accuracy;
  return e2e;
}

test::TempDir e2e_dir("acceptance-e2e");
E2E forward_run;

std::string check_e2e_mock() {
  forward_run = run_mock_eval(e2e_dir, "forward", 1.8, 4.2);
  std::ostringstream detail;
  detail << std::setprecision(10) << "AUC=" << forward_run.auc
         << " ACC=" << forward_run.acc;
  require(forward_run.result.record_count == 200, "expected 200 records");
  require(forward_run.auc >= 0.90, "AUC below 0.90: " + detail.str());
  require(forward_run.acc >= 0.85, "ACC below 0.85: " + detail.str());
  if (kFrozenHolisticAuc >= 0.0) {
    require(std::abs(forward_run.auc - kFrozenHolisticAuc) < 1e-9,
            "AUC drifted from frozen regression value: " + detail.str());
    require(std::abs(forward_run.acc - kFrozenHolisticAcc) < 1e-9,
            "ACC drifted from frozen regression value: " + detail.str());
  }

  const E2E swapped = run_mock_eval(e2e_dir, "swapped", 4.2, 1.8);
  require(swapped.auc <= 0.10,
          "swapped-mean AUC not inverted: " + std::to_string(swapped.auc));
  return detail.str() + " swappedAUC=" + std::to_string(swapped.auc);
}

std::string check_report_shape() {
  const auto records = read_records(forward_run.result.records_path);
  const std::string table = render_table(records);
  require(table.find("mock-oracle") != std::string::npos, "missing model row");
  require(table.find("holistic") != std::string::npos, "missing strategy");
  require(table.find("mockset") != std::string::npos, "missing dataset column");
  require(table.find("unparsed") != std::string::npos,
          "missing unparsed column");

  // Formatting fixture: acc 0.92 / f1 ~0.92 renders as "0.92 / 0.92".
  std::vector<EvalRecord> fixture;
  const auto add = [&fixture](GroundTruth truth, GroundTruth pred) {
    EvalRecord r;
    r.sample_id = "s" + std::to_string(fixture.size());
    r.dataset = "CASIA1+";
    r.model_name = "gpt-4.1";
    r.strategy = PromptStrategy::holistic;
    r.template_version = "v";
    r.parsed = true;
    r.predicted_label = pred;
    r.ground_truth = truth;
    fixture.push_back(r);
  };
  for (int i = 0; i < 11; ++i) add(GroundTruth::tampered, GroundTruth::tampered);
  for (int i = 0; i < 12; ++i)
    add(GroundTruth::authentic, GroundTruth::authentic);
  add(GroundTruth::authentic, GroundTruth::tampered);
  add(GroundTruth::tampered, GroundTruth::authentic);
  const std::string fixture_table = render_table(fixture);
  require(fixture_table.find("0.92 / 0.92") != std::string::npos,
          "fixture cell did not render 0.92 / 0.92");
  const std::string golden = test::read_text(
      fs::path(REVEAL_TEST_FIXTURE_DIR) / "report" / "golden_table.txt");
  require(fixture_table == golden, "table diverged from golden file");

  test::TempDir out("acceptance-report");
  const auto report = render_report(records, out.str());
  require(report.roc_csvs.size() == 1, "expected one ROC CSV");
  std::ifstream roc(report.roc_csvs[0]);
  std::string header;
  std::getline(roc, header);
  require(header == "fpr,tpr", "ROC CSV header wrong");
  return "Table-1-shaped report and ROC CSVs verified";
}

std::string check_cache_resume() {
  const std::string before = test::read_text(forward_run.result.records_path);
  RunConfig config = forward_run.config;
  config.resume = true;
  const RunResult again = run(config);
  require(again.executed_calls == 0,
          "resume issued " + std::to_string(again.executed_calls) + " calls");
  require(again.records_path == forward_run.result.records_path,
          "resume did not reuse the run directory");
  require(test::read_text(again.records_path) == before,
          "records.jsonl changed under resume");
  return "0 backend invocations, records byte-identical";
}

}  // namespace

int main() {
  std::cout << "REVEAL acceptance suite\n";
  criterion("live-mode runbook documented (full-scale reproduction needs "
            "paid APIs)", 0, check_runbook);
  criterion("metrics oracle equivalence", 10, check_metrics_oracle);
  criterion("tampering-score exactness", 30, check_tampering_exactness);
  criterion("grid tiling", 5, check_grid_tiling);
  criterion("overlay determinism", 0, check_overlay_determinism);
  criterion("parser round-trip / corpus / fuzz", 30, check_parser_roundtrip);
  criterion("end-to-end mock evaluation", 60, check_e2e_mock);
  criterion("report shape", 0, check_report_shape);
  criterion("cache/resume", 0, check_cache_resume);
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
