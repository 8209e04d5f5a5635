#include "reveal/runner.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "reveal/grid_overlay.hpp"
#include "reveal/image.hpp"
#include "reveal/manifest.hpp"
#include "reveal/metrics.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace reveal {

void RunConfig::validate() const {
  if (datasets.empty()) throw ConfigError("run config: no datasets");
  if (strategies.empty()) throw ConfigError("run config: no strategies");
  if (backends.empty()) throw ConfigError("run config: no backends");
  if (concurrency_limit < 1) {
    throw ConfigError("run config: concurrency_limit must be >= 1");
  }
  for (const auto& b : backends) b.validate();
}

namespace {

BackendConfig backend_from_json(const json& obj) {
  BackendConfig b;
  const std::string kind = obj.value("kind", "mock_oracle");
  if (kind == "http_chat") {
    b.kind = BackendKind::http_chat;
  } else if (kind == "mock_oracle") {
    b.kind = BackendKind::mock_oracle;
  } else {
    throw ConfigError("unknown backend kind: " + kind);
  }
  b.endpoint_url = obj.value("endpoint_url", "");
  b.model_name = obj.value("model_name", "mock");
  b.api_key_env_var = obj.value("api_key_env_var", "");
  b.temperature = obj.value("temperature", 0.0);
  b.max_retries = obj.value("max_retries", 2);
  b.requests_per_minute = obj.value("requests_per_minute", 60);
  b.timeout_seconds = obj.value("timeout_seconds", 120.0);
  if (obj.contains("mock")) {
    const json& m = obj["mock"];
    b.mock.seed = m.value("seed", std::uint64_t{0});
    b.mock.authentic_mean = m.value("authentic_mean", 1.8);
    b.mock.tampered_mean = m.value("tampered_mean", 4.2);
    b.mock.noise_std = m.value("noise_std", 0.6);
    b.mock.malformed_rate = m.value("malformed_rate", 0.0);
  }
  return b;
}

std::string effective_cache_dir(const RunConfig& config) {
  if (const char* env = std::getenv("REVEAL_CACHE_DIR"); env && *env) {
    return env;
  }
  return config.cache_dir;
}

std::string pick_run_dir(const RunConfig& config) {
  fs::create_directories(config.output_dir);
  if (config.resume) {
    // Latest existing run-* directory with a records file, if any.
    std::string latest;
    for (const auto& entry : fs::directory_iterator(config.output_dir)) {
      if (!entry.is_directory()) continue;
      const std::string name = entry.path().filename().string();
      if (name.rfind("run-", 0) != 0) continue;
      if (!fs::exists(entry.path() / "records.jsonl")) continue;
      if (name > latest) latest = name;
    }
    if (!latest.empty()) {
      return (fs::path(config.output_dir) / latest).string();
    }
  }
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::tm tm_buf{};
  gmtime_r(&now, &tm_buf);
  std::strftime(stamp, sizeof(stamp), "%Y%m%d-%H%M%S", &tm_buf);
  std::string dir =
      (fs::path(config.output_dir) / (std::string("run-") + stamp)).string();
  for (int suffix = 1; fs::exists(dir); ++suffix) {
    dir = (fs::path(config.output_dir) /
           (std::string("run-") + stamp + "-" + std::to_string(suffix)))
              .string();
  }
  fs::create_directories(dir);
  return dir;
}

struct Task {
  const Sample* sample;
  PromptStrategy strategy;
  std::size_t backend_index;
};

}  // namespace

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open run config: " + path);
  json obj;
  try {
    in >> obj;
  } catch (const json::exception& e) {
    throw ConfigError("invalid run config JSON: " + std::string(e.what()));
  }
  RunConfig config;
  config.datasets = obj.value("datasets", std::vector<std::string>{});
  for (const auto& s :
       obj.value("strategies", std::vector<std::string>{})) {
    const auto strategy = parse_prompt_strategy(s);
    if (!strategy) throw ConfigError("unknown strategy: " + s);
    config.strategies.push_back(*strategy);
  }
  if (obj.contains("backends")) {
    for (const auto& b : obj["backends"]) {
      config.backends.push_back(backend_from_json(b));
    }
  }
  config.concurrency_limit = obj.value("concurrency_limit", 1);
  config.output_dir = obj.value("output_dir", "out");
  config.cache_dir = obj.value("cache_dir", "");
  config.resume = obj.value("resume", false);
  config.template_dir = obj.value("template_dir", "");

  // Manifest paths resolve against the config file's directory.
  const fs::path base = fs::path(path).parent_path();
  for (auto& d : config.datasets) {
    if (fs::path(d).is_relative()) d = (base / d).string();
  }
  config.validate();
  return config;
}

std::vector<PlannedCall> plan(const RunConfig& config) {
  config.validate();
  std::vector<PlannedCall> calls;
  for (const auto& manifest_path : config.datasets) {
    const auto samples = load_manifest(manifest_path);
    for (const auto& sample : samples) {
      for (const auto strategy : config.strategies) {
        for (const auto& backend : config.backends) {
          calls.push_back(
              {sample.id, sample.dataset, strategy, backend.model_name});
        }
      }
    }
  }
  return calls;
}

RunResult run(const RunConfig& config, std::shared_ptr<Clock> clock,
              TransportFactory transport_factory) {
  config.validate();

  std::vector<std::vector<Sample>> manifests;
  for (const auto& path : config.datasets) {
    manifests.push_back(load_manifest(path));
  }

  const std::string run_dir = pick_run_dir(config);
  const std::string records_path =
      (fs::path(run_dir) / "records.jsonl").string();
  {
    // Fail before any backend spend if the output location is unusable.
    std::ofstream probe(records_path, std::ios::app);
    if (!probe) throw ConfigError("output dir not writable: " + run_dir);
  }

  std::map<std::string, EvalRecord> prior;
  if (config.resume && fs::exists(records_path)) {
    for (auto& r : read_records(records_path)) {
      prior.emplace(r.identity(), std::move(r));
    }
  }

  PromptBuilder builder(config.template_dir);
  const std::string cache_dir = effective_cache_dir(config);

  std::vector<std::unique_ptr<ModelGateway>> gateways;
  for (const auto& backend : config.backends) {
    std::unique_ptr<Transport> transport;
    if (transport_factory) transport = transport_factory(backend);
    gateways.push_back(std::make_unique<ModelGateway>(
        backend,
        cache_dir.empty() ? std::nullopt
                          : std::make_optional(cache_dir),
        clock, std::move(transport)));
  }

  std::vector<Task> tasks;
  for (const auto& samples : manifests) {
    for (const auto& sample : samples) {
      for (const auto strategy : config.strategies) {
        for (std::size_t b = 0; b < config.backends.size(); ++b) {
          tasks.push_back({&sample, strategy, b});
        }
      }
    }
  }

  std::vector<EvalRecord> records(tasks.size());
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> executed{0};
  std::atomic<std::size_t> resumed{0};

  // Original and overlaid image bytes, shared across strategies/backends.
  std::mutex image_mutex;
  std::map<std::string, std::shared_ptr<std::vector<std::uint8_t>>> originals;
  std::map<std::string, std::shared_ptr<std::vector<std::uint8_t>>> overlaid;

  const auto image_bytes = [&](const std::string& path, bool with_overlay) {
    std::unique_lock<std::mutex> lock(image_mutex);
    auto& memo = with_overlay ? overlaid : originals;
    if (auto it = memo.find(path); it != memo.end()) return it->second;
    lock.unlock();
    std::shared_ptr<std::vector<std::uint8_t>> bytes;
    if (with_overlay) {
      const RasterImage image = load_image(path);
      bytes = std::make_shared<std::vector<std::uint8_t>>(
          encode_png(overlay_grid(image, OverlayStyle{})));
    } else {
      bytes = std::make_shared<std::vector<std::uint8_t>>(
          read_file_bytes(path));
    }
    lock.lock();
    return memo.emplace(path, std::move(bytes)).first->second;
  };

  std::exception_ptr fatal;
  std::mutex fatal_mutex;

  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= tasks.size()) return;
      {
        std::lock_guard<std::mutex> lock(fatal_mutex);
        if (fatal) return;
      }
      const Task& task = tasks[i];
      const Sample& sample = *task.sample;
      EvalRecord record;
      record.sample_id = sample.id;
      record.dataset = sample.dataset;
      record.domain = sample.domain;
      record.model_name = config.backends[task.backend_index].model_name;
      record.strategy = task.strategy;
      record.template_version = builder.template_version();
      record.ground_truth = sample.ground_truth;

      if (auto it = prior.find(record.identity()); it != prior.end()) {
        records[i] = it->second;
        resumed.fetch_add(1);
        continue;
      }

      try {
        const bool region = task.strategy == PromptStrategy::region_wise;
        const auto bytes = image_bytes(sample.image_path, region);
        const PromptSpec spec = builder.build(task.strategy, *bytes);
        const ModelResponse response =
            gateways[task.backend_index]->complete(spec, sample.ground_truth);
        executed.fetch_add(1);
        record.raw_response = response.text;
        record.latency_ms = response.latency_ms;
        record.cached = response.cached;

        const ParseOutcome outcome = parse(response.text, spec.schema_id);
        if (outcome.ok()) {
          record.parsed = true;
          record.repairs = outcome.repairs_applied();
          std::visit(
              [&record](const auto& verdict) {
                using T = std::decay_t<decltype(verdict)>;
                if constexpr (std::is_same_v<T, BinaryVerdict>) {
                  record.predicted_label = verdict.global_label;
                } else if constexpr (std::is_same_v<T, HolisticVerdict>) {
                  record.predicted_label = verdict.global_label();
                  record.tampering_score = tampering_score(verdict).value;
                  std::array<int, kFactorCount> scores{};
                  for (std::size_t f = 0; f < kFactorCount; ++f) {
                    scores[f] = verdict.assessments()[f].score.value();
                  }
                  record.factor_scores = scores;
                } else {
                  record.predicted_label = verdict.global_label();
                }
              },
              outcome.verdict());
        } else {
          record.parse_error = outcome.error().kind;
          record.parse_error_detail = outcome.error().detail;
        }
      } catch (const ConfigError&) {
        std::lock_guard<std::mutex> lock(fatal_mutex);
        if (!fatal) fatal = std::current_exception();
        return;
      } catch (const Error& e) {
        // Transport/image failures stay embedded in the record.
        record.parse_error = ParseErrorKind::empty_response;
        record.parse_error_detail = e.what();
      }
      records[i] = std::move(record);
    }
  };

  const std::size_t thread_count = std::min<std::size_t>(
      static_cast<std::size_t>(config.concurrency_limit), tasks.size());
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t + 1 < std::max<std::size_t>(thread_count, 1); ++t) {
    threads.emplace_back(worker);
  }
  worker();
  for (auto& t : threads) t.join();
  if (fatal) std::rethrow_exception(fatal);

  write_records(records_path, records);
  return {records_path, records.size(), executed.load(), resumed.load()};
}

}  // namespace reveal
