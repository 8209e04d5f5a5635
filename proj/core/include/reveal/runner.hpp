#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "reveal/gateway.hpp"
#include "reveal/records.hpp"

namespace reveal {

struct RunConfig {
  std::vector<std::string> datasets;  // manifest paths
  std::vector<PromptStrategy> strategies;
  std::vector<BackendConfig> backends;
  int concurrency_limit = 1;
  std::string output_dir = "out";
  std::string cache_dir;  // empty disables caching; REVEAL_CACHE_DIR overrides
  bool resume = false;
  std::string template_dir;  // empty = default resolution

  void validate() const;
};

/// Reads a RunConfig from a JSON file.
RunConfig load_run_config(const std::string& path);

struct PlannedCall {
  std::string sample_id;
  std::string dataset;
  PromptStrategy strategy = PromptStrategy::baseline;
  std::string model_name;
};

/// The full sample x strategy x backend matrix, in execution order.
/// Validates manifests (and image existence) as a side effect.
std::vector<PlannedCall> plan(const RunConfig& config);

struct RunResult {
  std::string records_path;
  std::size_t record_count = 0;
  std::size_t executed_calls = 0;  // complete() invocations this run
  std::size_t resumed_records = 0;
};

/// Tests inject a scripted transport per backend via `transport_factory`.
using TransportFactory =
    std::function<std::unique_ptr<Transport>(const BackendConfig&)>;

RunResult run(const RunConfig& config,
              std::shared_ptr<Clock> clock = system_clock(),
              TransportFactory transport_factory = nullptr);

}  // namespace reveal
