#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "reveal/forensics.hpp"
#include "reveal/prompt_builder.hpp"

namespace reveal {

enum class BackendKind { http_chat, mock_oracle };

/// Parameters for the deterministic offline backend. Synthesizes responses
/// in the exact layout the prompt requests, with per-factor scores drawn
/// from a normal around the class mean, clamped and rounded to [1,5].
struct MockOracleConfig {
  std::uint64_t seed = 0;
  double authentic_mean = 1.8;
  double tampered_mean = 4.2;
  double noise_std = 0.6;
  double malformed_rate = 0.0;
};

struct BackendConfig {
  BackendKind kind = BackendKind::mock_oracle;
  std::string endpoint_url;  // http_chat only
  std::string model_name = "mock";
  std::string api_key_env_var;
  double temperature = 0.0;
  int max_retries = 2;
  int requests_per_minute = 60;
  double timeout_seconds = 120.0;
  MockOracleConfig mock;

  /// Throws ConfigError on invalid combinations.
  void validate() const;
};

struct ModelResponse {
  std::string text;
  std::int64_t latency_ms = 0;
  std::string backend_model;
  bool cached = false;
  int attempt_count = 1;
};

/// Monotonic clock, injectable for tests.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual std::int64_t now_ms() = 0;
  virtual void sleep_ms(std::int64_t ms) = 0;
};

std::shared_ptr<Clock> system_clock();

struct HttpResult {
  int status = 0;      // 0 = transport-level failure (no HTTP response)
  std::string body;
  std::string error;   // set when status == 0
};

/// One POST with bearer auth; implemented over cpp-httplib in production
/// and scripted fakes in tests.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpResult post_json(const std::string& url,
                               const std::string& bearer_token,
                               const std::string& json_body,
                               double timeout_seconds) = 0;
};

std::unique_ptr<Transport> make_httplib_transport();

/// Content-addressed on-disk response cache:
/// <root>/<first 2 hex of key>/<key>.txt plus a .meta JSON sidecar.
/// Concurrent readers are fine; writers serialize per key via rename.
class ResponseCache {
 public:
  explicit ResponseCache(std::string root_dir);

  struct Entry {
    std::string text;
    std::string backend_model;
  };

  /// nullopt on miss; CacheError on a present-but-corrupt entry.
  std::optional<Entry> get(const std::string& key) const;
  void put(const std::string& key, const Entry& entry) const;

  const std::string& root() const { return root_; }

 private:
  std::string root_;
};

/// Sliding-window limiter: at most `requests_per_minute` acquisitions in
/// any 60-second window, shared across all concurrent callers.
class RateLimiter {
 public:
  RateLimiter(int requests_per_minute, std::shared_ptr<Clock> clock);
  void acquire();

 private:
  int limit_;
  std::shared_ptr<Clock> clock_;
  std::mutex mutex_;
  std::deque<std::int64_t> timestamps_;
};

/// Stable digest over (image bytes, system text, user text, template
/// version, model name, temperature); collision-resistant, hex encoded.
std::string cache_key(const PromptSpec& spec, const BackendConfig& config);

/// Deterministic synthetic response for (spec, hint) under `config`.
std::string mock_oracle_response(const PromptSpec& spec, GroundTruth hint,
                                 const BackendConfig& config);

/// Dispatches prompts to one backend with caching, retries with
/// exponential backoff, and rate limiting. Safe for concurrent use.
class ModelGateway {
 public:
  ModelGateway(BackendConfig config, std::optional<std::string> cache_dir,
               std::shared_ptr<Clock> clock = system_clock(),
               std::unique_ptr<Transport> transport = nullptr);

  /// For mock_oracle the hint must be present (responses are synthesized
  /// conditioned on it); for http_chat it is ignored and never sent.
  ModelResponse complete(const PromptSpec& spec,
                         std::optional<GroundTruth> ground_truth_hint);

  const BackendConfig& config() const { return config_; }

 private:
  ModelResponse live_http(const PromptSpec& spec);

  BackendConfig config_;
  std::optional<ResponseCache> cache_;
  std::shared_ptr<Clock> clock_;
  std::unique_ptr<Transport> transport_;
  std::unique_ptr<RateLimiter> limiter_;
};

}  // namespace reveal
