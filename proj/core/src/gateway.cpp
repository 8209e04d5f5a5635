#include "reveal/gateway.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "reveal/digest.hpp"
#include "reveal/errors.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace reveal {

void BackendConfig::validate() const {
  if (model_name.empty()) throw ConfigError("backend model_name is empty");
  if (temperature < 0.0) throw ConfigError("temperature must be >= 0");
  if (max_retries < 0) throw ConfigError("max_retries must be >= 0");
  if (requests_per_minute < 1) {
    throw ConfigError("requests_per_minute must be >= 1");
  }
  if (kind == BackendKind::http_chat && endpoint_url.empty()) {
    throw ConfigError("http_chat backend requires endpoint_url");
  }
  if (kind == BackendKind::mock_oracle) {
    if (mock.authentic_mean < 1.0 || mock.authentic_mean > 5.0 ||
        mock.tampered_mean < 1.0 || mock.tampered_mean > 5.0) {
      throw ConfigError("mock oracle means must lie in [1,5]");
    }
    if (mock.noise_std < 0.0) throw ConfigError("noise_std must be >= 0");
    if (mock.malformed_rate < 0.0 || mock.malformed_rate > 1.0) {
      throw ConfigError("malformed_rate must lie in [0,1]");
    }
  }
}

// ---------------------------------------------------------------------------
// Clock
// ---------------------------------------------------------------------------

namespace {

class SteadyClock : public Clock {
 public:
  std::int64_t now_ms() override {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
  }
  void sleep_ms(std::int64_t ms) override {
    std::this_thread::sleep_for(std::chrono::milliseconds(ms));
  }
};

std::string base64_encode(const std::vector<std::uint8_t>& data) {
  static const char* alphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= data.size(); i += 3) {
    const std::uint32_t n = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
    out.push_back(alphabet[(n >> 18) & 63]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out.push_back(alphabet[(n >> 6) & 63]);
    out.push_back(alphabet[n & 63]);
  }
  if (i + 1 == data.size()) {
    const std::uint32_t n = data[i] << 16;
    out.push_back(alphabet[(n >> 18) & 63]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out += "==";
  } else if (i + 2 == data.size()) {
    const std::uint32_t n = (data[i] << 16) | (data[i + 1] << 8);
    out.push_back(alphabet[(n >> 18) & 63]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out.push_back(alphabet[(n >> 6) & 63]);
    out += "=";
  }
  return out;
}

std::string image_mime(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() >= 2 && bytes[0] == 0xFF && bytes[1] == 0xD8) {
    return "image/jpeg";
  }
  return "image/png";
}

}  // namespace

std::shared_ptr<Clock> system_clock() {
  static auto clock = std::make_shared<SteadyClock>();
  return clock;
}

// ---------------------------------------------------------------------------
// Cache
// ---------------------------------------------------------------------------

ResponseCache::ResponseCache(std::string root_dir) : root_(std::move(root_dir)) {
  fs::create_directories(root_);
}

namespace {

std::string cache_text_path(const std::string& root, const std::string& key) {
  return root + "/" + key.substr(0, 2) + "/" + key + ".txt";
}

}  // namespace

std::optional<ResponseCache::Entry> ResponseCache::get(
    const std::string& key) const {
  const std::string text_path = cache_text_path(root_, key);
  std::ifstream text_in(text_path, std::ios::binary);
  if (!text_in) return std::nullopt;
  std::ostringstream text;
  text << text_in.rdbuf();

  const std::string meta_path = text_path.substr(0, text_path.size() - 4) +
                                ".meta";
  std::ifstream meta_in(meta_path, std::ios::binary);
  if (!meta_in) {
    throw CacheError("cache entry missing meta sidecar: " + key);
  }
  json meta;
  try {
    meta_in >> meta;
  } catch (const json::exception& e) {
    throw CacheError("corrupt cache meta for " + key + ": " + e.what());
  }
  if (!meta.contains("model") || !meta["model"].is_string()) {
    throw CacheError("corrupt cache meta for " + key);
  }
  return Entry{text.str(), meta["model"].get<std::string>()};
}

void ResponseCache::put(const std::string& key, const Entry& entry) const {
  const std::string text_path = cache_text_path(root_, key);
  fs::create_directories(fs::path(text_path).parent_path());
  // Write to a temp name, then rename; readers never see partial entries.
  const std::string tmp = text_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << entry.text;
  }
  const std::string meta_path = text_path.substr(0, text_path.size() - 4) +
                                ".meta";
  const std::string meta_tmp = meta_path + ".tmp";
  {
    json meta = {{"model", entry.backend_model}, {"key", key}};
    std::ofstream out(meta_tmp, std::ios::binary | std::ios::trunc);
    out << meta.dump(2) << "\n";
  }
  fs::rename(meta_tmp, meta_path);
  fs::rename(tmp, text_path);
}

// ---------------------------------------------------------------------------
// Rate limiter
// ---------------------------------------------------------------------------

RateLimiter::RateLimiter(int requests_per_minute, std::shared_ptr<Clock> clock)
    : limit_(requests_per_minute), clock_(std::move(clock)) {}

void RateLimiter::acquire() {
  std::unique_lock<std::mutex> lock(mutex_);
  for (;;) {
    const std::int64_t now = clock_->now_ms();
    while (!timestamps_.empty() && now - timestamps_.front() >= 60'000) {
      timestamps_.pop_front();
    }
    if (static_cast<int>(timestamps_.size()) < limit_) {
      timestamps_.push_back(now);
      return;
    }
    const std::int64_t wait = timestamps_.front() + 60'000 - now;
    lock.unlock();
    clock_->sleep_ms(std::max<std::int64_t>(wait, 1));
    lock.lock();
  }
}

// ---------------------------------------------------------------------------
// Cache key
// ---------------------------------------------------------------------------

std::string cache_key(const PromptSpec& spec, const BackendConfig& config) {
  std::ostringstream material;
  material << sha256_hex(spec.image_payload) << "\n"
           << sha256_hex(spec.system_text) << "\n"
           << sha256_hex(spec.user_text) << "\n"
           << spec.template_version << "\n"
           << config.model_name << "\n";
  char temp[32];
  std::snprintf(temp, sizeof(temp), "%.6f", config.temperature);
  material << temp;
  return sha256_hex(material.str());
}

// ---------------------------------------------------------------------------
// Mock oracle
// ---------------------------------------------------------------------------

std::string mock_oracle_response(const PromptSpec& spec, GroundTruth hint,
                                 const BackendConfig& config) {
  const MockOracleConfig& mock = config.mock;
  // Seed from (configured seed, prompt identity) so identical specs get
  // identical responses while distinct images decorrelate.
  const std::string id_hex = sha256_hex(
      sha256_hex(spec.image_payload) + spec.schema_id + spec.user_text);
  std::uint64_t mix = mock.seed;
  for (int i = 0; i < 16; ++i) {
    mix = mix * 31 + static_cast<std::uint64_t>(id_hex[i]);
  }
  std::mt19937_64 rng(mix);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double mean = hint == GroundTruth::tampered ? mock.tampered_mean
                                                    : mock.authentic_mean;
  std::normal_distribution<double> noise(mean, mock.noise_std);
  const auto draw_score = [&] {
    const double raw = mock.noise_std == 0.0 ? mean : noise(rng);
    return std::clamp(static_cast<int>(std::lround(raw)), 1, 5);
  };

  if (unit(rng) < mock.malformed_rate) {
    return "Hmm, it is hard to tell what is going on in this picture.";
  }

  if (spec.schema_id == "binary_v1") {
    return std::string("ANSWER: ") +
           (draw_score() >= 3 ? "FAKE" : "REAL") + "\n";
  }

  if (spec.schema_id == "holistic_v1") {
    std::ostringstream out;
    int sum = 0;
    for (auto f : canonical_factors()) {
      const int s = draw_score();
      sum += s;
      out << "FACTOR: " << to_string(f) << " | SCORE: " << s
          << " | WHY: Synthetic assessment of " << to_string(f) << ".\n";
    }
    const bool tampered = sum >= 3 * static_cast<int>(kFactorCount);
    out << "LABEL: " << (tampered ? "TAMPERED" : "AUTHENTIC") << "\n";
    out << "REASONING: Synthetic verdict driven by the average factor "
           "score.\n";
    return out.str();
  }

  if (spec.schema_id == "region_v1") {
    std::ostringstream out;
    const bool tampered = draw_score() >= 3;
    const bool cue = tampered && unit(rng) < 0.5;
    out << "HOLISTIC_CUE: " << (cue ? "YES" : "NO") << "\n";
    if (tampered && !cue) {
      const int cell = 1 + static_cast<int>(unit(rng) * 9) % 9;
      out << "CELL: " << cell
          << " | ANOMALOUS: YES | NOTE: Synthetic local inconsistency.\n";
    }
    out << "LABEL: " << (tampered ? "TAMPERED" : "AUTHENTIC") << "\n";
    out << "EXPLANATION: Synthetic region-wise verdict.\n";
    return out.str();
  }

  throw ConfigError("mock oracle cannot answer schema: " + spec.schema_id);
}

// ---------------------------------------------------------------------------
// Gateway
// ---------------------------------------------------------------------------

ModelGateway::ModelGateway(BackendConfig config,
                           std::optional<std::string> cache_dir,
                           std::shared_ptr<Clock> clock,
                           std::unique_ptr<Transport> transport)
    : config_(std::move(config)),
      clock_(std::move(clock)),
      transport_(std::move(transport)) {
  config_.validate();
  if (cache_dir && !cache_dir->empty()) cache_.emplace(*cache_dir);
  if (config_.kind == BackendKind::http_chat && !transport_) {
    transport_ = make_httplib_transport();
  }
  limiter_ =
      std::make_unique<RateLimiter>(config_.requests_per_minute, clock_);
}

ModelResponse ModelGateway::complete(
    const PromptSpec& spec, std::optional<GroundTruth> ground_truth_hint) {
  const std::string key = cache_key(spec, config_);
  if (cache_) {
    try {
      if (auto entry = cache_->get(key)) {
        return {entry->text, 0, entry->backend_model, true, 1};
      }
    } catch (const CacheError&) {
      // Corrupt entry; fall through to a live call.
    }
  }

  ModelResponse response;
  if (config_.kind == BackendKind::mock_oracle) {
    if (!ground_truth_hint) {
      throw ConfigError("mock oracle requires a ground-truth hint");
    }
    const std::int64_t start = clock_->now_ms();
    response.text = mock_oracle_response(spec, *ground_truth_hint, config_);
    response.latency_ms = clock_->now_ms() - start;
    response.backend_model = config_.model_name;
  } else {
    response = live_http(spec);
  }

  if (cache_) {
    cache_->put(key, {response.text, response.backend_model});
  }
  return response;
}

ModelResponse ModelGateway::live_http(const PromptSpec& spec) {
  std::string api_key;
  if (!config_.api_key_env_var.empty()) {
    const char* value = std::getenv(config_.api_key_env_var.c_str());
    if (!value || !*value) {
      throw ConfigError("API key env var not set: " + config_.api_key_env_var);
    }
    api_key = value;
  }

  const std::string data_url = "data:" + image_mime(spec.image_payload) +
                               ";base64," +
                               base64_encode(spec.image_payload);
  const json body = {
      {"model", config_.model_name},
      {"temperature", config_.temperature},
      {"messages",
       {{{"role", "system"}, {"content", spec.system_text}},
        {{"role", "user"},
         {"content",
          {{{"type", "text"}, {"text", spec.user_text}},
           {{"type", "image_url"},
            {"image_url", {{"url", data_url}}}}}}}}},
  };
  const std::string body_str = body.dump();

  HttpResult last;
  for (int attempt = 1; attempt <= config_.max_retries + 1; ++attempt) {
    limiter_->acquire();
    const std::int64_t start = clock_->now_ms();
    last = transport_->post_json(config_.endpoint_url, api_key, body_str,
                                 config_.timeout_seconds);
    const std::int64_t latency = clock_->now_ms() - start;

    if (last.status == 200) {
      try {
        const json parsed = json::parse(last.body);
        std::string text =
            parsed.at("choices").at(0).at("message").at("content")
                .get<std::string>();
        return {std::move(text), latency, config_.model_name, false, attempt};
      } catch (const json::exception& e) {
        throw TransportError(
            std::string("malformed chat-completions response: ") + e.what(),
            200);
      }
    }
    const bool retryable =
        last.status == 0 || last.status == 429 || last.status >= 500;
    if (!retryable || attempt == config_.max_retries + 1) break;
    // Exponential backoff: 500ms, 1s, 2s, ...
    clock_->sleep_ms(500LL << (attempt - 1));
  }
  std::string detail = last.status == 0 ? last.error
                                        : "HTTP " + std::to_string(last.status);
  throw TransportError("backend call failed after retries: " + detail,
                       last.status);
}

}  // namespace reveal
