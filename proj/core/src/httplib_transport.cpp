#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "reveal/errors.hpp"
#include "reveal/gateway.hpp"

namespace reveal {

namespace {

/// Splits "https://host[:port]/path" into (scheme://host[:port], /path).
std::pair<std::string, std::string> split_url(const std::string& url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("endpoint URL missing scheme: " + url);
  }
  const std::size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

class HttplibTransport : public Transport {
 public:
  HttpResult post_json(const std::string& url, const std::string& bearer_token,
                       const std::string& json_body,
                       double timeout_seconds) override {
    const auto [origin, path] = split_url(url);
    httplib::Client client(origin);
    client.set_connection_timeout(std::chrono::milliseconds(
        static_cast<int>(timeout_seconds * 1000)));
    client.set_read_timeout(std::chrono::milliseconds(
        static_cast<int>(timeout_seconds * 1000)));
    httplib::Headers headers;
    if (!bearer_token.empty()) {
      headers.emplace("Authorization", "Bearer " + bearer_token);
    }
    auto result = client.Post(path, headers, json_body, "application/json");
    if (!result) {
      return {0, "", httplib::to_string(result.error())};
    }
    return {result->status, result->body, ""};
  }
};

}  // namespace

std::unique_ptr<Transport> make_httplib_transport() {
  return std::make_unique<HttplibTransport>();
}

}  // namespace reveal
