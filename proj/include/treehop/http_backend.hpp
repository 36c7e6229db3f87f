#pragma once

#include <string>
#include <vector>

#include "treehop/policy.hpp"

namespace treehop {

/// Connection settings for a chat-completions-style endpoint. The API token
/// is read from the named environment variable, never from config files.
struct HttpBackendConfig {
  std::string base_url;  // e.g. "http://localhost:8080"
  std::string path = "/v1/chat/completions";
  std::string model;
  std::string api_key_env = "TREEHOP_API_KEY";
  std::string system_prompt;
  int timeout_ms = 30000;
  int max_retries = 3;      // attempts, not extra retries
  int backoff_base_ms = 250;
};

/// Splits "http://host[:port]" into host and port. Throws ConfigError on
/// anything else (TLS endpoints need a terminating proxy).
std::pair<std::string, int> parse_http_base_url(const std::string& base_url);

/// Chat-endpoint client with retry and exponential backoff. Safe for
/// concurrent calls (one connection per call).
class HttpChatBackend : public PolicyBackend {
 public:
  explicit HttpChatBackend(HttpBackendConfig config);

  std::string generate(const std::string& prompt, const SamplingParams& params) override;
  std::string backend_id() const override;

  const HttpBackendConfig& config() const { return config_; }

 private:
  HttpBackendConfig config_;
  std::string host_;
  int port_;
};

/// Embedding-endpoint client used by the optional retrieval re-ranker.
/// POSTs {"model", "input": [texts]} and expects {"data": [{"embedding":
/// [...]}, ...]} in input order.
class HttpEmbeddingClient {
 public:
  explicit HttpEmbeddingClient(HttpBackendConfig config);

  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) const;
  std::string backend_id() const;

 private:
  HttpBackendConfig config_;
  std::string host_;
  int port_;
};

}  // namespace treehop
