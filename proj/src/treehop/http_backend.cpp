#include "treehop/http_backend.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "treehop/errors.hpp"

namespace treehop {

namespace {

std::string read_api_key(const std::string& env_name) {
  if (env_name.empty()) return {};
  const char* value = std::getenv(env_name.c_str());
  return value ? std::string(value) : std::string();
}

bool retryable_status(int status) {
  return status == 429 || (status >= 500 && status < 600);
}

// Runs `attempt` up to max_retries times with exponential backoff, throwing
// TransportError carrying the last failure.
template <typename Fn>
nlohmann::json with_retries(const HttpBackendConfig& config, const std::string& what,
                            Fn&& attempt) {
  std::string last_error;
  for (int try_index = 0; try_index < config.max_retries; ++try_index) {
    if (try_index > 0) {
      const auto delay =
          std::chrono::milliseconds(config.backoff_base_ms) * (1LL << (try_index - 1));
      std::this_thread::sleep_for(delay);
    }
    try {
      return attempt();
    } catch (const TransportError& e) {
      last_error = e.what();
    }
  }
  throw TransportError(what + " failed after " + std::to_string(config.max_retries) +
                       " attempts: " + last_error);
}

nlohmann::json post_json(const std::string& host, int port, const HttpBackendConfig& config,
                         const nlohmann::json& body) {
  httplib::Client client(host, port);
  client.set_connection_timeout(0, config.timeout_ms * 1000LL);
  client.set_read_timeout(config.timeout_ms / 1000, (config.timeout_ms % 1000) * 1000LL);
  client.set_write_timeout(config.timeout_ms / 1000, (config.timeout_ms % 1000) * 1000LL);

  httplib::Headers headers;
  const std::string key = read_api_key(config.api_key_env);
  if (!key.empty()) headers.emplace("Authorization", "Bearer " + key);

  const auto res = client.Post(config.path, headers, body.dump(), "application/json");
  if (!res) {
    throw TransportError("no response from " + host + ":" + std::to_string(port) + " (" +
                         httplib::to_string(res.error()) + ")");
  }
  if (res->status != 200) {
    const std::string detail = res->body.substr(0, 200);
    if (retryable_status(res->status)) {
      throw TransportError("HTTP " + std::to_string(res->status) + ": " + detail);
    }
    // Non-retryable client errors abort immediately.
    throw Error("HTTP " + std::to_string(res->status) + " from " + config.path + ": " + detail);
  }
  try {
    return nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception& e) {
    throw TransportError(std::string("unparseable response body: ") + e.what());
  }
}

}  // namespace

std::pair<std::string, int> parse_http_base_url(const std::string& base_url) {
  const std::string scheme = "http://";
  if (base_url.rfind(scheme, 0) != 0) {
    throw ConfigError("base_url must start with http:// (got \"" + base_url +
                      "\"); terminate TLS in a proxy if the endpoint is https");
  }
  std::string rest = base_url.substr(scheme.size());
  while (!rest.empty() && rest.back() == '/') rest.pop_back();
  if (rest.empty()) throw ConfigError("base_url has no host: " + base_url);
  const std::size_t colon = rest.find(':');
  if (colon == std::string::npos) return {rest, 80};
  const std::string host = rest.substr(0, colon);
  if (host.empty()) throw ConfigError("base_url has no host: " + base_url);
  try {
    return {host, std::stoi(rest.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ConfigError("base_url has a bad port: " + base_url);
  }
}

HttpChatBackend::HttpChatBackend(HttpBackendConfig config) : config_(std::move(config)) {
  std::tie(host_, port_) = parse_http_base_url(config_.base_url);
}

std::string HttpChatBackend::generate(const std::string& prompt, const SamplingParams& params) {
  nlohmann::json messages = nlohmann::json::array();
  if (!config_.system_prompt.empty()) {
    messages.push_back({{"role", "system"}, {"content", config_.system_prompt}});
  }
  messages.push_back({{"role", "user"}, {"content", prompt}});
  nlohmann::json body{
      {"model", config_.model},
      {"messages", std::move(messages)},
      {"temperature", params.temperature},
      {"top_p", params.top_p},
      {"max_tokens", params.max_tokens},
  };
  if (params.seed) body["seed"] = *params.seed;

  const nlohmann::json res = with_retries(config_, "chat completion", [&] {
    return post_json(host_, port_, config_, body);
  });
  try {
    return res.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw TransportError(std::string("chat response missing choices[0].message.content: ") +
                         e.what());
  }
}

std::string HttpChatBackend::backend_id() const {
  return "http:" + config_.model + "@" + config_.base_url;
}

HttpEmbeddingClient::HttpEmbeddingClient(HttpBackendConfig config) : config_(std::move(config)) {
  if (config_.path == "/v1/chat/completions") config_.path = "/v1/embeddings";
  std::tie(host_, port_) = parse_http_base_url(config_.base_url);
}

std::vector<std::vector<double>> HttpEmbeddingClient::embed(
    const std::vector<std::string>& texts) const {
  const nlohmann::json body{{"model", config_.model}, {"input", texts}};
  const nlohmann::json res = with_retries(config_, "embedding", [&] {
    return post_json(host_, port_, config_, body);
  });
  std::vector<std::vector<double>> out;
  try {
    for (const auto& item : res.at("data")) {
      out.push_back(item.at("embedding").get<std::vector<double>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw TransportError(std::string("embedding response missing data[].embedding: ") + e.what());
  }
  if (out.size() != texts.size()) {
    throw TransportError("embedding response has " + std::to_string(out.size()) +
                         " vectors for " + std::to_string(texts.size()) + " inputs");
  }
  return out;
}

std::string HttpEmbeddingClient::backend_id() const {
  return "http-embeddings:" + config_.model + "@" + config_.base_url;
}

}  // namespace treehop
