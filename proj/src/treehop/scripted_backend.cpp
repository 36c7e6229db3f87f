#include "treehop/scripted_backend.hpp"

#include <fstream>

#include "treehop/errors.hpp"

namespace treehop {

void ScriptedBackend::add_rule(std::string needle, std::vector<std::string> responses,
                               bool repeat_last) {
  std::lock_guard lock(mutex_);
  rules_.push_back(Rule{std::move(needle), std::move(responses), 0, repeat_last});
}

void ScriptedBackend::set_default_response(std::string response) {
  std::lock_guard lock(mutex_);
  default_response_ = std::move(response);
}

std::string ScriptedBackend::generate(const std::string& prompt, const SamplingParams&) {
  std::lock_guard lock(mutex_);
  captured_.push_back(prompt);
  for (Rule& rule : rules_) {
    if (prompt.find(rule.needle) == std::string::npos) continue;
    if (rule.next < rule.responses.size()) {
      const std::size_t i = rule.next++;
      return rule.responses[i];
    }
    if (rule.repeat_last && !rule.responses.empty()) {
      return rule.responses.back();
    }
    // exhausted, fall through to later rules
  }
  if (default_response_) return *default_response_;
  throw GenerationError("scripted backend has no response for prompt: " +
                        prompt.substr(0, 120));
}

std::vector<std::string> ScriptedBackend::captured_prompts() const {
  std::lock_guard lock(mutex_);
  return captured_;
}

std::vector<std::string> ScriptedBackend::captured_containing(const std::string& needle) const {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out;
  for (const std::string& p : captured_) {
    if (p.find(needle) != std::string::npos) out.push_back(p);
  }
  return out;
}

std::shared_ptr<ScriptedBackend> ScriptedBackend::from_json(const nlohmann::json& doc) {
  auto backend = std::make_shared<ScriptedBackend>();
  if (!doc.is_object()) throw ConfigError("scripted backend: script must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "rules" && key != "default") {
      throw ConfigError("scripted backend: unknown script key \"" + key + "\"");
    }
    (void)value;
  }
  if (doc.contains("rules")) {
    for (const auto& rule : doc.at("rules")) {
      for (const auto& [key, value] : rule.items()) {
        if (key != "match" && key != "responses" && key != "repeat_last") {
          throw ConfigError("scripted backend: unknown rule key \"" + key + "\"");
        }
        (void)value;
      }
      backend->add_rule(rule.at("match").get<std::string>(),
                        rule.at("responses").get<std::vector<std::string>>(),
                        rule.value("repeat_last", true));
    }
  }
  if (doc.contains("default")) {
    backend->set_default_response(doc.at("default").get<std::string>());
  }
  return backend;
}

std::shared_ptr<ScriptedBackend> ScriptedBackend::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("scripted backend: cannot open script file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("scripted backend: bad script file " + path + ": " + e.what());
  }
  return from_json(doc);
}

}  // namespace treehop
