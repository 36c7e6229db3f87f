#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treehop/policy.hpp"

namespace treehop {

/// Deterministic backend for tests and offline runs. Responses are scripted
/// as rules keyed by prompt content: the first rule whose needle occurs in
/// the prompt answers the call, consuming its response list in order.
/// Consumption is keyed by prompt content, not call order, so concurrent
/// calls with distinct prompts cannot interleave each other's scripts.
class ScriptedBackend : public PolicyBackend {
 public:
  ScriptedBackend() = default;

  /// Adds a rule. When `repeat_last` is set the final response answers all
  /// further matching calls; otherwise an exhausted rule falls through to
  /// later rules or the default.
  void add_rule(std::string needle, std::vector<std::string> responses, bool repeat_last = true);

  void set_default_response(std::string response);

  std::string generate(const std::string& prompt, const SamplingParams& params) override;
  std::string backend_id() const override { return "scripted"; }

  /// Every prompt seen, in call order. The prompt-capture oracle for tests.
  std::vector<std::string> captured_prompts() const;

  /// Prompts seen that contain `needle`.
  std::vector<std::string> captured_containing(const std::string& needle) const;

  /// Loads a script document: {"rules": [{"match": str, "responses": [str],
  /// "repeat_last": bool}], "default": str}.
  static std::shared_ptr<ScriptedBackend> from_json(const nlohmann::json& doc);
  static std::shared_ptr<ScriptedBackend> from_file(const std::string& path);

 private:
  struct Rule {
    std::string needle;
    std::vector<std::string> responses;
    std::size_t next = 0;
    bool repeat_last = true;
  };

  mutable std::mutex mutex_;
  std::vector<Rule> rules_;
  std::optional<std::string> default_response_;
  std::vector<std::string> captured_;
};

}  // namespace treehop
