#include "treehop/policy.hpp"

#include <unordered_set>

#include "treehop/errors.hpp"
#include "treehop/prompts.hpp"
#include "treehop/strings.hpp"

namespace treehop {

namespace {

// Answers longer than this are treated as degenerate generations.
constexpr std::size_t kMaxAnswerChars = 4096;

// Models sometimes wrap the requested line in commentary; the contract is
// that the payload is the first non-empty line.
std::string first_nonempty_line(const std::string& text) {
  for (const std::string& line : split_lines(text)) {
    const std::string t = trim(line);
    if (!t.empty()) return t;
  }
  return {};
}

}  // namespace

std::optional<std::string> parse_terminal_marker(const std::string& line) {
  const std::string t = trim(line);
  if (!istarts_with(t, kTerminalMarker)) return std::nullopt;
  return trim(t.substr(std::string(kTerminalMarker).size()));
}

PolicyClient::PolicyClient(std::shared_ptr<PolicyBackend> backend)
    : backend_(std::move(backend)) {}

std::vector<PlannedSubQuery> PolicyClient::plan_subqueries(const ReasoningHistory& history,
                                                           int m_q,
                                                           const SamplingParams& params) const {
  if (m_q < 1) throw ContractError("plan_subqueries: m_q must be >= 1");
  const std::string prompt = render_template(
      plan_subquery_prompt(),
      {{"question", history.question}, {"history", render_history(history)}});

  std::vector<PlannedSubQuery> out;
  std::unordered_set<std::string> seen;
  int empty_samples = 0;
  for (int i = 0; i < m_q; ++i) {
    const std::string raw = backend_->generate(prompt, params);
    const std::string line = first_nonempty_line(raw);
    if (line.empty()) {
      ++empty_samples;
      continue;
    }
    const std::string key = collapse_whitespace(line);
    if (!seen.insert(key).second) continue;
    PlannedSubQuery planned;
    planned.text = line;
    if (auto final_answer = parse_terminal_marker(line)) {
      if (final_answer->empty()) {
        ++empty_samples;  // a terminal marker with no answer is degenerate
        seen.erase(key);
        continue;
      }
      planned.final_answer = std::move(*final_answer);
    }
    out.push_back(std::move(planned));
  }
  if (out.empty() && empty_samples == m_q) {
    throw GenerationError("plan_subqueries: all " + std::to_string(m_q) +
                          " samples were empty");
  }
  return out;
}

std::string PolicyClient::deduce_answer(const ReasoningHistory& history,
                                        const std::string& sub_query,
                                        const SamplingParams& params) const {
  if (parse_terminal_marker(sub_query)) {
    throw ContractError("deduce_answer: sub_query is the terminal marker");
  }
  const std::string prompt = render_template(
      deduce_answer_prompt(), {{"question", history.question},
                               {"history", render_history(history)},
                               {"sub_query", sub_query}});
  const std::string answer = first_nonempty_line(backend_->generate(prompt, params));
  if (answer.empty()) {
    throw GenerationError("deduce_answer: backend produced an empty answer");
  }
  if (answer.size() > kMaxAnswerChars) {
    throw GenerationError("deduce_answer: backend produced an over-length answer");
  }
  return answer;
}

std::string PolicyClient::finalize_answer(const ReasoningHistory& history,
                                          const SamplingParams& params) const {
  const std::string prompt = render_template(
      finalize_answer_prompt(),
      {{"question", history.question}, {"history", render_history(history)}});
  const std::string answer = first_nonempty_line(backend_->generate(prompt, params));
  if (answer.empty()) {
    throw GenerationError("finalize_answer: backend produced an empty answer");
  }
  if (answer.size() > kMaxAnswerChars) {
    throw GenerationError("finalize_answer: backend produced an over-length answer");
  }
  return answer;
}

}  // namespace treehop
