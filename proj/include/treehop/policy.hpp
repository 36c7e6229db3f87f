#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "treehop/history.hpp"

namespace treehop {

struct SamplingParams {
  double temperature = 1.0;
  double top_p = 1.0;
  std::optional<std::uint64_t> seed;
  int max_tokens = 256;
};

/// Low-level text-generation interface behind the policy model and the chat
/// judge. Implementations must tolerate concurrent calls.
class PolicyBackend {
 public:
  virtual ~PolicyBackend() = default;
  virtual std::string generate(const std::string& prompt, const SamplingParams& params) = 0;
  virtual std::string backend_id() const = 0;
};

/// One sampled planning output: either the next sub-query, or the terminal
/// marker carrying the final answer.
struct PlannedSubQuery {
  std::string text;                         // raw planner line ("FINAL: ..." when terminal)
  std::optional<std::string> final_answer;  // set iff the sample is terminal

  bool terminal() const { return final_answer.has_value(); }
};

/// Parses a planner line; returns the final answer when the line carries the
/// terminal marker.
std::optional<std::string> parse_terminal_marker(const std::string& line);

/// Renders prompts for the policy model and interprets its samples.
class PolicyClient {
 public:
  explicit PolicyClient(std::shared_ptr<PolicyBackend> backend);

  /// Samples up to `m_q` sub-queries for the next step. Exact-string
  /// duplicates (after whitespace normalization) are dropped; order is
  /// sampling order. Empty generations are skipped; all-empty batches throw
  /// GenerationError.
  std::vector<PlannedSubQuery> plan_subqueries(const ReasoningHistory& history, int m_q,
                                               const SamplingParams& params) const;

  /// Answers a sub-query from the model's own knowledge (no documents in the
  /// prompt). Whitespace-only or over-length output throws GenerationError.
  std::string deduce_answer(const ReasoningHistory& history, const std::string& sub_query,
                            const SamplingParams& params) const;

  /// Short final answer to the original question given the full history.
  std::string finalize_answer(const ReasoningHistory& history,
                              const SamplingParams& params) const;

  PolicyBackend& backend() const { return *backend_; }
  std::shared_ptr<PolicyBackend> backend_ptr() const { return backend_; }

 private:
  std::shared_ptr<PolicyBackend> backend_;
};

}  // namespace treehop
