#pragma once

#include <string>
#include <vector>

namespace treehop {

/// One resolved reasoning step: a planned sub-query and the answer kept for it
/// (the refined answer when verification replaced the original).
struct ReasoningStep {
  std::string sub_query;
  std::string answer;
};

/// The path context fed to models: the original question followed by the
/// ordered sub-query/answer pairs along the root-to-node path.
struct ReasoningHistory {
  std::string question;
  std::vector<ReasoningStep> steps;

  bool empty() const { return steps.empty(); }
};

}  // namespace treehop
