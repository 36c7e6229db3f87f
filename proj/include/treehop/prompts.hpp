#pragma once

#include <map>
#include <string>

#include "treehop/history.hpp"

namespace treehop {

/// A named, versioned prompt text with {placeholder} slots.
struct PromptTemplate {
  std::string name;
  std::string version;
  std::string text;

  std::string id() const { return name + "@" + version; }
};

/// Substitutes {key} occurrences; unknown placeholders in the template throw
/// ConfigError so template/asset drift is caught early.
std::string render_template(const PromptTemplate& tmpl,
                            const std::map<std::string, std::string>& values);

/// Renders the {history} block used by the prompts: numbered
/// sub-query/answer pairs in path order.
std::string render_history(const ReasoningHistory& history);

// Built-in versioned assets.
const PromptTemplate& plan_subquery_prompt();    // {question} {history}
const PromptTemplate& deduce_answer_prompt();    // {question} {history} {sub_query}
const PromptTemplate& finalize_answer_prompt();  // {question} {history}
const PromptTemplate& judge_query_prompt();      // {question} {history} {sub_query}
const PromptTemplate& judge_answer_prompt();     // {sub_query} {answer} {documents}
const PromptTemplate& cot_solution_prompt();     // {question}

/// The sentinel prefix a planner emits when the question is answerable.
inline constexpr const char* kTerminalMarker = "FINAL:";

}  // namespace treehop
