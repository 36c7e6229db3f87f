#include "treehop/prompts.hpp"

#include <sstream>

#include "treehop/errors.hpp"

namespace treehop {

std::string render_template(const PromptTemplate& tmpl,
                            const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.text.size());
  const std::string& text = tmpl.text;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '{') {
      const std::size_t close = text.find('}', i);
      if (close != std::string::npos) {
        const std::string key = text.substr(i + 1, close - i - 1);
        const auto it = values.find(key);
        if (it == values.end()) {
          throw ConfigError("prompt template " + tmpl.id() + " references unknown placeholder {" +
                            key + "}");
        }
        out += it->second;
        i = close + 1;
        continue;
      }
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

std::string render_history(const ReasoningHistory& history) {
  if (history.steps.empty()) {
    return "(no reasoning steps yet)\n";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < history.steps.size(); ++i) {
    out << "Sub-query " << (i + 1) << ": " << history.steps[i].sub_query << "\n";
    out << "Answer " << (i + 1) << ": " << history.steps[i].answer << "\n";
  }
  return out.str();
}

const PromptTemplate& plan_subquery_prompt() {
  static const PromptTemplate tmpl{
      "plan_subquery", "v1",
      "You are answering a multi-hop question step by step.\n"
      "Question: {question}\n"
      "Steps so far:\n{history}\n"
      "Propose the single next sub-question that moves toward answering the "
      "original question. Reply with exactly one line containing only that "
      "sub-question.\n"
      "If the steps above already determine the answer to the original "
      "question, reply instead with one line of the form\n"
      "FINAL: <answer>\n"};
  return tmpl;
}

const PromptTemplate& deduce_answer_prompt() {
  static const PromptTemplate tmpl{
      "deduce_answer", "v1",
      "You are answering a multi-hop question step by step.\n"
      "Question: {question}\n"
      "Steps so far:\n{history}\n"
      "Answer the following sub-question from your own knowledge, without "
      "citing external documents. Reply with a short answer on one line.\n"
      "Sub-question: {sub_query}\n"};
  return tmpl;
}

const PromptTemplate& finalize_answer_prompt() {
  static const PromptTemplate tmpl{
      "finalize_answer", "v1",
      "You are answering a multi-hop question step by step.\n"
      "Question: {question}\n"
      "Steps so far:\n{history}\n"
      "Using the steps above, give the final answer to the original "
      "question. Reply with only the short answer on one line.\n"};
  return tmpl;
}

const PromptTemplate& judge_query_prompt() {
  static const PromptTemplate tmpl{
      "judge_query", "v1",
      "You are verifying the planning of a multi-hop question answering "
      "system.\n"
      "Question: {question}\n"
      "Steps so far:\n{history}\n"
      "Proposed next sub-question: {sub_query}\n"
      "Decide whether this sub-question is a logically consistent next step "
      "given the question and the steps so far. Explain briefly, then end "
      "with a final line of exactly\n"
      "LABEL: CONSISTENT\n"
      "or\n"
      "LABEL: INCONSISTENT\n"};
  return tmpl;
}

const PromptTemplate& judge_answer_prompt() {
  static const PromptTemplate tmpl{
      "judge_answer", "v1",
      "You are verifying an answer against retrieved documents.\n"
      "Sub-question: {sub_query}\n"
      "Candidate answer: {answer}\n"
      "Documents:\n{documents}\n"
      "Decide whether the candidate answer is supported. Explain briefly, "
      "then end with a final line of exactly one of\n"
      "LABEL: ALIGNED\n"
      "LABEL: CONFLICT\n"
      "LABEL: UNVERIFIED\n"
      "If you output LABEL: CONFLICT, add one more line of the form\n"
      "REFINED: <the answer supported by the documents>\n"};
  return tmpl;
}

const PromptTemplate& cot_solution_prompt() {
  static const PromptTemplate tmpl{
      "cot_solution", "v1",
      "Solve the question below by decomposing it into sub-questions.\n"
      "Question: {question}\n"
      "Write each step on its own line in exactly this format:\n"
      "Step <n>: Q: <sub-question> A: <answer>\n"
      "After the steps, write one line of the form\n"
      "FINAL: <answer to the original question>\n"};
  return tmpl;
}

}  // namespace treehop
