#include "treehop/trace.hpp"

#include <sstream>

#include "treehop/errors.hpp"

namespace treehop {

namespace {

constexpr const char* kTraceFormat = "treehop.trace";
constexpr int kTraceVersion = 1;

nlohmann::json opt_str(const std::optional<std::string>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string dot_escape(const std::string& text, std::size_t limit = 40) {
  std::string clipped = text.substr(0, limit);
  if (text.size() > limit) clipped += "...";
  std::string out;
  for (char c : clipped) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

nlohmann::json tree_to_trace_json(const SearchTree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const SearchNode& n : tree.nodes()) {
    nlohmann::json rec{
        {"id", n.id},
        {"parent", n.parent ? nlohmann::json(*n.parent) : nlohmann::json(nullptr)},
        {"children", n.children},
        {"sub_query", n.sub_query},
        {"answer", opt_str(n.answer)},
        {"refined", n.refined},
        {"original_answer", opt_str(n.original_answer)},
        {"visits", n.visits},
        {"value", n.value},
        {"reward", n.reward ? nlohmann::json(*n.reward) : nlohmann::json(nullptr)},
        {"depth", n.depth},
        {"terminal", n.terminal},
        {"query_reward", n.query_reward ? nlohmann::json(*n.query_reward) : nlohmann::json(nullptr)},
        {"answer_reward",
         n.answer_reward ? nlohmann::json(*n.answer_reward) : nlohmann::json(nullptr)},
        {"rationale", n.rationale},
        {"audit", n.audit},
    };
    nodes.push_back(std::move(rec));
  }
  return nlohmann::json{
      {"format", kTraceFormat},
      {"version", kTraceVersion},
      {"question", tree.node(tree.root_id()).sub_query},
      {"root_id", tree.root_id()},
      {"max_children", tree.max_children()},
      {"simulation_count", tree.simulation_count()},
      {"nodes", std::move(nodes)},
  };
}

SearchTree tree_from_trace_json(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("format", "") != kTraceFormat) {
    throw ParseError("not a treehop.trace document");
  }
  if (doc.value("version", 0) != kTraceVersion) {
    throw ParseError("unsupported trace version");
  }
  SearchTree tree(doc.at("question").get<std::string>(), doc.at("max_children").get<int>());
  const auto& nodes = doc.at("nodes");
  // Records are ordered by id; children always follow their parent.
  for (const auto& rec : nodes) {
    const NodeId id = rec.at("id").get<NodeId>();
    SearchNode* n = nullptr;
    if (id == tree.root_id()) {
      n = &tree.node_mut(id);
    } else {
      const NodeId parent = rec.at("parent").get<NodeId>();
      const NodeId created =
          tree.add_child(parent, rec.at("sub_query").get<std::string>(),
                         rec.at("answer").is_null() ? std::string()
                                                    : rec.at("answer").get<std::string>(),
                         rec.at("terminal").get<bool>());
      if (created != id) throw ParseError("trace node ids are not creation-ordered");
      n = &tree.node_mut(created);
      if (rec.at("answer").is_null()) n->answer.reset();
    }
    n->visits = rec.at("visits").get<std::int64_t>();
    n->value = rec.at("value").get<double>();
    n->refined = rec.at("refined").get<bool>();
    if (!rec.at("original_answer").is_null()) {
      n->original_answer = rec.at("original_answer").get<std::string>();
    }
    if (!rec.at("reward").is_null()) n->reward = rec.at("reward").get<double>();
    if (!rec.at("query_reward").is_null()) n->query_reward = rec.at("query_reward").get<int>();
    if (!rec.at("answer_reward").is_null()) {
      n->answer_reward = rec.at("answer_reward").get<int>();
    }
    n->rationale = rec.value("rationale", "");
    n->audit = rec.value("audit", std::vector<std::string>{});
  }
  return tree;
}

std::string tree_to_dot(const SearchTree& tree) {
  std::ostringstream out;
  out << "digraph search_tree {\n";
  out << "  node [shape=box, fontsize=10];\n";
  for (const SearchNode& n : tree.nodes()) {
    out << "  n" << n.id << " [label=\"#" << n.id << " N=" << n.visits << " V=" << n.value;
    if (n.reward) out << " r=" << *n.reward;
    out << "\\nq: " << dot_escape(n.sub_query);
    if (n.answer) out << "\\na: " << dot_escape(*n.answer);
    out << "\"";
    if (n.terminal) out << ", style=bold";
    if (n.refined) out << ", color=orange";
    out << "];\n";
  }
  for (const SearchNode& n : tree.nodes()) {
    for (NodeId child : n.children) {
      out << "  n" << n.id << " -> n" << child << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace treehop
