#pragma once

#include <string>

#include <json.hpp>

#include "treehop/search_tree.hpp"

namespace treehop {

/// Self-describing trace document for a finished (or in-progress) tree.
/// Field names are part of the documented format; see README.
nlohmann::json tree_to_trace_json(const SearchTree& tree);

/// Rebuilds a tree from a trace document (used to audit/replay dumps).
SearchTree tree_from_trace_json(const nlohmann::json& doc);

/// Graphviz rendering of the tree for external viewing.
std::string tree_to_dot(const SearchTree& tree);

}  // namespace treehop
