#include "treehop/search_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "treehop/errors.hpp"

namespace treehop {

double uct_score(const SearchNode& node, std::int64_t parent_visits, double exploration_weight) {
  if (!node.parent.has_value()) {
    throw ContractError("uct_score: the root node has no selection score");
  }
  if (parent_visits < 1) {
    throw ContractError("uct_score: a parent with children must have been visited");
  }
  if (node.visits == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const double bonus = std::sqrt(std::log(static_cast<double>(parent_visits)) /
                                 static_cast<double>(node.visits));
  return node.value + exploration_weight * bonus;
}

SearchTree::SearchTree(std::string question, int max_children) : max_children_(max_children) {
  if (max_children_ < 1) {
    throw ContractError("SearchTree: max_children must be >= 1");
  }
  SearchNode root;
  root.id = 0;
  root.sub_query = std::move(question);
  nodes_.push_back(std::move(root));
}

const SearchNode& SearchTree::node(NodeId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) {
    throw LookupError("unknown node id " + std::to_string(id));
  }
  return nodes_[static_cast<std::size_t>(id)];
}

SearchNode& SearchTree::node_mut(NodeId id) {
  return const_cast<SearchNode&>(node(id));
}

NodeId SearchTree::add_child(NodeId parent, std::string sub_query, std::string answer,
                             bool terminal) {
  SearchNode& p = node_mut(parent);
  if (p.terminal) {
    throw ContractError("add_child: terminal nodes have no children");
  }
  if (p.children.size() >= static_cast<std::size_t>(max_children_)) {
    throw ContractError("add_child: node " + std::to_string(parent) + " is at capacity");
  }
  const NodeId id = static_cast<NodeId>(nodes_.size());
  SearchNode child;
  child.id = id;
  child.parent = parent;
  child.sub_query = std::move(sub_query);
  child.answer = std::move(answer);
  child.depth = p.depth + 1;
  child.terminal = terminal;
  p.children.push_back(id);
  nodes_.push_back(std::move(child));
  return id;
}

void SearchTree::apply_refinement(NodeId id, std::string refined_answer) {
  SearchNode& n = node_mut(id);
  if (!n.answer.has_value()) {
    throw ContractError("apply_refinement: node has no answer to refine");
  }
  n.original_answer = std::move(n.answer);
  n.answer = std::move(refined_answer);
  n.refined = true;
}

void SearchTree::backpropagate(NodeId node_id, double reward) {
  for (NodeId id : path_from_root(node_id)) {
    SearchNode& n = nodes_[static_cast<std::size_t>(id)];
    const std::int64_t old_visits = n.visits;
    n.visits = old_visits + 1;
    n.value = (n.value * static_cast<double>(old_visits) + reward) /
              static_cast<double>(n.visits);
  }
  ++simulation_count_;
}

std::vector<NodeId> SearchTree::select_path(double exploration_weight, TieBreak tie_break) const {
  std::vector<NodeId> path{root_id()};
  const SearchNode* current = &node(root_id());
  while (!current->terminal &&
         current->children.size() >= static_cast<std::size_t>(max_children_)) {
    NodeId best = -1;
    double best_score = -std::numeric_limits<double>::infinity();
    for (NodeId child_id : current->children) {
      const double score = uct_score(node(child_id), current->visits, exploration_weight);
      const bool wins = (tie_break == TieBreak::kNewestFirst) ? (score >= best_score)
                                                              : (score > best_score);
      if (wins) {
        best = child_id;
        best_score = score;
      }
    }
    path.push_back(best);
    current = &node(best);
  }
  return path;
}

ReasoningHistory SearchTree::extract_history(NodeId node_id) const {
  ReasoningHistory history;
  history.question = node(root_id()).sub_query;
  const auto path = path_from_root(node_id);
  for (std::size_t i = 1; i < path.size(); ++i) {
    const SearchNode& n = node(path[i]);
    if (!n.answer.has_value()) {
      throw IntegrityError("node " + std::to_string(n.id) + " on the path has no answer");
    }
    history.steps.push_back({n.sub_query, *n.answer});
  }
  return history;
}

std::vector<NodeId> SearchTree::path_from_root(NodeId node_id) const {
  std::vector<NodeId> path;
  NodeId cursor = node(node_id).id;
  path.push_back(cursor);
  while (true) {
    const SearchNode& n = node(cursor);
    if (!n.parent.has_value()) break;
    cursor = *n.parent;
    path.push_back(cursor);
    if (path.size() > nodes_.size()) {
      throw IntegrityError("parent chain of node " + std::to_string(node_id) + " cycles");
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

void SearchTree::check_consistency() const {
  const auto fail = [](const std::string& what) { throw IntegrityError(what); };
  if (nodes_.empty()) fail("tree has no root");
  const SearchNode& root = nodes_[0];
  if (root.parent.has_value() || root.depth != 0) fail("root must have depth 0 and no parent");
  std::vector<bool> seen(nodes_.size(), false);
  for (const SearchNode& n : nodes_) {
    if (n.id < 0 || static_cast<std::size_t>(n.id) >= nodes_.size() ||
        &node(n.id) != &n) {
      fail("node id " + std::to_string(n.id) + " does not index its slot");
    }
    if (n.visits < 0) fail("negative visit count on node " + std::to_string(n.id));
    if (n.visits == 0 && n.value != 0.0) {
      fail("unvisited node " + std::to_string(n.id) + " has nonzero value");
    }
    if (n.children.size() > static_cast<std::size_t>(max_children_)) {
      fail("node " + std::to_string(n.id) + " exceeds the children cap");
    }
    if (n.terminal && !n.children.empty()) {
      fail("terminal node " + std::to_string(n.id) + " has children");
    }
    for (NodeId child_id : n.children) {
      const SearchNode& child = node(child_id);
      if (!child.parent || *child.parent != n.id) {
        fail("child link " + std::to_string(child_id) + " is not mirrored by a parent link");
      }
      if (child.depth != n.depth + 1) {
        fail("depth law broken at node " + std::to_string(child_id));
      }
      if (seen[static_cast<std::size_t>(child_id)]) {
        fail("node " + std::to_string(child_id) + " is referenced by two parents");
      }
      seen[static_cast<std::size_t>(child_id)] = true;
    }
  }
  // Reachability: every non-root node must be seen exactly once as a child.
  for (const SearchNode& n : nodes_) {
    if (n.id != 0 && !seen[static_cast<std::size_t>(n.id)]) {
      fail("node " + std::to_string(n.id) + " is unreachable from the root");
    }
  }
}

}  // namespace treehop
