#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treehop/history.hpp"

namespace treehop {

using NodeId = std::int64_t;

enum class TieBreak {
  kCreationOrder,  // lowest child index wins (default)
  kNewestFirst,    // highest child index wins
};

/// One search state: the sub-query, its (possibly refined) answer, and the
/// visit/value statistics driving selection. The root holds the original
/// question and no answer.
struct SearchNode {
  NodeId id = 0;
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
  std::string sub_query;
  std::optional<std::string> answer;
  bool refined = false;
  std::optional<std::string> original_answer;  // audit: pre-refinement answer
  std::int64_t visits = 0;
  double value = 0.0;
  std::optional<double> reward;  // the node's own r at expansion time
  int depth = 0;
  bool terminal = false;

  // Verifier annotations kept for the trace document.
  std::optional<int> query_reward;   // r_q
  std::optional<int> answer_reward;  // r_a
  std::string rationale;
  std::vector<std::string> audit;
};

/// Exploration/exploitation score of a child node. Unvisited nodes return the
/// infinite sentinel so each expanded child is simulated at least once.
/// Throws ContractError when parent_visits < 1 or when given the root.
double uct_score(const SearchNode& node, std::int64_t parent_visits, double exploration_weight);

/// The MCTS tree. Single-writer: only the orchestrator's sequential loop
/// mutates it; concurrent read-only traversal between mutations is fine.
class SearchTree {
 public:
  /// Creates a tree holding only the root (the original question).
  /// max_children caps each node's children list (the m_q knob).
  SearchTree(std::string question, int max_children);

  NodeId root_id() const { return 0; }
  std::int64_t simulation_count() const { return simulation_count_; }
  int max_children() const { return max_children_; }
  std::size_t size() const { return nodes_.size(); }

  const SearchNode& node(NodeId id) const;
  SearchNode& node_mut(NodeId id);
  const std::vector<SearchNode>& nodes() const { return nodes_; }

  /// Attaches a new child under `parent`. Enforces capacity, the no-children-
  /// under-terminal rule and the depth law. Returns the new node id.
  NodeId add_child(NodeId parent, std::string sub_query, std::string answer, bool terminal);

  /// Replaces the node's answer with the document-supported one, keeping the
  /// original in the audit field and setting the refined flag.
  void apply_refinement(NodeId id, std::string refined_answer);

  /// Updates visits and value along the root-to-node path (running mean of
  /// propagated rewards) and bumps simulation_count.
  void backpropagate(NodeId node_id, double reward);

  /// Root-to-frontier path by repeated UCT descent. Descent stops at the
  /// first node that is terminal or still has spare child capacity.
  std::vector<NodeId> select_path(double exploration_weight, TieBreak tie_break) const;

  /// The question plus the ordered sub-query/answer pairs down to `node_id`.
  /// Answers reflect refinement. Throws IntegrityError when a non-root node
  /// on the path has no answer.
  ReasoningHistory extract_history(NodeId node_id) const;

  /// Ordered node ids from the root to `node_id`, inclusive.
  std::vector<NodeId> path_from_root(NodeId node_id) const;

  /// Full structural check: link consistency, acyclicity, depth law, visit
  /// law. Throws IntegrityError with a description on the first violation.
  void check_consistency() const;

 private:
  std::vector<SearchNode> nodes_;
  int max_children_;
  std::int64_t simulation_count_ = 0;
};

}  // namespace treehop
