#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lazymdp/domain/domain.hpp"
#include "lazymdp/model/mdp.hpp"

namespace lazymdp {

using NodeId = std::int32_t;

enum class NodeStatus : std::uint8_t { Waiting, Expanded, Covered };

// Where a node hangs in the unfolding tree: the incoming transition edge and
// the branch within it. Only the root has no parent.
struct ParentLink {
  std::int32_t edge;
  std::int32_t branch;
};

struct PasgNode {
  Valuation concrete;        // the exact state this node was reached with
  AbstractState label;       // overapproximation, refined by blocking
  NodeStatus status = NodeStatus::Waiting;
  bool target = false;       // set at expansion when the target command is enabled
  std::optional<ParentLink> parent;
};

struct EdgeBranch {
  Rational prob;
  std::int32_t branch_index;  // branch of the command this child came from
  NodeId child;
};

// One expansion of a command at a node; branches keep the command's
// distribution (one fresh child per branch, probabilities unmerged).
struct PasgEdge {
  NodeId source;
  std::int32_t command;
  std::vector<EdgeBranch> branches;
};

struct Pasg {
  std::vector<PasgNode> nodes;
  std::vector<PasgEdge> edges;
  std::vector<std::vector<std::int32_t>> out_edges;  // per node, in command order
  std::vector<std::optional<NodeId>> covered_by;     // per node: its coverer
  std::vector<std::vector<NodeId>> covers;           // per node: nodes it covers
  NodeId root = 0;

  std::size_t size() const { return nodes.size(); }

  std::int64_t covered_count() const {
    std::int64_t n = 0;
    for (const auto& c : covered_by)
      if (c) ++n;
    return n;
  }

  bool has_waiting() const {
    for (const auto& n : nodes)
      if (n.status == NodeStatus::Waiting) return true;
    return false;
  }
};

enum class WaitlistPolicy : std::uint8_t { Lifo, Fifo };

enum class BuildStatus : std::uint8_t { Finished, NodeBudget };

struct BuildOptions {
  WaitlistPolicy policy = WaitlistPolicy::Lifo;
  std::int64_t max_nodes = 5'000'000;
  // Called after each fully processed waitlist entry (cover or expansion,
  // including the triggered refinement cascade).
  std::function<void(const Pasg&)> on_iteration;
};

// Incremental constructor. run() drives the waitlist to exhaustion; the
// lazy solver instead calls process() on the nodes its traces visit.
class PasgBuilder {
 public:
  PasgBuilder(const TargetedModel& tm, const StateDomain& dom, BuildOptions opt);

  // Waitlist loop; Finished when no waiting node remains, NodeBudget when
  // the cap was hit (the partial graph stays accessible).
  BuildStatus run();

  const Pasg& graph() const { return pasg_; }
  Pasg take_graph() { return std::move(pasg_); }

  // Process one waiting node: cover it if an expanded uncovered node with a
  // containing label exists, otherwise expand it. Returns false if the node
  // budget was exhausted by the expansion.
  bool process(NodeId n);

  // Strengthen the label of n so that eval_pred(phi, label) is False, then
  // re-establish the cover and parent-edge constraints by cascading. phi
  // must be false at the node's concrete state.
  void block_label(NodeId n, const ExprPtr& phi);

  std::optional<NodeId> find_coverer(NodeId n) const;

  bool node_budget_hit() const { return budget_hit_; }
  std::int64_t cover_removals() const { return cover_removals_; }

 private:
  NodeId new_node(Valuation concrete, std::optional<ParentLink> parent);
  void do_cover(NodeId n, NodeId coverer);
  void expand(NodeId n);
  NodeId pop_waitlist();

  const TargetedModel& tm_;
  const StateDomain& dom_;
  BuildOptions opt_;
  Pasg pasg_;
  std::deque<NodeId> waitlist_;
  // The unique expanded node per concrete label (expanded nodes are never
  // covered, and a second node with the same label is always coverable).
  std::unordered_map<Valuation, NodeId, ValuationHash> expanded_label_;
  std::vector<NodeId> expansion_order_;
  bool budget_hit_ = false;
  std::int64_t cover_removals_ = 0;
};

// Full construction; used by the eager (lazy-bvi) pipeline.
struct ConstructResult {
  Pasg graph;
  BuildStatus status;
};

ConstructResult construct(const TargetedModel& tm, const StateDomain& dom,
                          BuildOptions opt = {});

}  // namespace lazymdp
