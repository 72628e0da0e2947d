#include "lazymdp/pasg/graph.hpp"

#include <algorithm>

#include "lazymdp/model/simplify.hpp"

namespace lazymdp {

namespace {

std::string state_str(const Valuation& v, const SymbolicMdp& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    if (i) s += ", ";
    s += m.vars[i].name + "=" + std::to_string(v.values[i]);
  }
  return s + ")";
}

}  // namespace

PasgBuilder::PasgBuilder(const TargetedModel& tm, const StateDomain& dom,
                         BuildOptions opt)
    : tm_(tm), dom_(dom), opt_(std::move(opt)) {
  new_node(tm_.model.initial(), std::nullopt);
}

NodeId PasgBuilder::new_node(Valuation concrete, std::optional<ParentLink> parent) {
  NodeId id = (NodeId)pasg_.nodes.size();
  PasgNode n;
  n.concrete = std::move(concrete);
  n.label = dom_.top();
  n.parent = parent;
  pasg_.nodes.push_back(std::move(n));
  pasg_.out_edges.emplace_back();
  pasg_.covered_by.emplace_back();
  pasg_.covers.emplace_back();
  waitlist_.push_back(id);
  return id;
}

NodeId PasgBuilder::pop_waitlist() {
  while (!waitlist_.empty()) {
    NodeId n;
    if (opt_.policy == WaitlistPolicy::Lifo) {
      n = waitlist_.back();
      waitlist_.pop_back();
    } else {
      n = waitlist_.front();
      waitlist_.pop_front();
    }
    // Entries can go stale: the lazy driver processes nodes out of band.
    if (pasg_.nodes[n].status == NodeStatus::Waiting) return n;
  }
  return -1;
}

std::optional<NodeId> PasgBuilder::find_coverer(NodeId n) const {
  const Valuation& c = pasg_.nodes[n].concrete;
  // Exact-label fast path: at most one expanded node carries this concrete
  // label, and an expanded node's abstract label always contains its own.
  auto it = expanded_label_.find(c);
  if (it != expanded_label_.end() && it->second != n) return it->second;
  for (NodeId cand : expansion_order_) {
    if (cand == n) continue;
    if (dom_.contains(pasg_.nodes[cand].label, c)) return cand;
  }
  return std::nullopt;
}

bool PasgBuilder::process(NodeId n) {
  if (pasg_.nodes[n].status != NodeStatus::Waiting) {
    throw ContractError("PasgBuilder::process: node is not waiting");
  }
  if (auto cov = find_coverer(n)) {
    do_cover(n, *cov);
    return true;
  }
  if (budget_hit_) return false;
  expand(n);
  return !budget_hit_;
}

void PasgBuilder::do_cover(NodeId n, NodeId coverer) {
  pasg_.nodes[n].status = NodeStatus::Covered;
  pasg_.covered_by[n] = coverer;
  pasg_.covers[coverer].push_back(n);
  // The covered node's label must lie below the coverer's.
  block_label(n, simplify(Expr::lnot(dom_.to_expr(pasg_.nodes[coverer].label))));
}

void PasgBuilder::expand(NodeId n) {
  const SymbolicMdp& m = tm_.model;
  const Valuation concrete = pasg_.nodes[n].concrete;  // nodes vector reallocates

  for (std::size_t ci = 0; ci < m.commands.size(); ++ci) {
    const Command& cmd = m.commands[ci];
    bool enabled;
    try {
      enabled = eval_bool(cmd.guard, concrete);
    } catch (const EvalError& e) {
      throw EvalError("guard of command " + std::to_string(ci) + " at state " +
                      state_str(concrete, m) + ": " + e.what());
    }
    TriBool abs = dom_.eval_pred(cmd.guard, pasg_.nodes[n].label);
    if (enabled) {
      if ((std::int32_t)ci == tm_.target_command) pasg_.nodes[n].target = true;
      if (abs == TriBool::Unknown) {
        // The label must decide this guard the way the concrete state does.
        block_label(n, simplify(Expr::lnot(cmd.guard)));
      }
      if ((std::int64_t)(pasg_.nodes.size() + cmd.branches.size()) > opt_.max_nodes) {
        budget_hit_ = true;
        return;  // node stays waiting; committed edges remain valid
      }
      PasgEdge edge;
      edge.source = n;
      edge.command = (std::int32_t)ci;
      std::int32_t edge_id = (std::int32_t)pasg_.edges.size();
      for (std::size_t bi = 0; bi < cmd.branches.size(); ++bi) {
        Valuation succ;
        try {
          succ = apply(cmd.branches[bi].assign, concrete, m);
        } catch (const EvalError& e) {
          throw EvalError("command " + std::to_string(ci) + " at state " +
                          state_str(concrete, m) + ": " + e.what());
        }
        NodeId child = new_node(std::move(succ), ParentLink{edge_id, (std::int32_t)bi});
        edge.branches.push_back({cmd.branches[bi].prob, (std::int32_t)bi, child});
      }
      pasg_.edges.push_back(std::move(edge));
      pasg_.out_edges[n].push_back(edge_id);
    } else if (abs == TriBool::Unknown) {
      block_label(n, cmd.guard);
    }
  }
  pasg_.nodes[n].status = NodeStatus::Expanded;
  expanded_label_[concrete] = n;
  expansion_order_.push_back(n);
}

void PasgBuilder::block_label(NodeId start, const ExprPtr& start_phi) {
  NodeId n = start;
  ExprPtr phi = start_phi;
  // Walks the parent chain iteratively; only the one-level recursion into
  // covered nodes stays recursive (covered nodes cover nothing themselves).
  for (;;) {
    if (eval_bool(phi, pasg_.nodes[n].concrete)) {
      throw ContractError("block_label: predicate holds at the concrete state");
    }
    // Already excluded: nothing below can have changed either.
    if (dom_.eval_pred(phi, pasg_.nodes[n].label) == TriBool::False) return;

    pasg_.nodes[n].label = dom_.block(pasg_.nodes[n].label, phi, pasg_.nodes[n].concrete);

    // Re-check nodes covered by n: drop those that fell out of the new
    // label, strengthen those that remain covered.
    std::vector<NodeId> covered = pasg_.covers[n];
    for (NodeId c : covered) {
      if (!pasg_.covered_by[c] || *pasg_.covered_by[c] != n) continue;
      if (!dom_.contains(pasg_.nodes[n].label, pasg_.nodes[c].concrete)) {
        auto& v = pasg_.covers[n];
        v.erase(std::find(v.begin(), v.end(), c));
        pasg_.covered_by[c] = std::nullopt;
        pasg_.nodes[c].status = NodeStatus::Waiting;
        waitlist_.push_back(c);
        ++cover_removals_;
      } else {
        block_label(c, simplify(Expr::lnot(dom_.to_expr(pasg_.nodes[n].label))));
      }
    }

    // The parent's label must still map into ours under the branch
    // assignment; propagate through the weakest precondition.
    if (!pasg_.nodes[n].parent) return;
    const ParentLink& link = *pasg_.nodes[n].parent;
    const PasgEdge& e = pasg_.edges[link.edge];
    const Command& cmd = tm_.model.commands[e.command];
    const Assignment& a = cmd.branches[e.branches[link.branch].branch_index].assign;
    phi = simplify(Expr::lnot(
        weakest_precondition(a, dom_.to_expr(pasg_.nodes[n].label))));
    n = e.source;
  }
}

BuildStatus PasgBuilder::run() {
  for (;;) {
    NodeId n = pop_waitlist();
    if (n < 0) return budget_hit_ ? BuildStatus::NodeBudget : BuildStatus::Finished;
    if (!process(n)) return BuildStatus::NodeBudget;
    if (opt_.on_iteration) opt_.on_iteration(pasg_);
  }
}

ConstructResult construct(const TargetedModel& tm, const StateDomain& dom,
                          BuildOptions opt) {
  PasgBuilder b(tm, dom, std::move(opt));
  BuildStatus st = b.run();
  return {b.take_graph(), st};
}

}  // namespace lazymdp
