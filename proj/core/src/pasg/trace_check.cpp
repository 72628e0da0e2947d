#include <sstream>
#include <unordered_map>

#include "lazymdp/pasg/check.hpp"

namespace lazymdp {

namespace {

struct MemoKey {
  NodeId node;
  Valuation val;
  bool operator==(const MemoKey& o) const { return node == o.node && val == o.val; }
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    return ValuationHash{}(k.val) * 1315423911u ^ (std::size_t)k.node;
  }
};

struct TraceChecker {
  const Pasg& p;
  const TargetedModel& tm;
  const StateDomain& dom;
  std::string fail;
  // Largest remaining depth already verified from (node, valuation).
  std::unordered_map<MemoKey, int, MemoKeyHash> memo;

  bool verify(NodeId node, const Valuation& val, int remaining) {
    if (!dom.contains(p.nodes[node].label, val)) {
      std::ostringstream d;
      d << "state not contained in label of node " << node;
      fail = d.str();
      return false;
    }
    if (remaining == 0) return true;
    auto [it, fresh] = memo.try_emplace(MemoKey{node, val}, remaining);
    if (!fresh) {
      if (it->second >= remaining) return true;
      it->second = remaining;
    }

    // Resolve covers: the next command is taken at the covering node.
    NodeId cur = node;
    std::size_t hops = 0;
    while (p.covered_by[cur]) {
      cur = *p.covered_by[cur];
      if (++hops > p.nodes.size()) {
        fail = "cover edges form a cycle";
        return false;
      }
    }
    if (p.nodes[cur].status != NodeStatus::Expanded) {
      std::ostringstream d;
      d << "trace reaches unexpanded node " << cur;
      fail = d.str();
      return false;
    }

    const SymbolicMdp& m = tm.model;
    for (std::size_t ci = 0; ci < m.commands.size(); ++ci) {
      if (!eval_bool(m.commands[ci].guard, val)) continue;
      const PasgEdge* edge = nullptr;
      for (std::int32_t ei : p.out_edges[cur]) {
        if (p.edges[ei].command == (std::int32_t)ci) {
          edge = &p.edges[ei];
          break;
        }
      }
      if (!edge) {
        std::ostringstream d;
        d << "node " << cur << " has no edge for enabled command " << ci;
        fail = d.str();
        return false;
      }
      for (const EdgeBranch& br : edge->branches) {
        Valuation succ = apply(m.commands[ci].branches[br.branch_index].assign, val, m);
        if (!verify(br.child, succ, remaining - 1)) return false;
      }
    }
    return true;
  }
};

}  // namespace

bool trace_correspondence(const Pasg& p, const TargetedModel& tm,
                          const StateDomain& dom, int max_len, std::string* detail) {
  TraceChecker tc{p, tm, dom, {}, {}};
  bool ok = tc.verify(p.root, tm.model.initial(), max_len);
  if (!ok && detail) *detail = tc.fail;
  return ok;
}

}  // namespace lazymdp
