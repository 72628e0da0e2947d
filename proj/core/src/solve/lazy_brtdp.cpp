#include <algorithm>

#include "lazymdp/solve/analysis.hpp"
#include "lazymdp/solve/lazy_brtdp.hpp"
#include "lazymdp/solve/view.hpp"
#include "rng_util.hpp"

namespace lazymdp::solve {

namespace {

using lazymdp::NodeId;
using lazymdp::NodeStatus;

struct LazySolver {
  const Pasg& p;
  PasgBuilder& builder;
  const LazyOptions& opt;
  std::mt19937_64 rng;
  std::vector<double> upper, lower;

  LazySolver(PasgBuilder& b, const LazyOptions& o)
      : p(b.graph()), builder(b), opt(o), rng(o.seed) {}

  void grow() {
    upper.resize(p.size(), 1.0);
    lower.resize(p.size(), 0.0);
  }

  double gap(NodeId n) const { return upper[n] - lower[n]; }

  // Bellman backup honouring the node's current status; waiting nodes keep
  // their cached bounds (labels only shrink, so the caches stay sound).
  void backup(NodeId n) {
    const PasgNode& node = p.nodes[n];
    switch (node.status) {
      case NodeStatus::Waiting:
        return;
      case NodeStatus::Covered: {
        NodeId c = *p.covered_by[n];
        upper[n] = std::min(upper[n], upper[c]);
        lower[n] = std::max(lower[n], lower[c]);
        return;
      }
      case NodeStatus::Expanded:
        break;
    }
    if (node.target) {
      lower[n] = 1.0;
      return;
    }
    double best_hi = 0.0, best_lo = 0.0;
    for (std::int32_t ei : p.out_edges[n]) {
      double hi = 0.0, lo = 0.0;
      for (const auto& br : p.edges[ei].branches) {
        double prob = br.prob.to_double();
        hi += prob * upper[br.child];
        lo += prob * lower[br.child];
      }
      best_hi = std::max(best_hi, hi);
      best_lo = std::max(best_lo, lo);
    }
    upper[n] = std::min(upper[n], best_hi);
    lower[n] = std::max(lower[n], best_lo);
  }

  // Edge whose upper-bound backup is largest; ties keep the first edge,
  // i.e. the lowest command index (out_edges stays in command order).
  std::int32_t pick_edge(NodeId n) {
    std::int32_t best = -1;
    double best_val = -1.0;
    for (std::int32_t ei : p.out_edges[n]) {
      double val = 0.0;
      for (const auto& br : p.edges[ei].branches)
        val += br.prob.to_double() * upper[br.child];
      if (val > best_val) {
        best_val = val;
        best = ei;
      }
    }
    return best;
  }

  NodeId sample_child(const PasgEdge& edge) {
    const auto& brs = edge.branches;
    std::vector<double> weights(brs.size());
    double total = 0.0;
    if (opt.heuristic == TraceHeuristic::DiffBased) {
      for (std::size_t i = 0; i < brs.size(); ++i) {
        weights[i] = brs[i].prob.to_double() * gap(brs[i].child);
        total += weights[i];
      }
    }
    if (opt.heuristic == TraceHeuristic::Random || total <= 0.0) {
      total = 0.0;
      for (std::size_t i = 0; i < brs.size(); ++i) {
        weights[i] = brs[i].prob.to_double();
        total += weights[i];
      }
    }
    return brs[pick_weighted(rng, weights, total)].child;
  }

  // End components of the graph built so far (waiting nodes excluded);
  // upper values inside each fall to the best exit any member offers.
  void deflate() {
    std::int64_t m = p.size();
    MdpView r;
    r.initial = p.root;
    r.target.assign(m, 0);
    r.actions.resize(m);
    for (std::int32_t i = 0; i < m; ++i) {
      const PasgNode& node = p.nodes[i];
      if (node.status == NodeStatus::Covered) {
        r.actions[i].push_back({{*p.covered_by[i], 1.0}});
        continue;
      }
      if (node.status != NodeStatus::Expanded) continue;
      if (node.target) {
        r.target[i] = 1;
        r.actions[i].push_back({{i, 1.0}});
        continue;
      }
      for (std::int32_t ei : p.out_edges[i]) {
        bool settled = true;
        MdpView::Dist dist;
        for (const auto& br : p.edges[ei].branches) {
          if (p.nodes[br.child].status == NodeStatus::Waiting) {
            settled = false;
            break;
          }
          dist.emplace_back(br.child, br.prob.to_double());
        }
        if (settled) r.actions[i].push_back(std::move(dist));
      }
    }
    for (const Mec& mec : mec_decomposition(r)) {
      bool has_target = false;
      for (NodeId s : mec.states) has_target |= (bool)r.target[s];
      if (has_target) continue;
      std::vector<char> member(m, 0);
      for (NodeId s : mec.states) member[s] = 1;
      double best_exit = 0.0;
      for (NodeId s : mec.states) {
        if (p.nodes[s].status == NodeStatus::Covered) {
          NodeId c = *p.covered_by[s];
          if (!member[c]) best_exit = std::max(best_exit, upper[c]);
          continue;
        }
        for (std::int32_t ei : p.out_edges[s]) {
          bool internal = true;
          double val = 0.0;
          for (const auto& br : p.edges[ei].branches) {
            if (!member[br.child]) internal = false;
            val += br.prob.to_double() * upper[br.child];
          }
          if (!internal) best_exit = std::max(best_exit, val);
        }
      }
      for (NodeId s : mec.states) upper[s] = std::min(upper[s], best_exit);
    }
  }
};

}  // namespace

LazyResult lazy_brtdp(const TargetedModel& tm,
                      const StateDomain& dom, const LazyOptions& opt) {
  BuildOptions bopt;
  bopt.max_nodes = opt.max_nodes;
  PasgBuilder builder(tm, dom, bopt);
  LazySolver sv(builder, opt);
  sv.grow();

  SolveResult res;
  std::int64_t traces = 0;
  std::vector<NodeId> trace;
  bool node_budget = false;
  while (!node_budget) {
    if (sv.gap(sv.p.root) <= opt.eps) break;
    if (traces >= opt.max_traces) {
      res.status = SolveStatus::TraceBudget;
      break;
    }
    ++traces;
    trace.clear();
    NodeId s = sv.p.root;
    for (;;) {
      if (sv.p.nodes[s].status == NodeStatus::Waiting) {
        // A fresh cover can be reverted by its own refinement cascade (the
        // coverer's label may shrink); re-process until the node settles.
        // Each revert consumes a strict label shrink, so this terminates.
        bool ok = true;
        while (ok && sv.p.nodes[s].status == NodeStatus::Waiting)
          ok = builder.process(s);
        sv.grow();
        if (!ok) {
          node_budget = true;
          res.status = SolveStatus::NodeBudget;
          break;
        }
        if (sv.p.nodes[s].status == NodeStatus::Expanded) {
          const PasgNode& node = sv.p.nodes[s];
          if (node.target) sv.lower[s] = 1.0;
          else if (sv.p.out_edges[s].empty()) sv.upper[s] = 0.0;
        }
      }
      trace.push_back(s);
      const PasgNode& node = sv.p.nodes[s];
      if (node.status == NodeStatus::Covered) {
        s = *sv.p.covered_by[s];
        continue;
      }
      if (node.target || sv.p.out_edges[s].empty()) break;
      if (sv.gap(s) <= 0.0) break;
      if ((std::int64_t)trace.size() > 3 * (std::int64_t)sv.p.size()) break;
      std::int32_t ei = sv.pick_edge(s);
      s = sv.sample_child(sv.p.edges[ei]);
    }
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) sv.backup(*it);
    if (traces % opt.ec_check_period == 0) sv.deflate();
    if (opt.on_trace) {
      Bounds b{sv.lower[sv.p.root], sv.upper[sv.p.root]};
      opt.on_trace(sv.p, b);
    }
  }
  res.iterations = traces;
  res.bounds.lower = sv.lower[sv.p.root];
  res.bounds.upper = sv.upper[sv.p.root];
  LazyResult out;
  out.solve = res;
  out.graph = builder.take_graph();
  return out;
}

}  // namespace lazymdp::solve
