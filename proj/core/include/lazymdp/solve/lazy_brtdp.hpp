#pragma once

#include <functional>

#include "lazymdp/domain/domain.hpp"
#include "lazymdp/model/mdp.hpp"
#include "lazymdp/pasg/graph.hpp"
#include "lazymdp/solve/result.hpp"

namespace lazymdp::solve {

struct LazyOptions {
  double eps = 1e-6;
  std::uint64_t seed = 0;
  TraceHeuristic heuristic = TraceHeuristic::Random;
  std::int64_t max_traces = 1'000'000;
  std::int64_t ec_check_period = 64;  // traces between end-component sweeps
  std::int64_t max_nodes = 5'000'000;
  // Observer invoked after every trace with the graph so far and the root
  // bracket; used by tests to watch the anytime bounds.
  std::function<void(const Pasg&, const Bounds&)> on_trace;
};

struct LazyResult {
  SolveResult solve;
  Pasg graph;  // possibly partial: unvisited nodes still wait
};

// Simulation-guided solving fused with lazy graph construction: each trace
// walks the abstraction graph from the root, processing (covering or
// expanding) waiting nodes as it reaches them, then backs value bounds up
// along the trace.  Refinement during a trace may revert covered nodes to
// waiting; their cached bounds stay valid because labels only shrink.
LazyResult lazy_brtdp(const TargetedModel& tm,
                      const StateDomain& dom, const LazyOptions& opt);

}  // namespace lazymdp::solve
