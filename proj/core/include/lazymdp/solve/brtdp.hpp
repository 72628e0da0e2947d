#pragma once

#include "lazymdp/solve/result.hpp"
#include "lazymdp/solve/view.hpp"

namespace lazymdp::solve {

struct BrtdpOptions {
  double eps = 1e-6;
  std::uint64_t seed = 0;
  TraceHeuristic heuristic = TraceHeuristic::Random;
  std::int64_t max_traces = 1'000'000;
  std::int64_t ec_check_period = 64;  // traces between end-component sweeps
};

// Simulation-guided interval iteration: traces follow the most promising
// action, visited states get reverse value backups, and periodically the
// explored subgraph is swept for end components whose upper values are
// deflated to their best exit.  Converges at the initial state only, which
// is what makes it a partial method.
SolveResult brtdp(const MdpView& v, const BrtdpOptions& opt);

}  // namespace lazymdp::solve
