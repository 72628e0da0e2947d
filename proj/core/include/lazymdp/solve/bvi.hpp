#pragma once

#include "lazymdp/solve/result.hpp"
#include "lazymdp/solve/view.hpp"

namespace lazymdp::solve {

struct BviOptions {
  double eps = 1e-6;
  std::int64_t max_sweeps = 10'000'000;
};

// Interval iteration on the end-component quotient: lower values rise from
// 0, upper values fall from 1, and both meet at the maximal reachability
// probability.  Stops once every state's gap is at most eps.
SolveResult bounded_value_iteration(const MdpView& v, const BviOptions& opt);

}  // namespace lazymdp::solve
