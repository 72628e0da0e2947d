#include <algorithm>

#include "lazymdp/solve/analysis.hpp"
#include "lazymdp/solve/bvi.hpp"

namespace lazymdp::solve {

SolveResult bounded_value_iteration(const MdpView& v, const BviOptions& opt) {
  std::int64_t n = v.num_states();
  std::vector<char> zero = prob0(v);
  std::vector<char> one = prob1max(v);

  std::vector<std::int32_t> rep(n);
  std::vector<std::int32_t> comp_of(n, -1);
  for (std::int32_t s = 0; s < n; ++s) rep[s] = s;
  auto mecs = mec_decomposition(v);
  for (std::size_t i = 0; i < mecs.size(); ++i) {
    for (std::int32_t s : mecs[i].states) {
      rep[s] = mecs[i].states[0];
      comp_of[s] = (std::int32_t)i;
    }
  }

  std::vector<double> lower(n, 0.0), upper(n, 1.0);
  std::vector<char> pinned(n, 0);
  std::vector<std::int32_t> reps;
  for (std::int32_t s = 0; s < n; ++s) {
    if (rep[s] != s) continue;
    reps.push_back(s);
    if (one[s]) {
      lower[s] = upper[s] = 1.0;
      pinned[s] = 1;
    } else if (zero[s]) {
      lower[s] = upper[s] = 0.0;
      pinned[s] = 1;
    }
  }

  // Representatives inherit every member action that leaves the component;
  // purely internal actions only move within the component and are dropped.
  std::vector<std::vector<MdpView::Dist>> qactions(n);
  for (std::int32_t s = 0; s < n; ++s) {
    std::int32_t r = rep[s];
    if (pinned[r]) continue;
    for (const auto& dist : v.actions[s]) {
      if (comp_of[s] >= 0) {
        bool internal = true;
        for (const auto& [t, p] : dist) {
          if (comp_of[t] != comp_of[s]) {
            internal = false;
            break;
          }
        }
        if (internal) continue;
      }
      MdpView::Dist mapped;
      for (const auto& [t, p] : dist) mapped.emplace_back(rep[t], p);
      qactions[r].push_back(std::move(mapped));
    }
  }

  auto widest = [&]() {
    double g = 0.0;
    for (std::int32_t r : reps) g = std::max(g, upper[r] - lower[r]);
    return g;
  };

  SolveResult res;
  std::int64_t sweeps = 0;
  while (widest() > opt.eps) {
    if (sweeps >= opt.max_sweeps) {
      res.status = SolveStatus::IterationBudget;
      break;
    }
    ++sweeps;
    for (std::int32_t r : reps) {
      if (pinned[r]) continue;
      double best_lo = 0.0, best_hi = 0.0;
      for (const auto& dist : qactions[r]) {
        double vlo = 0.0, vhi = 0.0;
        for (const auto& [t, p] : dist) {
          vlo += p * lower[t];
          vhi += p * upper[t];
        }
        best_lo = std::max(best_lo, vlo);
        best_hi = std::max(best_hi, vhi);
      }
      lower[r] = best_lo;
      upper[r] = best_hi;
    }
  }
  res.iterations = sweeps;
  res.bounds.lower = lower[rep[v.initial]];
  res.bounds.upper = upper[rep[v.initial]];
  return res;
}

}  // namespace lazymdp::solve
