#include <algorithm>

#include "lazymdp/solve/analysis.hpp"
#include "lazymdp/solve/brtdp.hpp"
#include "rng_util.hpp"

namespace lazymdp::solve {

SolveResult brtdp(const MdpView& v, const BrtdpOptions& opt) {
  std::int64_t n = v.num_states();
  std::vector<double> upper(n, 1.0), lower(n, 0.0);
  for (std::int32_t s = 0; s < n; ++s) {
    if (v.target[s]) {
      lower[s] = 1.0;
    } else if (v.actions[s].empty()) {
      upper[s] = 0.0;
    }
  }

  std::vector<char> explored(n, 0);
  std::int64_t explored_count = 0;
  std::mt19937_64 rng(opt.seed);

  // Ties go to the lowest action index.  A tied region whose upper values
  // all sit at 1 can therefore keep a higher-indexed exit unsampled; the
  // trace budget bounds that worst case, and the bounds stay sound.
  auto best_action = [&](std::int32_t s) {
    std::int32_t best = -1;
    double best_val = -1.0;
    for (std::size_t a = 0; a < v.actions[s].size(); ++a) {
      double val = 0.0;
      for (const auto& [t, p] : v.actions[s][a]) val += p * upper[t];
      if (val > best_val) {
        best_val = val;
        best = (std::int32_t)a;
      }
    }
    return best;
  };

  auto backup = [&](std::int32_t s) {
    if (v.target[s]) return;
    double best_hi = 0.0, best_lo = 0.0;
    for (const auto& dist : v.actions[s]) {
      double hi = 0.0, lo = 0.0;
      for (const auto& [t, p] : dist) {
        hi += p * upper[t];
        lo += p * lower[t];
      }
      best_hi = std::max(best_hi, hi);
      best_lo = std::max(best_lo, lo);
    }
    upper[s] = std::min(upper[s], best_hi);
    lower[s] = std::max(lower[s], best_lo);
  };

  auto sample_successor = [&](const MdpView::Dist& dist) {
    std::vector<double> weights(dist.size());
    double total = 0.0;
    if (opt.heuristic == TraceHeuristic::DiffBased) {
      for (std::size_t i = 0; i < dist.size(); ++i) {
        auto [t, p] = dist[i];
        weights[i] = p * (upper[t] - lower[t]);
        total += weights[i];
      }
    }
    if (opt.heuristic == TraceHeuristic::Random || total <= 0.0) {
      total = 0.0;
      for (std::size_t i = 0; i < dist.size(); ++i) {
        weights[i] = dist[i].second;
        total += weights[i];
      }
    }
    return dist[pick_weighted(rng, weights, total)].first;
  };

  // Deflate upper values of end components found in the explored subgraph
  // to the best exit any member action offers.
  auto deflate = [&]() {
    MdpView r;
    r.initial = v.initial;
    r.target = v.target;
    r.actions.resize(n);
    for (std::int32_t s = 0; s < n; ++s) {
      if (!explored[s]) continue;
      for (const auto& dist : v.actions[s]) {
        bool inside = true;
        for (const auto& [t, p] : dist) {
          if (!explored[t]) {
            inside = false;
            break;
          }
        }
        if (inside) r.actions[s].push_back(dist);
      }
    }
    for (const Mec& mec : mec_decomposition(r)) {
      bool has_target = false;
      for (std::int32_t s : mec.states) has_target |= (bool)v.target[s];
      if (has_target) continue;
      std::vector<char> member(n, 0);
      for (std::int32_t s : mec.states) member[s] = 1;
      double best_exit = 0.0;
      for (std::int32_t s : mec.states) {
        for (const auto& dist : v.actions[s]) {
          bool internal = true;
          double val = 0.0;
          for (const auto& [t, p] : dist) {
            if (!member[t]) internal = false;
            val += p * upper[t];
          }
          if (!internal) best_exit = std::max(best_exit, val);
        }
      }
      for (std::int32_t s : mec.states)
        upper[s] = std::min(upper[s], best_exit);
    }
  };

  SolveResult res;
  std::int64_t traces = 0;
  std::vector<std::int32_t> trace;
  for (;;) {
    if (upper[v.initial] - lower[v.initial] <= opt.eps) break;
    if (traces >= opt.max_traces) {
      res.status = SolveStatus::TraceBudget;
      break;
    }
    ++traces;
    trace.clear();
    std::int32_t s = v.initial;
    for (;;) {
      if (!explored[s]) {
        explored[s] = 1;
        ++explored_count;
      }
      trace.push_back(s);
      if (v.target[s] || v.actions[s].empty()) break;
      if (upper[s] - lower[s] <= 0.0) break;
      if ((std::int64_t)trace.size() > 3 * explored_count) break;
      std::int32_t a = best_action(s);
      s = sample_successor(v.actions[s][a]);
    }
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) backup(*it);
    if (traces % opt.ec_check_period == 0) deflate();
  }
  res.iterations = traces;
  res.bounds.lower = lower[v.initial];
  res.bounds.upper = upper[v.initial];
  return res;
}

}  // namespace lazymdp::solve
