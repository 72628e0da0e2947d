#include <algorithm>
#include <stdexcept>

#include "lazymdp/oracle/explicit_mdp.hpp"

namespace lazymdp::oracle {

namespace {

// States with a strategy that reaches a target with positive probability:
// plain backwards reachability across every transition.
std::vector<char> can_reach_target(const ExplicitMdp& e) {
  std::int64_t n = e.num_states();
  std::vector<std::vector<std::int32_t>> pred(n);
  for (std::int32_t s = 0; s < n; ++s) {
    for (const auto& dist : e.actions[s]) {
      for (const auto& [t, p] : dist) {
        if (p > 0.0) pred[t].push_back(s);
      }
    }
  }
  std::vector<char> reach(n, 0);
  std::vector<std::int32_t> stack;
  for (std::int32_t s = 0; s < n; ++s) {
    if (e.target[s]) {
      reach[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    std::int32_t t = stack.back();
    stack.pop_back();
    for (std::int32_t s : pred[t]) {
      if (!reach[s]) {
        reach[s] = 1;
        stack.push_back(s);
      }
    }
  }
  return reach;
}

// States with a strategy that reaches a target almost surely: greatest
// fixpoint over a safe set Y of the least fixpoint "reach targets while
// staying in Y".
std::vector<char> almost_sure(const ExplicitMdp& e) {
  std::int64_t n = e.num_states();
  std::vector<char> y(n, 1);
  for (;;) {
    std::vector<char> x(n, 0);
    for (std::int32_t s = 0; s < n; ++s) x[s] = e.target[s];
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::int32_t s = 0; s < n; ++s) {
        if (x[s] || !y[s]) continue;
        for (const auto& dist : e.actions[s]) {
          bool stays = true, enters = false;
          for (const auto& [t, p] : dist) {
            if (p <= 0.0) continue;
            if (!y[t]) stays = false;
            if (x[t]) enters = true;
          }
          if (stays && enters) {
            x[s] = 1;
            grew = true;
            break;
          }
        }
      }
    }
    if (x == y) return y;
    y = std::move(x);
  }
}

// Strongly connected components of the digraph restricted to `member`
// states and `allowed` actions, via Kosaraju's two-pass sweep.
std::vector<std::vector<std::int32_t>> sccs(
    const ExplicitMdp& e, const std::vector<char>& member,
    const std::vector<std::vector<char>>& allowed) {
  std::int64_t n = e.num_states();
  std::vector<std::vector<std::int32_t>> fwd(n), back(n);
  for (std::int32_t s = 0; s < n; ++s) {
    if (!member[s]) continue;
    for (std::size_t a = 0; a < e.actions[s].size(); ++a) {
      if (!allowed[s][a]) continue;
      for (const auto& [t, p] : e.actions[s][a]) {
        if (p <= 0.0 || !member[t]) continue;
        fwd[s].push_back(t);
        back[t].push_back(s);
      }
    }
  }
  // First pass: record finish order with an explicit stack.
  std::vector<std::int32_t> order;
  std::vector<char> seen(n, 0);
  for (std::int32_t root = 0; root < n; ++root) {
    if (!member[root] || seen[root]) continue;
    std::vector<std::pair<std::int32_t, std::size_t>> st{{root, 0}};
    seen[root] = 1;
    while (!st.empty()) {
      auto& [s, i] = st.back();
      if (i < fwd[s].size()) {
        std::int32_t t = fwd[s][i++];
        if (!seen[t]) {
          seen[t] = 1;
          st.push_back({t, 0});
        }
      } else {
        order.push_back(s);
        st.pop_back();
      }
    }
  }
  // Second pass: sweep the transpose in reverse finish order.
  std::vector<std::vector<std::int32_t>> comps;
  std::vector<char> done(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (done[*it]) continue;
    comps.emplace_back();
    std::vector<std::int32_t> st{*it};
    done[*it] = 1;
    while (!st.empty()) {
      std::int32_t s = st.back();
      st.pop_back();
      comps.back().push_back(s);
      for (std::int32_t t : back[s]) {
        if (!done[t]) {
          done[t] = 1;
          st.push_back(t);
        }
      }
    }
  }
  return comps;
}

std::vector<std::vector<std::int32_t>> max_end_components(const ExplicitMdp& e) {
  std::int64_t n = e.num_states();
  std::vector<std::vector<std::int32_t>> work, out;
  {
    std::vector<std::int32_t> all(n);
    for (std::int32_t s = 0; s < n; ++s) all[s] = s;
    work.push_back(std::move(all));
  }
  while (!work.empty()) {
    std::vector<std::int32_t> c = std::move(work.back());
    work.pop_back();
    std::vector<char> member(n, 0);
    for (std::int32_t s : c) member[s] = 1;
    // An action is allowed when its whole support stays inside the set.
    std::vector<std::vector<char>> allowed(n);
    std::vector<char> has_allowed(n, 0);
    for (std::int32_t s : c) {
      allowed[s].assign(e.actions[s].size(), 0);
      for (std::size_t a = 0; a < e.actions[s].size(); ++a) {
        bool inside = true;
        for (const auto& [t, p] : e.actions[s][a]) {
          if (p > 0.0 && !member[t]) {
            inside = false;
            break;
          }
        }
        if (inside) {
          allowed[s][a] = 1;
          has_allowed[s] = 1;
        }
      }
    }
    auto comps = sccs(e, member, allowed);
    bool intact = comps.size() == 1 && comps[0].size() == c.size();
    if (intact) {
      bool all_closed = true;
      for (std::int32_t s : c) {
        if (!has_allowed[s]) {
          all_closed = false;
          break;
        }
      }
      if (all_closed) {
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        continue;
      }
    }
    for (auto& comp : comps) {
      // Drop states that cannot stay inside; singletons survive only with a
      // self-closing action.
      std::vector<std::int32_t> next;
      for (std::int32_t s : comp) {
        if (has_allowed[s]) next.push_back(s);
      }
      if (next.empty()) continue;
      if (next.size() == comp.size() && comp.size() == c.size()) {
        // No progress would loop forever; cannot happen because intact
        // components with all states closed were emitted above.
        continue;
      }
      if (next.size() == 1) {
        // Self-closing check: some action's support is exactly this state.
        std::int32_t s = next[0];
        bool self_loop = false;
        for (std::size_t a = 0; a < e.actions[s].size(); ++a) {
          bool inside = true;
          bool any = false;
          for (const auto& [t, p] : e.actions[s][a]) {
            if (p <= 0.0) continue;
            any = true;
            if (t != s) inside = false;
          }
          if (any && inside) {
            self_loop = true;
            break;
          }
        }
        if (self_loop) out.push_back({s});
        continue;
      }
      work.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

double value_iteration_oracle(const ExplicitMdp& e, double eps) {
  std::int64_t n = e.num_states();
  if (n == 0) throw std::runtime_error("oracle: empty model");
  std::vector<char> positive = can_reach_target(e);
  std::vector<char> sure = almost_sure(e);

  // Quotient representative per state: end components collapse to one state.
  std::vector<std::int32_t> rep(n);
  for (std::int32_t s = 0; s < n; ++s) rep[s] = s;
  auto mecs = max_end_components(e);
  std::vector<std::vector<std::int32_t>> mec_of(n);
  std::vector<std::int32_t> mec_id(n, -1);
  for (std::size_t i = 0; i < mecs.size(); ++i) {
    for (std::int32_t s : mecs[i]) {
      rep[s] = mecs[i][0];
      mec_id[s] = (std::int32_t)i;
    }
  }

  std::vector<double> lo(n, 0.0), hi(n, 1.0);
  std::vector<char> pinned(n, 0);
  for (std::int32_t s = 0; s < n; ++s) {
    if (rep[s] != s) continue;
    if (sure[s]) {
      lo[s] = hi[s] = 1.0;
      pinned[s] = 1;
    } else if (!positive[s]) {
      lo[s] = hi[s] = 0.0;
      pinned[s] = 1;
    }
  }

  // Quotient actions: everything except transitions internal to the state's
  // own end component, with successors redirected to representatives.
  std::vector<std::vector<std::vector<std::pair<std::int32_t, double>>>> qa(n);
  for (std::int32_t s = 0; s < n; ++s) {
    std::int32_t r = rep[s];
    if (pinned[r]) continue;
    for (const auto& dist : e.actions[s]) {
      if (mec_id[s] >= 0) {
        bool internal = true;
        for (const auto& [t, p] : dist) {
          if (p > 0.0 && mec_id[t] != mec_id[s]) {
            internal = false;
            break;
          }
        }
        if (internal) continue;
      }
      std::vector<std::pair<std::int32_t, double>> mapped;
      for (const auto& [t, p] : dist) {
        if (p <= 0.0) continue;
        mapped.emplace_back(rep[t], p);
      }
      qa[r].push_back(std::move(mapped));
    }
  }

  const std::int64_t max_sweeps = 50'000'000;
  for (std::int64_t sweep = 0; sweep < max_sweeps; ++sweep) {
    double gap = 0.0;
    std::vector<double> nlo(lo), nhi(hi);
    for (std::int32_t s = 0; s < n; ++s) {
      if (rep[s] != s || pinned[s]) continue;
      double best_lo = 0.0, best_hi = 0.0;
      for (const auto& dist : qa[s]) {
        double vlo = 0.0, vhi = 0.0;
        for (const auto& [t, p] : dist) {
          vlo += p * lo[t];
          vhi += p * hi[t];
        }
        best_lo = std::max(best_lo, vlo);
        best_hi = std::max(best_hi, vhi);
      }
      nlo[s] = best_lo;
      nhi[s] = best_hi;
    }
    lo = std::move(nlo);
    hi = std::move(nhi);
    for (std::int32_t s = 0; s < n; ++s) {
      if (rep[s] != s) continue;
      gap = std::max(gap, hi[s] - lo[s]);
    }
    if (gap <= eps) {
      std::int32_t r = rep[e.initial];
      return (lo[r] + hi[r]) / 2.0;
    }
  }
  throw std::runtime_error("oracle: interval iteration did not converge");
}

}  // namespace lazymdp::oracle
