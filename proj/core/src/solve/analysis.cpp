#include <algorithm>

#include "lazymdp/solve/analysis.hpp"

namespace lazymdp::solve {

std::vector<char> prob0(const MdpView& v) {
  std::int64_t n = v.num_states();
  std::vector<std::vector<std::int32_t>> pred(n);
  for (std::int32_t s = 0; s < n; ++s)
    for (const auto& dist : v.actions[s])
      for (const auto& [t, p] : dist) pred[t].push_back(s);
  std::vector<char> reaches(n, 0);
  std::vector<std::int32_t> queue;
  for (std::int32_t s = 0; s < n; ++s) {
    if (v.target[s]) {
      reaches[s] = 1;
      queue.push_back(s);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::int32_t s : pred[queue[qi]]) {
      if (!reaches[s]) {
        reaches[s] = 1;
        queue.push_back(s);
      }
    }
  }
  std::vector<char> out(n);
  for (std::int32_t s = 0; s < n; ++s) out[s] = !reaches[s];
  return out;
}

std::vector<char> prob1max(const MdpView& v) {
  std::int64_t n = v.num_states();
  std::vector<char> safe(n, 1);
  for (;;) {
    // Least fixpoint inside `safe`: reach a target without ever being
    // forced out of `safe`.
    std::vector<char> win(n, 0);
    for (std::int32_t s = 0; s < n; ++s) win[s] = v.target[s];
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::int32_t s = 0; s < n; ++s) {
        if (win[s] || !safe[s]) continue;
        for (const auto& dist : v.actions[s]) {
          bool inside = true, makes_progress = false;
          for (const auto& [t, p] : dist) {
            if (!safe[t]) inside = false;
            if (win[t]) makes_progress = true;
          }
          if (inside && makes_progress) {
            win[s] = 1;
            grew = true;
            break;
          }
        }
      }
    }
    if (win == safe) return safe;
    safe = std::move(win);
  }
}

namespace {

// Strongly connected components of `states` restricted to the transitions
// of actions flagged closed, via an iterative Tarjan sweep.
std::vector<std::vector<std::int32_t>> strongly_connected(
    const MdpView& v, const std::vector<std::int32_t>& states,
    const std::vector<std::vector<char>>& closed) {
  std::int32_t m = (std::int32_t)states.size();
  std::vector<std::int32_t> local(v.num_states(), -1);
  for (std::int32_t i = 0; i < m; ++i) local[states[i]] = i;
  std::vector<std::vector<std::int32_t>> adj(m);
  for (std::int32_t i = 0; i < m; ++i) {
    std::int32_t s = states[i];
    for (std::size_t a = 0; a < v.actions[s].size(); ++a) {
      if (!closed[s][a]) continue;
      for (const auto& [t, p] : v.actions[s][a]) adj[i].push_back(local[t]);
    }
    std::sort(adj[i].begin(), adj[i].end());
    adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
  }

  std::vector<std::int32_t> index(m, -1), low(m, 0), stack;
  std::vector<char> on_stack(m, 0);
  std::int32_t counter = 0;
  std::vector<std::vector<std::int32_t>> comps;
  struct Frame {
    std::int32_t v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (std::int32_t root = 0; root < m; ++root) {
    if (index[root] != -1) continue;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < adj[f.v].size()) {
        std::int32_t w = adj[f.v][f.next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        std::int32_t done = f.v;
        if (low[done] == index[done]) {
          comps.emplace_back();
          for (;;) {
            std::int32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comps.back().push_back(states[w]);
            if (w == done) break;
          }
        }
        call.pop_back();
        if (!call.empty())
          low[call.back().v] = std::min(low[call.back().v], low[done]);
      }
    }
  }
  return comps;
}

}  // namespace

std::vector<Mec> mec_decomposition(const MdpView& v) {
  std::int64_t n = v.num_states();
  std::vector<std::vector<std::int32_t>> work;
  {
    std::vector<std::int32_t> all(n);
    for (std::int32_t s = 0; s < n; ++s) all[s] = s;
    work.push_back(std::move(all));
  }
  std::vector<Mec> out;
  std::vector<char> member(n, 0);
  std::vector<std::vector<char>> closed(n);
  while (!work.empty()) {
    std::vector<std::int32_t> cand = std::move(work.back());
    work.pop_back();
    for (std::int32_t s : cand) member[s] = 1;
    // A closed action never leaves the candidate set.
    std::vector<std::int32_t> kept;
    for (std::int32_t s : cand) {
      closed[s].assign(v.actions[s].size(), 0);
      bool any = false;
      for (std::size_t a = 0; a < v.actions[s].size(); ++a) {
        bool inside = true;
        for (const auto& [t, p] : v.actions[s][a]) {
          if (!member[t]) {
            inside = false;
            break;
          }
        }
        if (inside) {
          closed[s][a] = 1;
          any = true;
        }
      }
      if (any) kept.push_back(s);
    }
    if (kept.size() != cand.size()) {
      for (std::int32_t s : cand) member[s] = 0;
      if (!kept.empty()) work.push_back(std::move(kept));
      continue;
    }
    auto comps = strongly_connected(v, cand, closed);
    for (std::int32_t s : cand) member[s] = 0;
    if (comps.size() == 1 && comps[0].size() == cand.size()) {
      std::sort(cand.begin(), cand.end());
      out.push_back(Mec{std::move(cand)});
      continue;
    }
    for (auto& comp : comps) work.push_back(std::move(comp));
  }
  // Deterministic order regardless of the splitting schedule.
  std::sort(out.begin(), out.end(),
            [](const Mec& a, const Mec& b) { return a.states[0] < b.states[0]; });
  return out;
}

}  // namespace lazymdp::solve
