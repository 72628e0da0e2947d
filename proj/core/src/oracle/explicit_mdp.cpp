#include <deque>
#include <unordered_map>

#include "lazymdp/oracle/explicit_mdp.hpp"

namespace lazymdp::oracle {

EnumResult enumerate(const TargetedModel& tm, std::int64_t max_states) {
  const SymbolicMdp& m = tm.model;
  EnumResult out;
  ExplicitMdp& e = out.mdp;
  out.status = EnumStatus::Complete;

  std::unordered_map<Valuation, std::int32_t, ValuationHash> index;
  std::deque<std::int32_t> frontier;

  auto intern = [&](const Valuation& v) -> std::int32_t {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    std::int32_t id = (std::int32_t)e.states.size();
    index.emplace(v, id);
    e.states.push_back(v);
    e.target.push_back(eval_bool(tm.target_guard(), v) ? 1 : 0);
    e.actions.emplace_back();
    frontier.push_back(id);
    return id;
  };

  e.initial = intern(m.initial());

  while (!frontier.empty()) {
    if ((std::int64_t)e.states.size() > max_states) {
      out.status = EnumStatus::StateBudget;
      break;
    }
    std::int32_t s = frontier.front();
    frontier.pop_front();
    const Valuation v = e.states[s];  // copy: intern() grows the vector

    bool deadlock = true;
    for (std::size_t ci = 0; ci < m.commands.size(); ++ci) {
      const Command& cmd = m.commands[ci];
      if (!eval_bool(cmd.guard, v)) continue;
      deadlock = false;
      auto dist = successor_distribution(cmd, v, m);
      if (e.target[s]) {
        // Successors stay part of the reachable set, but the recorded
        // behavior of a target state is a self-loop.
        for (auto& [succ, pr] : dist) intern(succ);
        continue;
      }
      std::vector<std::pair<std::int32_t, double>> action;
      action.reserve(dist.size());
      for (auto& [succ, pr] : dist) {
        action.emplace_back(intern(succ), pr.to_double());
      }
      e.actions[s].push_back(std::move(action));
    }
    if (e.target[s] || deadlock) {
      e.actions[s].push_back({{s, 1.0}});
    }
  }
  return out;
}

std::optional<std::int64_t> count_reachable(const TargetedModel& tm,
                                            std::int64_t max_states) {
  EnumResult r = enumerate(tm, max_states);
  if (r.status != EnumStatus::Complete) return std::nullopt;
  return r.mdp.num_states();
}

}  // namespace lazymdp::oracle
