#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lazymdp/model/eval.hpp"
#include "lazymdp/model/mdp.hpp"

// Reference route: explicit-state enumeration and a self-contained value
// iteration. Everything here depends only on the model layer, so results can
// be compared against the abstraction pipeline without shared solver code.
namespace lazymdp::oracle {

struct ExplicitMdp {
  std::vector<Valuation> states;  // dense, in discovery (BFS) order
  std::vector<char> target;
  // actions[s] -> distributions as (state index, probability) lists.
  // Target states and deadlocks carry a single Dirac self-loop.
  std::vector<std::vector<std::vector<std::pair<std::int32_t, double>>>> actions;
  std::int32_t initial = 0;

  std::int64_t num_states() const { return (std::int64_t)states.size(); }
};

enum class EnumStatus : std::uint8_t { Complete, StateBudget };

struct EnumResult {
  ExplicitMdp mdp;
  EnumStatus status;
};

// Breadth-first closure of the initial valuation under all enabled commands.
// The state set crosses target states (their successors are still explored),
// but the recorded transition structure makes targets absorbing.
EnumResult enumerate(const TargetedModel& tm, std::int64_t max_states = 10'000'000);

// Distinct reachable states, or nullopt when the budget was exceeded.
std::optional<std::int64_t> count_reachable(const TargetedModel& tm,
                                            std::int64_t max_states = 10'000'000);

// Maximal probability of reaching a target state from the initial state,
// accurate to eps. Pins the qualitative sets first, collapses maximal end
// components, then runs interval iteration on the quotient.
double value_iteration_oracle(const ExplicitMdp& e, double eps);

}  // namespace lazymdp::oracle
