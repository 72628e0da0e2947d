#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lazymdp/model/eval.hpp"
#include "lazymdp/model/mdp.hpp"
#include "lazymdp/solve/view.hpp"
#include "lazymdp/text/parser.hpp"

namespace testsupport {

// Parse helper for inline model sources.
lazymdp::text::ParsedModel parse(const std::string& src);
lazymdp::TargetedModel targeted(const std::string& src);

// Random symbolic MDP within the corpus limits: up to 3 variables with at
// most 4 values each, up to 5 commands with up to 3 branches, and a random
// boolean target.  Assignments are constants, copies, or guarded steps, so
// evaluation never leaves the declared ranges.
lazymdp::text::ParsedModel random_instance(std::uint64_t seed);

// Random boolean expression over the variables (atoms, negations, binary
// connectives); used to fuzz block and entailment.
lazymdp::ExprPtr random_predicate(std::mt19937_64& rng,
                                  const std::vector<lazymdp::VarDecl>& vars);

// Random in-range valuation.
lazymdp::Valuation random_valuation(std::mt19937_64& rng,
                                    const std::vector<lazymdp::VarDecl>& vars);

// Oracles for small explicit MDPs by brute force, used to cross-check the
// graph analyses.  They enumerate memoryless strategies, so they are only
// usable when strategy_count(v) stays small.
std::int64_t strategy_count(const lazymdp::solve::MdpView& v,
                            std::int64_t cap = 1 << 20);
std::vector<char> positive_reach_by_strategies(const lazymdp::solve::MdpView& v);
std::vector<char> almost_sure_by_strategies(const lazymdp::solve::MdpView& v);
double pmax_by_strategies(const lazymdp::solve::MdpView& v);

// Maximal end components by subset enumeration; states must fit in 16.
std::vector<std::vector<std::int32_t>> mecs_by_subsets(
    const lazymdp::solve::MdpView& v);

// Random explicit MDP view: up to `max_states` states, up to 2 actions per
// state, targets absorbing.
lazymdp::solve::MdpView random_view(std::mt19937_64& rng, int max_states);

}  // namespace testsupport
