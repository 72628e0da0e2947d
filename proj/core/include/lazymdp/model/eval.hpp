#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lazymdp/model/mdp.hpp"

namespace lazymdp {

// Evaluate under a total valuation. Booleans come back as 0/1. Arithmetic
// runs in int64 with overflow checks; overflow raises EvalError.
Value eval(const ExprPtr& e, const Valuation& val);

inline bool eval_bool(const ExprPtr& e, const Valuation& val) {
  return eval(e, val) != 0;
}

// Apply a simultaneous assignment. A result outside a variable's declared
// range is a modeling error and raises EvalError; nothing is clamped.
Valuation apply(const Assignment& a, const Valuation& val, const SymbolicMdp& m);

// Successor distribution of a command: branch results with equal valuations
// are merged and their probabilities added. Order of first occurrence.
// Caller must ensure the guard holds at val.
std::vector<std::pair<Valuation, Rational>> successor_distribution(
    const Command& c, const Valuation& val, const SymbolicMdp& m);

// Indices of commands whose guard holds, ascending.
std::vector<std::int32_t> enabled_commands(const SymbolicMdp& m, const Valuation& val);

// Weakest precondition: substitute each assigned variable's expression for
// the variable, simultaneously. eval(wp(a,b), s) == eval(b, apply(a,s)).
ExprPtr weakest_precondition(const Assignment& a, const ExprPtr& b);

// Substitute values for the variables present in `partial` (indexed by
// variable, nullopt = keep the variable symbolic).
ExprPtr substitute_partial(const ExprPtr& e, const std::vector<std::optional<Value>>& partial);

// Enumerate every valuation of the declared ranges in odometer order
// (last variable fastest). Stops early if fn returns false.
template <typename Fn>
void for_each_valuation(const std::vector<VarDecl>& vars, Fn&& fn) {
  Valuation v;
  v.values.reserve(vars.size());
  for (const auto& d : vars) v.values.push_back(d.lo);
  for (;;) {
    if (!fn((const Valuation&)v)) return;
    std::size_t i = vars.size();
    for (;;) {
      if (i == 0) return;  // every position carried: enumeration done
      --i;
      if (v.values[i] < vars[i].hi) {
        ++v.values[i];
        for (std::size_t j = i + 1; j < vars.size(); ++j) v.values[j] = vars[j].lo;
        break;
      }
    }
  }
}

}  // namespace lazymdp
