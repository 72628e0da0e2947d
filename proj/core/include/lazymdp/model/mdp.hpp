#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lazymdp/model/expr.hpp"
#include "lazymdp/model/rational.hpp"

namespace lazymdp {

// Finite-range variable. Booleans use lo=0, hi=1 with values 0/1.
struct VarDecl {
  std::string name;
  Type type;
  Value lo;
  Value hi;
  Value init;
};

// Total assignment of values to all declared variables, dense by
// declaration index.
struct Valuation {
  std::vector<Value> values;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.values == b.values;
  }
};

struct ValuationHash {
  std::size_t operator()(const Valuation& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Value x : v.values) {
      h ^= (std::size_t)x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Simultaneous update; variables without an entry keep their value.
// Entries are sorted by variable index and unique.
struct Assignment {
  std::vector<std::pair<std::int32_t, ExprPtr>> updates;
};

struct CommandBranch {
  Rational prob;
  Assignment assign;
};

// Guarded probabilistic command: when the guard holds, one branch fires.
// Branch probabilities are positive and sum to exactly one.
struct Command {
  ExprPtr guard;
  std::vector<CommandBranch> branches;
};

struct SymbolicMdp {
  std::vector<VarDecl> vars;
  std::vector<Command> commands;

  Valuation initial() const {
    Valuation v;
    v.values.reserve(vars.size());
    for (const auto& d : vars) v.values.push_back(d.init);
    return v;
  }

  std::vector<std::string> var_names() const {
    std::vector<std::string> names;
    names.reserve(vars.size());
    for (const auto& d : vars) names.push_back(d.name);
    return names;
  }
};

// Maximal probability of eventually satisfying `target`.
struct ReachabilityQuery {
  ExprPtr target;
};

// Model extended with a self-loop command guarded by the target predicate;
// a state is a target state exactly when that command is enabled.
struct TargetedModel {
  SymbolicMdp model;
  std::int32_t target_command;

  const ExprPtr& target_guard() const {
    return model.commands[target_command].guard;
  }
};

TargetedModel with_target_command(const SymbolicMdp& m, const ReachabilityQuery& q);

// Number of valuations of the declared ranges (capped at INT64_MAX).
std::int64_t valuation_space_size(const std::vector<VarDecl>& vars);

}  // namespace lazymdp
