#include "lazymdp/model/mdp.hpp"

namespace lazymdp {

TargetedModel with_target_command(const SymbolicMdp& m, const ReachabilityQuery& q) {
  if (!q.target || q.target->type != Type::Bool) {
    throw ContractError("with_target_command: target must be a boolean expression");
  }
  TargetedModel t;
  t.model = m;
  Command c;
  c.guard = q.target;
  CommandBranch b;
  b.prob = Rational(1);
  // Empty update set: the identity assignment.
  c.branches.push_back(std::move(b));
  t.model.commands.push_back(std::move(c));
  t.target_command = (std::int32_t)t.model.commands.size() - 1;
  return t;
}

std::int64_t valuation_space_size(const std::vector<VarDecl>& vars) {
  __int128 n = 1;
  for (const auto& d : vars) {
    n *= (__int128)(d.hi - d.lo + 1);
    if (n > INT64_MAX) return INT64_MAX;
  }
  return (std::int64_t)n;
}

}  // namespace lazymdp
