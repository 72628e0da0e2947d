#include "lazymdp/model/eval.hpp"

#include <unordered_map>

namespace lazymdp {

namespace {

Value checked_add(Value a, Value b) {
  Value r;
  if (__builtin_add_overflow(a, b, &r)) throw EvalError("integer overflow in +");
  return r;
}

Value checked_sub(Value a, Value b) {
  Value r;
  if (__builtin_sub_overflow(a, b, &r)) throw EvalError("integer overflow in -");
  return r;
}

Value checked_mul(Value a, Value b) {
  Value r;
  if (__builtin_mul_overflow(a, b, &r)) throw EvalError("integer overflow in *");
  return r;
}

Value checked_neg(Value a) {
  Value r;
  if (__builtin_sub_overflow((Value)0, a, &r)) throw EvalError("integer overflow in unary -");
  return r;
}

}  // namespace

Value eval(const ExprPtr& e, const Valuation& val) {
  switch (e->op) {
    case ExprOp::IntLit:
    case ExprOp::BoolLit:
      return e->lit;
    case ExprOp::Var:
      return val.values.at(e->var);
    case ExprOp::Neg:
      return checked_neg(eval(e->lhs, val));
    case ExprOp::Not:
      return eval(e->lhs, val) ? 0 : 1;
    case ExprOp::Add:
      return checked_add(eval(e->lhs, val), eval(e->rhs, val));
    case ExprOp::Sub:
      return checked_sub(eval(e->lhs, val), eval(e->rhs, val));
    case ExprOp::Mul:
      return checked_mul(eval(e->lhs, val), eval(e->rhs, val));
    case ExprOp::Eq:
      return eval(e->lhs, val) == eval(e->rhs, val) ? 1 : 0;
    case ExprOp::Ne:
      return eval(e->lhs, val) != eval(e->rhs, val) ? 1 : 0;
    case ExprOp::Lt:
      return eval(e->lhs, val) < eval(e->rhs, val) ? 1 : 0;
    case ExprOp::Le:
      return eval(e->lhs, val) <= eval(e->rhs, val) ? 1 : 0;
    case ExprOp::Gt:
      return eval(e->lhs, val) > eval(e->rhs, val) ? 1 : 0;
    case ExprOp::Ge:
      return eval(e->lhs, val) >= eval(e->rhs, val) ? 1 : 0;
    case ExprOp::And:
      return (eval(e->lhs, val) && eval(e->rhs, val)) ? 1 : 0;
    case ExprOp::Or:
      return (eval(e->lhs, val) || eval(e->rhs, val)) ? 1 : 0;
    case ExprOp::Imp:
      return (!eval(e->lhs, val) || eval(e->rhs, val)) ? 1 : 0;
  }
  throw ContractError("eval: bad opcode");
}

Valuation apply(const Assignment& a, const Valuation& val, const SymbolicMdp& m) {
  Valuation out = val;
  for (const auto& [idx, rhs] : a.updates) {
    Value v = eval(rhs, val);
    const VarDecl& d = m.vars.at(idx);
    if (v < d.lo || v > d.hi) {
      throw EvalError("assignment to " + d.name + " out of range: " + std::to_string(v));
    }
    out.values[idx] = v;
  }
  return out;
}

std::vector<std::pair<Valuation, Rational>> successor_distribution(
    const Command& c, const Valuation& val, const SymbolicMdp& m) {
  std::vector<std::pair<Valuation, Rational>> dist;
  std::unordered_map<Valuation, std::size_t, ValuationHash> index;
  for (const auto& br : c.branches) {
    Valuation succ = apply(br.assign, val, m);
    auto [it, fresh] = index.try_emplace(succ, dist.size());
    if (fresh) {
      dist.emplace_back(std::move(succ), br.prob);
    } else {
      dist[it->second].second = dist[it->second].second + br.prob;
    }
  }
  return dist;
}

std::vector<std::int32_t> enabled_commands(const SymbolicMdp& m, const Valuation& val) {
  std::vector<std::int32_t> out;
  for (std::size_t i = 0; i < m.commands.size(); ++i) {
    if (eval_bool(m.commands[i].guard, val)) out.push_back((std::int32_t)i);
  }
  return out;
}

namespace {

ExprPtr substitute(const ExprPtr& e,
                   const std::unordered_map<std::int32_t, ExprPtr>& map) {
  switch (e->op) {
    case ExprOp::IntLit:
    case ExprOp::BoolLit:
      return e;
    case ExprOp::Var: {
      auto it = map.find(e->var);
      return it == map.end() ? e : it->second;
    }
    case ExprOp::Neg:
      return Expr::neg(substitute(e->lhs, map));
    case ExprOp::Not:
      return Expr::lnot(substitute(e->lhs, map));
    default:
      return Expr::binary(e->op, substitute(e->lhs, map), substitute(e->rhs, map));
  }
}

}  // namespace

ExprPtr weakest_precondition(const Assignment& a, const ExprPtr& b) {
  std::unordered_map<std::int32_t, ExprPtr> map;
  for (const auto& [idx, rhs] : a.updates) map.emplace(idx, rhs);
  return substitute(b, map);
}

ExprPtr substitute_partial(const ExprPtr& e,
                           const std::vector<std::optional<Value>>& partial) {
  switch (e->op) {
    case ExprOp::IntLit:
    case ExprOp::BoolLit:
      return e;
    case ExprOp::Var: {
      if (e->var < (std::int32_t)partial.size() && partial[e->var].has_value()) {
        Value v = *partial[e->var];
        return e->type == Type::Bool ? Expr::bool_lit(v != 0) : Expr::int_lit(v);
      }
      return e;
    }
    case ExprOp::Neg:
      return Expr::neg(substitute_partial(e->lhs, partial));
    case ExprOp::Not:
      return Expr::lnot(substitute_partial(e->lhs, partial));
    default:
      return Expr::binary(e->op, substitute_partial(e->lhs, partial),
                          substitute_partial(e->rhs, partial));
  }
}

}  // namespace lazymdp
