#include "lazymdp/model/simplify.hpp"

#include <vector>

namespace lazymdp {

namespace {

bool is_int_lit(const ExprPtr& e, Value v) {
  return e->op == ExprOp::IntLit && e->lit == v;
}

std::optional<Value> fold_arith(ExprOp op, Value a, Value b) {
  Value r;
  switch (op) {
    case ExprOp::Add:
      if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
      return r;
    case ExprOp::Sub:
      if (__builtin_sub_overflow(a, b, &r)) return std::nullopt;
      return r;
    case ExprOp::Mul:
      if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
      return r;
    default:
      return std::nullopt;
  }
}

bool fold_cmp(ExprOp op, Value a, Value b) {
  switch (op) {
    case ExprOp::Eq: return a == b;
    case ExprOp::Ne: return a != b;
    case ExprOp::Lt: return a < b;
    case ExprOp::Le: return a <= b;
    case ExprOp::Gt: return a > b;
    case ExprOp::Ge: return a >= b;
    default: return false;
  }
}

ExprOp negate_cmp(ExprOp op) {
  switch (op) {
    case ExprOp::Eq: return ExprOp::Ne;
    case ExprOp::Ne: return ExprOp::Eq;
    case ExprOp::Lt: return ExprOp::Ge;
    case ExprOp::Le: return ExprOp::Gt;
    case ExprOp::Gt: return ExprOp::Le;
    case ExprOp::Ge: return ExprOp::Lt;
    default: return op;
  }
}

bool is_cmp(ExprOp op) {
  switch (op) {
    case ExprOp::Eq:
    case ExprOp::Ne:
    case ExprOp::Lt:
    case ExprOp::Le:
    case ExprOp::Gt:
    case ExprOp::Ge:
      return true;
    default:
      return false;
  }
}

void collect_chain(const ExprPtr& e, ExprOp op, std::vector<ExprPtr>& out) {
  if (e->op == op) {
    collect_chain(e->lhs, op, out);
    collect_chain(e->rhs, op, out);
  } else {
    out.push_back(e);
  }
}

// Rebuild an and/or chain from already-simplified operands: drop the unit
// element, collapse on the absorbing element, and deduplicate.
ExprPtr rebuild_chain(ExprOp op, std::vector<ExprPtr> terms) {
  const bool unit = (op == ExprOp::And);  // and: true is unit, false absorbs
  std::vector<ExprPtr> kept;
  for (auto& t : terms) {
    if (auto c = as_bool_const(t)) {
      if (*c == unit) continue;
      return Expr::bool_lit(!unit);
    }
    bool dup = false;
    for (const auto& k : kept) {
      if (structurally_equal(k, t)) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(std::move(t));
  }
  if (kept.empty()) return Expr::bool_lit(unit);
  ExprPtr acc = kept[0];
  for (std::size_t i = 1; i < kept.size(); ++i) acc = Expr::binary(op, acc, kept[i]);
  return acc;
}

}  // namespace

ExprPtr simplify(const ExprPtr& e) {
  switch (e->op) {
    case ExprOp::IntLit:
    case ExprOp::BoolLit:
    case ExprOp::Var:
      return e;

    case ExprOp::Neg: {
      ExprPtr x = simplify(e->lhs);
      if (x->op == ExprOp::IntLit && x->lit != INT64_MIN) return Expr::int_lit(-x->lit);
      if (x->op == ExprOp::Neg) return x->lhs;
      return Expr::neg(x);
    }

    case ExprOp::Not: {
      ExprPtr x = simplify(e->lhs);
      if (auto c = as_bool_const(x)) return Expr::bool_lit(!*c);
      if (x->op == ExprOp::Not) return x->lhs;
      if (is_cmp(x->op)) return Expr::binary(negate_cmp(x->op), x->lhs, x->rhs);
      return Expr::lnot(x);
    }

    case ExprOp::Add:
    case ExprOp::Sub:
    case ExprOp::Mul: {
      ExprPtr l = simplify(e->lhs);
      ExprPtr r = simplify(e->rhs);
      if (l->op == ExprOp::IntLit && r->op == ExprOp::IntLit) {
        if (auto v = fold_arith(e->op, l->lit, r->lit)) return Expr::int_lit(*v);
      }
      if (e->op == ExprOp::Add) {
        if (is_int_lit(l, 0)) return r;
        if (is_int_lit(r, 0)) return l;
      } else if (e->op == ExprOp::Sub) {
        if (is_int_lit(r, 0)) return l;
      } else {  // Mul
        if (is_int_lit(l, 1)) return r;
        if (is_int_lit(r, 1)) return l;
        if (is_int_lit(l, 0) || is_int_lit(r, 0)) return Expr::int_lit(0);
      }
      return Expr::binary(e->op, l, r);
    }

    case ExprOp::Eq:
    case ExprOp::Ne:
    case ExprOp::Lt:
    case ExprOp::Le:
    case ExprOp::Gt:
    case ExprOp::Ge: {
      ExprPtr l = simplify(e->lhs);
      ExprPtr r = simplify(e->rhs);
      if (l->op == ExprOp::IntLit && r->op == ExprOp::IntLit) {
        return Expr::bool_lit(fold_cmp(e->op, l->lit, r->lit));
      }
      if (structurally_equal(l, r)) {
        // Reflexive comparison of a pure expression.
        switch (e->op) {
          case ExprOp::Eq:
          case ExprOp::Le:
          case ExprOp::Ge:
            return Expr::bool_lit(true);
          default:
            return Expr::bool_lit(false);
        }
      }
      return Expr::binary(e->op, l, r);
    }

    case ExprOp::And:
    case ExprOp::Or: {
      std::vector<ExprPtr> raw;
      collect_chain(e, e->op, raw);
      std::vector<ExprPtr> terms;
      terms.reserve(raw.size());
      for (const auto& t : raw) terms.push_back(simplify(t));
      return rebuild_chain(e->op, std::move(terms));
    }

    case ExprOp::Imp: {
      ExprPtr l = simplify(e->lhs);
      ExprPtr r = simplify(e->rhs);
      if (auto c = as_bool_const(l)) return *c ? r : Expr::bool_lit(true);
      if (auto c = as_bool_const(r)) {
        if (*c) return Expr::bool_lit(true);
        return simplify(Expr::lnot(l));
      }
      if (structurally_equal(l, r)) return Expr::bool_lit(true);
      return Expr::imp(l, r);
    }
  }
  throw ContractError("simplify: bad opcode");
}

}  // namespace lazymdp
