#include "lazymdp/model/expr.hpp"

#include <sstream>

namespace lazymdp {

std::shared_ptr<Expr> Expr::make(ExprOp o, Type t) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->op = o;
  e->type = t;
  return e;
}

ExprPtr Expr::int_lit(Value v) {
  auto e = make(ExprOp::IntLit, Type::Int);
  e->lit = v;
  return e;
}

ExprPtr Expr::bool_lit(bool v) {
  auto e = make(ExprOp::BoolLit, Type::Bool);
  e->lit = v ? 1 : 0;
  return e;
}

ExprPtr Expr::var_ref(std::int32_t index, Type t) {
  if (index < 0) throw ContractError("var_ref: negative variable index");
  auto e = make(ExprOp::Var, t);
  e->var = index;
  return e;
}

ExprPtr Expr::neg(ExprPtr x) {
  if (!x || x->type != Type::Int) throw ContractError("neg: operand must be int");
  auto e = make(ExprOp::Neg, Type::Int);
  e->lhs = std::move(x);
  return e;
}

ExprPtr Expr::lnot(ExprPtr x) {
  if (!x || x->type != Type::Bool) throw ContractError("lnot: operand must be bool");
  auto e = make(ExprOp::Not, Type::Bool);
  e->lhs = std::move(x);
  return e;
}

ExprPtr Expr::binary(ExprOp o, ExprPtr l, ExprPtr r) {
  if (!l || !r) throw ContractError("binary: null operand");
  Type in, out;
  switch (o) {
    case ExprOp::Add:
    case ExprOp::Sub:
    case ExprOp::Mul:
      in = Type::Int;
      out = Type::Int;
      break;
    case ExprOp::Eq:
    case ExprOp::Ne:
    case ExprOp::Lt:
    case ExprOp::Le:
    case ExprOp::Gt:
    case ExprOp::Ge:
      in = Type::Int;
      out = Type::Bool;
      break;
    case ExprOp::And:
    case ExprOp::Or:
    case ExprOp::Imp:
      in = Type::Bool;
      out = Type::Bool;
      break;
    default:
      throw ContractError("binary: not a binary operator");
  }
  if (l->type != in || r->type != in) throw ContractError("binary: operand type mismatch");
  auto e = make(o, out);
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->lit != b->lit || a->var != b->var) return false;
  if ((a->lhs == nullptr) != (b->lhs == nullptr)) return false;
  if ((a->rhs == nullptr) != (b->rhs == nullptr)) return false;
  if (a->lhs && !structurally_equal(a->lhs, b->lhs)) return false;
  if (a->rhs && !structurally_equal(a->rhs, b->rhs)) return false;
  return true;
}

std::optional<bool> as_bool_const(const ExprPtr& e) {
  if (e && e->op == ExprOp::BoolLit) return e->lit != 0;
  return std::nullopt;
}

void collect_vars_in_order(const ExprPtr& e, std::vector<std::int32_t>& order,
                           std::vector<char>& seen) {
  if (!e) return;
  if (e->op == ExprOp::Var) {
    if (e->var < (std::int32_t)seen.size() && !seen[e->var]) {
      seen[e->var] = 1;
      order.push_back(e->var);
    }
    return;
  }
  collect_vars_in_order(e->lhs, order, seen);
  collect_vars_in_order(e->rhs, order, seen);
}

namespace {

// Larger binds tighter.
int precedence(ExprOp op) {
  switch (op) {
    case ExprOp::Imp: return 1;
    case ExprOp::Or: return 2;
    case ExprOp::And: return 3;
    case ExprOp::Eq:
    case ExprOp::Ne:
    case ExprOp::Lt:
    case ExprOp::Le:
    case ExprOp::Gt:
    case ExprOp::Ge: return 4;
    case ExprOp::Add:
    case ExprOp::Sub: return 5;
    case ExprOp::Mul: return 6;
    case ExprOp::Neg:
    case ExprOp::Not: return 7;
    default: return 8;
  }
}

const char* op_token(ExprOp op) {
  switch (op) {
    case ExprOp::Add: return "+";
    case ExprOp::Sub: return "-";
    case ExprOp::Mul: return "*";
    case ExprOp::Eq: return "==";
    case ExprOp::Ne: return "!=";
    case ExprOp::Lt: return "<";
    case ExprOp::Le: return "<=";
    case ExprOp::Gt: return ">";
    case ExprOp::Ge: return ">=";
    case ExprOp::And: return "&";
    case ExprOp::Or: return "|";
    case ExprOp::Imp: return "=>";
    default: return "?";
  }
}

void render(const ExprPtr& e, const std::vector<std::string>& names, int parent_prec,
            std::ostringstream& out) {
  int prec = precedence(e->op);
  switch (e->op) {
    case ExprOp::IntLit:
      out << e->lit;
      return;
    case ExprOp::BoolLit:
      out << (e->lit ? "true" : "false");
      return;
    case ExprOp::Var:
      out << names.at(e->var);
      return;
    case ExprOp::Neg:
    case ExprOp::Not: {
      if (prec < parent_prec) out << "(";
      out << (e->op == ExprOp::Neg ? "-" : "!");
      render(e->lhs, names, prec, out);
      if (prec < parent_prec) out << ")";
      return;
    }
    default: {
      // Binary operators render left-associative; the right operand gets
      // prec+1 so chains like a-b-c re-parse to the same tree.
      bool paren = prec < parent_prec;
      if (paren) out << "(";
      render(e->lhs, names, prec, out);
      out << " " << op_token(e->op) << " ";
      render(e->rhs, names, prec + 1, out);
      if (paren) out << ")";
      return;
    }
  }
}

}  // namespace

std::string to_string(const ExprPtr& e, const std::vector<std::string>& var_names) {
  if (!e) return "<null>";
  std::ostringstream out;
  render(e, var_names, 0, out);
  return out.str();
}

}  // namespace lazymdp
