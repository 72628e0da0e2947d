#include <sstream>

#include "lazymdp/domain/domain.hpp"
#include "lazymdp/model/simplify.hpp"

namespace lazymdp {

namespace {

const ExplState& as_expl(const AbstractState& a) {
  const ExplState* p = std::get_if<ExplState>(&a);
  if (!p) throw ContractError("ExplDomain: state from a different domain");
  return *p;
}

}  // namespace

ExplDomain::ExplDomain(std::vector<VarDecl> vars) : vars_(std::move(vars)) {}

AbstractState ExplDomain::top() const {
  ExplState s;
  s.vals.resize(vars_.size());
  return s;
}

bool ExplDomain::contains(const AbstractState& a, const Valuation& s) const {
  const ExplState& p = as_expl(a);
  if (p.bottom) return false;
  for (std::size_t i = 0; i < p.vals.size(); ++i) {
    if (p.vals[i] && *p.vals[i] != s.values[i]) return false;
  }
  return true;
}

bool ExplDomain::leq(const AbstractState& a, const AbstractState& b) const {
  const ExplState& x = as_expl(a);
  const ExplState& y = as_expl(b);
  if (x.bottom) return true;
  if (y.bottom) return false;
  // x is finer: it tracks every variable y tracks, with the same value.
  for (std::size_t i = 0; i < y.vals.size(); ++i) {
    if (!y.vals[i]) continue;
    if (!x.vals[i] || *x.vals[i] != *y.vals[i]) return false;
  }
  return true;
}

TriBool ExplDomain::eval_pred(const ExprPtr& b, const AbstractState& a) const {
  const ExplState& p = as_expl(a);
  if (p.bottom) return TriBool::False;  // vacuous over the empty set
  ExprPtr residual = simplify(substitute_partial(b, p.vals));
  if (auto c = as_bool_const(residual)) return tri_of(*c);
  return TriBool::Unknown;
}

AbstractState ExplDomain::block(const AbstractState& a, const ExprPtr& b,
                                const Valuation& s) const {
  const ExplState& p = as_expl(a);
  if (p.bottom) throw ContractError("ExplDomain::block: bottom state");
  if (!contains(a, s)) throw ContractError("ExplDomain::block: witness not contained");
  if (eval_bool(b, s)) throw ContractError("ExplDomain::block: predicate holds at witness");

  // Pin the untracked variables of b, in order of first occurrence, with the
  // witness values until the substitution residue folds to false. Once every
  // variable of b is pinned the residue is eval(b, s), so this terminates.
  ExplState out = p;
  std::vector<std::int32_t> order;
  std::vector<char> seen(vars_.size(), 0);
  collect_vars_in_order(b, order, seen);
  AbstractState cur = out;
  if (eval_pred(b, cur) == TriBool::False) return cur;
  for (std::int32_t v : order) {
    if (out.vals[v]) continue;
    out.vals[v] = s.values[v];
    cur = out;
    if (eval_pred(b, cur) == TriBool::False) return cur;
  }
  throw ContractError("ExplDomain::block: could not make predicate false");
}

ExprPtr ExplDomain::to_expr(const AbstractState& a) const {
  const ExplState& p = as_expl(a);
  if (p.bottom) return Expr::bool_lit(false);
  ExprPtr acc;
  for (std::size_t i = 0; i < p.vals.size(); ++i) {
    if (!p.vals[i]) continue;
    ExprPtr var = Expr::var_ref((std::int32_t)i, vars_[i].type);
    ExprPtr term;
    if (vars_[i].type == Type::Bool) {
      term = *p.vals[i] ? var : Expr::lnot(var);
    } else {
      term = Expr::eq(var, Expr::int_lit(*p.vals[i]));
    }
    acc = acc ? Expr::land(acc, term) : term;
  }
  return acc ? acc : Expr::bool_lit(true);
}

std::string ExplDomain::describe(const AbstractState& a) const {
  const ExplState& p = as_expl(a);
  if (p.bottom) return "{bot}";
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (std::size_t i = 0; i < p.vals.size(); ++i) {
    if (!p.vals[i]) continue;
    if (!first) out << ", ";
    first = false;
    out << vars_[i].name << "=" << *p.vals[i];
  }
  out << "}";
  return out.str();
}

}  // namespace lazymdp
