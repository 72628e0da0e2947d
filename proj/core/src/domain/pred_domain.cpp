#include "lazymdp/domain/domain.hpp"
#include "lazymdp/domain/entailment.hpp"
#include "lazymdp/model/simplify.hpp"

namespace lazymdp {

namespace {

const PredState& as_pred(const AbstractState& a) {
  const PredState* p = std::get_if<PredState>(&a);
  if (!p) throw ContractError("PredDomain: state from a different domain");
  return *p;
}

}  // namespace

PredDomain::PredDomain(std::vector<VarDecl> vars, std::shared_ptr<Entailment> ent)
    : vars_(std::move(vars)), ent_(std::move(ent)) {
  if (!ent_) throw ContractError("PredDomain: null entailment backend");
}

AbstractState PredDomain::top() const { return PredState{Expr::bool_lit(true)}; }

bool PredDomain::contains(const AbstractState& a, const Valuation& s) const {
  return eval_bool(as_pred(a).pred, s);
}

bool PredDomain::leq(const AbstractState& a, const AbstractState& b) const {
  return ent_->entails(as_pred(a).pred, as_pred(b).pred);
}

TriBool PredDomain::eval_pred(const ExprPtr& b, const AbstractState& a) const {
  const ExprPtr& s = as_pred(a).pred;
  if (ent_->entails(s, b)) return TriBool::True;
  if (ent_->entails(s, simplify(Expr::lnot(b)))) return TriBool::False;
  return TriBool::Unknown;
}

AbstractState PredDomain::block(const AbstractState& a, const ExprPtr& b,
                                const Valuation& s) const {
  const ExprPtr& cur = as_pred(a).pred;
  if (!eval_bool(cur, s)) throw ContractError("PredDomain::block: witness not contained");
  if (eval_bool(b, s)) throw ContractError("PredDomain::block: predicate holds at witness");
  return PredState{simplify(Expr::land(cur, Expr::lnot(b)))};
}

ExprPtr PredDomain::to_expr(const AbstractState& a) const { return as_pred(a).pred; }

std::string PredDomain::describe(const AbstractState& a) const {
  std::vector<std::string> names;
  names.reserve(vars_.size());
  for (const auto& d : vars_) names.push_back(d.name);
  return to_string(as_pred(a).pred, names);
}

}  // namespace lazymdp
