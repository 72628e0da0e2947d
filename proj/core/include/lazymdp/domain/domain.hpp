#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "lazymdp/model/eval.hpp"
#include "lazymdp/model/mdp.hpp"

namespace lazymdp {

enum class TriBool : std::uint8_t { False, True, Unknown };

inline TriBool tri_of(bool b) { return b ? TriBool::True : TriBool::False; }

// Partial valuation: tracked variables pin a value, untracked ones range
// freely. The dedicated bottom element denotes the empty set of states.
struct ExplState {
  bool bottom = false;
  std::vector<std::optional<Value>> vals;  // indexed by variable

  std::size_t tracked_count() const {
    std::size_t n = 0;
    for (const auto& v : vals)
      if (v) ++n;
    return n;
  }
};

// Boolean predicate over the model variables; top is `true`, bottom is any
// unsatisfiable formula.
struct PredState {
  ExprPtr pred;
};

using AbstractState = std::variant<ExplState, PredState>;

// Overapproximating state domain. eval_pred is conservative three-valued:
// True/False answers hold on every concretization; Unknown is always sound.
// block(s, b, c) returns a state s' with s' below s, c in s', and
// eval_pred(b, s') == False; callers must guarantee eval(b, c) is false.
class StateDomain {
 public:
  virtual ~StateDomain() = default;

  virtual AbstractState top() const = 0;
  virtual bool contains(const AbstractState& a, const Valuation& s) const = 0;
  virtual bool leq(const AbstractState& a, const AbstractState& b) const = 0;
  virtual TriBool eval_pred(const ExprPtr& b, const AbstractState& a) const = 0;
  virtual AbstractState block(const AbstractState& a, const ExprPtr& b,
                              const Valuation& s) const = 0;
  virtual ExprPtr to_expr(const AbstractState& a) const = 0;

  // Rendering for debug output and error messages.
  virtual std::string describe(const AbstractState& a) const = 0;
};

class ExplDomain final : public StateDomain {
 public:
  explicit ExplDomain(std::vector<VarDecl> vars);

  AbstractState top() const override;
  bool contains(const AbstractState& a, const Valuation& s) const override;
  bool leq(const AbstractState& a, const AbstractState& b) const override;
  TriBool eval_pred(const ExprPtr& b, const AbstractState& a) const override;
  AbstractState block(const AbstractState& a, const ExprPtr& b,
                      const Valuation& s) const override;
  ExprPtr to_expr(const AbstractState& a) const override;
  std::string describe(const AbstractState& a) const override;

 private:
  std::vector<VarDecl> vars_;
};

class Entailment;

class PredDomain final : public StateDomain {
 public:
  PredDomain(std::vector<VarDecl> vars, std::shared_ptr<Entailment> ent);

  AbstractState top() const override;
  bool contains(const AbstractState& a, const Valuation& s) const override;
  bool leq(const AbstractState& a, const AbstractState& b) const override;
  TriBool eval_pred(const ExprPtr& b, const AbstractState& a) const override;
  AbstractState block(const AbstractState& a, const ExprPtr& b,
                      const Valuation& s) const override;
  ExprPtr to_expr(const AbstractState& a) const override;
  std::string describe(const AbstractState& a) const override;

 private:
  std::vector<VarDecl> vars_;
  std::shared_ptr<Entailment> ent_;
};

}  // namespace lazymdp
