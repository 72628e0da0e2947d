#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lazymdp/errors.hpp"

namespace lazymdp {

using Value = std::int64_t;

enum class Type : std::uint8_t { Bool, Int };

enum class ExprOp : std::uint8_t {
  IntLit,
  BoolLit,
  Var,
  Neg,  // unary minus
  Add,
  Sub,
  Mul,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  Not,
  And,
  Or,
  Imp,
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree. Nodes are well-typed by construction: the
// factory functions reject operand type mismatches, so downstream code can
// evaluate without re-checking. Comparisons are over integers only;
// connectives are over booleans only.
class Expr {
 public:
  ExprOp op;
  Type type;
  Value lit = 0;           // IntLit / BoolLit (0 or 1)
  std::int32_t var = -1;   // Var: index into the variable table
  ExprPtr lhs;
  ExprPtr rhs;

  static ExprPtr int_lit(Value v);
  static ExprPtr bool_lit(bool v);
  static ExprPtr var_ref(std::int32_t index, Type t);
  static ExprPtr neg(ExprPtr e);
  static ExprPtr lnot(ExprPtr e);
  static ExprPtr binary(ExprOp o, ExprPtr l, ExprPtr r);

  // Convenience builders.
  static ExprPtr add(ExprPtr l, ExprPtr r) { return binary(ExprOp::Add, l, r); }
  static ExprPtr sub(ExprPtr l, ExprPtr r) { return binary(ExprOp::Sub, l, r); }
  static ExprPtr mul(ExprPtr l, ExprPtr r) { return binary(ExprOp::Mul, l, r); }
  static ExprPtr eq(ExprPtr l, ExprPtr r) { return binary(ExprOp::Eq, l, r); }
  static ExprPtr ne(ExprPtr l, ExprPtr r) { return binary(ExprOp::Ne, l, r); }
  static ExprPtr lt(ExprPtr l, ExprPtr r) { return binary(ExprOp::Lt, l, r); }
  static ExprPtr le(ExprPtr l, ExprPtr r) { return binary(ExprOp::Le, l, r); }
  static ExprPtr land(ExprPtr l, ExprPtr r) { return binary(ExprOp::And, l, r); }
  static ExprPtr lor(ExprPtr l, ExprPtr r) { return binary(ExprOp::Or, l, r); }
  static ExprPtr imp(ExprPtr l, ExprPtr r) { return binary(ExprOp::Imp, l, r); }

 private:
  Expr() = default;
  static std::shared_ptr<Expr> make(ExprOp o, Type t);
};

// True when the trees are identical node for node.
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

// If e is a boolean literal, its value.
std::optional<bool> as_bool_const(const ExprPtr& e);

// Appends the variables of e to `order` in order of first occurrence;
// `seen` must be sized to the variable count.
void collect_vars_in_order(const ExprPtr& e, std::vector<std::int32_t>& order,
                           std::vector<char>& seen);

// Render with the usual precedence rules; var_names indexed by Expr::var.
std::string to_string(const ExprPtr& e, const std::vector<std::string>& var_names);

}  // namespace lazymdp
