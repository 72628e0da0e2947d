#pragma once

#include "lazymdp/model/expr.hpp"

namespace lazymdp {

// Semantics-preserving rewriting: constant folding, unit/absorbing elements,
// double negation, negation pushed into comparisons, and flattening of
// and/or chains with duplicate removal. eval(simplify(e), s) == eval(e, s)
// for every valuation s.
ExprPtr simplify(const ExprPtr& e);

}  // namespace lazymdp
