#include "lazymdp/domain/entailment.hpp"

namespace lazymdp {

bool EnumerationEntailment::entails(const ExprPtr& a, const ExprPtr& b) {
  bool holds = true;
  for_each_valuation(vars_, [&](const Valuation& v) {
    if (eval_bool(a, v) && !eval_bool(b, v)) {
      holds = false;
      return false;
    }
    return true;
  });
  return holds;
}

}  // namespace lazymdp
