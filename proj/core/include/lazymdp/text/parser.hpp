#pragma once

#include <string>

#include "lazymdp/model/mdp.hpp"

namespace lazymdp::text {

struct ParsedModel {
  SymbolicMdp mdp;
  ReachabilityQuery query;
};

// Parses a model file: variable declarations, guarded probabilistic
// commands, and one target predicate.  Throws ParseError with line and
// column on syntax or type errors; probabilities must sum to one exactly.
ParsedModel parse_model(const std::string& src);

}  // namespace lazymdp::text
