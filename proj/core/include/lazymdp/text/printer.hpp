#pragma once

#include <string>

#include "lazymdp/model/mdp.hpp"

namespace lazymdp::text {

// Canonical text form of a model; parsing the output reproduces the model
// structure exactly (probabilities appear as integers or fractions).
std::string print_model(const SymbolicMdp& mdp,
                        const ReachabilityQuery& query);

}  // namespace lazymdp::text
