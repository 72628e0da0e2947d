#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lazymdp/oracle/explicit_mdp.hpp"
#include "lazymdp/pasg/graph.hpp"

namespace lazymdp::solve {

// Plain explicit MDP the solvers operate on.  Invariants:
//  - every distribution's probabilities are positive and sum to 1 within
//    1e-12,
//  - target states carry exactly one action, a self-loop (they absorb),
//  - states without any action are treated as absorbing non-targets.
struct MdpView {
  using Dist = std::vector<std::pair<std::int32_t, double>>;

  std::int32_t initial = 0;
  std::vector<char> target;
  std::vector<std::vector<Dist>> actions;

  std::int64_t num_states() const { return (std::int64_t)actions.size(); }
};

// Throws ContractError when an invariant above is broken.
void validate(const MdpView& v);

// View of a fully processed abstraction graph: node ids become state ids,
// covered nodes get a single sure transition to their coverer, target nodes
// self-loop.  Throws ContractError if any node still waits.
MdpView pasg_as_mdp(const Pasg& p);

MdpView from_explicit(const oracle::ExplicitMdp& e);

}  // namespace lazymdp::solve
