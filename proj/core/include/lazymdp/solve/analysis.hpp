#pragma once

#include <cstdint>
#include <vector>

#include "lazymdp/solve/view.hpp"

namespace lazymdp::solve {

// States from which no strategy reaches a target with positive probability.
std::vector<char> prob0(const MdpView& v);

// States from which some strategy reaches a target with probability one.
std::vector<char> prob1max(const MdpView& v);

// Maximal end component: a largest set of states closed under some
// non-empty choice of actions and strongly connected through them.
struct Mec {
  std::vector<std::int32_t> states;  // ascending
};

std::vector<Mec> mec_decomposition(const MdpView& v);

}  // namespace lazymdp::solve
