#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace lazymdp::solve {

// Uniform double in [0, 1) built from the top 53 bits, so runs with equal
// seeds replay bit-identically across platforms.
inline double unit_double(std::mt19937_64& rng) {
  return (double)(rng() >> 11) * 0x1.0p-53;
}

// Index into `weights` drawn proportionally; caller guarantees a positive
// total.  The final bucket absorbs rounding slack.
inline std::size_t pick_weighted(std::mt19937_64& rng,
                                 const std::vector<double>& weights,
                                 double total) {
  double u = unit_double(rng) * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

}  // namespace lazymdp::solve
