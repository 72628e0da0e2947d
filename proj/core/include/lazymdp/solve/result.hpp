#pragma once

#include <cstdint>
#include <string>

namespace lazymdp::solve {

// Certified bracket around the maximal reachability probability.
struct Bounds {
  double lower = 0.0;
  double upper = 1.0;

  double width() const { return upper - lower; }
  double midpoint() const { return (lower + upper) / 2.0; }
};

enum class SolveStatus {
  Ok,               // bracket narrowed below the requested threshold
  IterationBudget,  // value iteration sweep cap hit
  TraceBudget,      // simulation trace cap hit
  NodeBudget,       // graph node cap hit during lazy construction
};

inline std::string solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Ok: return "ok";
    case SolveStatus::IterationBudget: return "iteration-budget";
    case SolveStatus::TraceBudget: return "trace-budget";
    case SolveStatus::NodeBudget: return "node-budget";
  }
  return "unknown";
}

struct SolveResult {
  Bounds bounds;
  SolveStatus status = SolveStatus::Ok;
  std::int64_t iterations = 0;  // sweeps or traces, depending on the solver
};

// How simulation picks the successor inside a sampled distribution.
enum class TraceHeuristic {
  Random,     // by transition probability
  DiffBased,  // by probability times current bound gap
};

}  // namespace lazymdp::solve
