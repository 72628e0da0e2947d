#pragma once

#include <stdexcept>
#include <string>

namespace lazymdp {

// Evaluation failed on a concrete state: arithmetic overflow or an
// assignment that leaves the declared variable range.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An abstract-domain backend failed (entailment subprocess died, gave a
// malformed or "unknown" reply, or timed out).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A checked precondition of an operation was violated by the caller.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// Model text rejected; positions are 1-based.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

}  // namespace lazymdp
