#pragma once

#include <cstdio>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lazymdp/model/eval.hpp"
#include "lazymdp/model/mdp.hpp"

namespace lazymdp {

// Decides whether a implies b over all valuations of the declared ranges.
class Entailment {
 public:
  virtual ~Entailment() = default;
  virtual bool entails(const ExprPtr& a, const ExprPtr& b) = 0;
};

// Exhaustive check over the (finite) valuation space.
class EnumerationEntailment final : public Entailment {
 public:
  explicit EnumerationEntailment(std::vector<VarDecl> vars) : vars_(std::move(vars)) {}
  bool entails(const ExprPtr& a, const ExprPtr& b) override;

 private:
  std::vector<VarDecl> vars_;
};

// Queries an external SMT-LIB v2 solver process (QF_LIA). The command is
// started once through /bin/sh; each query is wrapped in push/pop and asserts
// the declared ranges, a, and (not b); unsat means a entails b. Replies other
// than sat/unsat, I/O failures, and timeouts raise DomainError. Access to the
// child is serialized.
class SmtProcessEntailment final : public Entailment {
 public:
  SmtProcessEntailment(std::vector<VarDecl> vars, const std::string& command,
                       int timeout_ms = 60000);
  ~SmtProcessEntailment() override;

  SmtProcessEntailment(const SmtProcessEntailment&) = delete;
  SmtProcessEntailment& operator=(const SmtProcessEntailment&) = delete;

  bool entails(const ExprPtr& a, const ExprPtr& b) override;

  // The exact text block sent for one query (without push/pop), exposed so
  // the wire format can be tested without a solver.
  std::string render_query(const ExprPtr& a, const ExprPtr& b) const;

 private:
  void start(const std::string& command);
  std::string read_reply_line();

  std::vector<VarDecl> vars_;
  int timeout_ms_;
  std::mutex mu_;
  int child_pid_ = -1;
  FILE* to_child_ = nullptr;
  FILE* from_child_ = nullptr;
};

// SMT-LIB rendering of an expression (integers; booleans as Bool terms).
std::string to_smtlib(const ExprPtr& e, const std::vector<VarDecl>& vars);

}  // namespace lazymdp
