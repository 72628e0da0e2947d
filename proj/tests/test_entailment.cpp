#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lazymdp/domain/entailment.hpp"
#include "support/testsupport.hpp"

using namespace lazymdp;

TEST_CASE("enumeration entailment decides implications over the ranges") {
  std::vector<VarDecl> vars{{"x", Type::Int, 0, 3, 0},
                            {"b", Type::Bool, 0, 1, 0}};
  EnumerationEntailment ent(vars);
  ExprPtr x = Expr::var_ref(0, Type::Int);
  ExprPtr b = Expr::var_ref(1, Type::Bool);
  CHECK(ent.entails(Expr::lt(x, Expr::int_lit(2)), Expr::lt(x, Expr::int_lit(3))));
  CHECK(!ent.entails(Expr::lt(x, Expr::int_lit(3)), Expr::lt(x, Expr::int_lit(2))));
  // Range-dependent: x <= 3 is a tautology over [0..3].
  CHECK(ent.entails(Expr::bool_lit(true), Expr::le(x, Expr::int_lit(3))));
  CHECK(ent.entails(Expr::bool_lit(false), b));
  CHECK(ent.entails(b, b));
}

TEST_CASE("smtlib rendering of expressions") {
  std::vector<VarDecl> vars{{"x", Type::Int, -2, 3, 0},
                            {"b", Type::Bool, 0, 1, 0}};
  ExprPtr x = Expr::var_ref(0, Type::Int);
  ExprPtr b = Expr::var_ref(1, Type::Bool);
  CHECK(to_smtlib(Expr::add(x, Expr::int_lit(1)), vars) == "(+ x 1)");
  CHECK(to_smtlib(Expr::int_lit(-4), vars) == "(- 4)");
  CHECK(to_smtlib(Expr::neg(x), vars) == "(- x)");
  CHECK(to_smtlib(Expr::ne(x, Expr::int_lit(2)), vars) == "(not (= x 2))");
  CHECK(to_smtlib(Expr::imp(b, Expr::lnot(b)), vars) == "(=> b (not b))");
  CHECK(to_smtlib(Expr::land(b, Expr::lt(x, Expr::int_lit(0))), vars) ==
        "(and b (< x 0))");
}

TEST_CASE("query wire format: declarations, ranges, both asserts") {
  std::vector<VarDecl> vars{{"x", Type::Int, -2, 3, 0},
                            {"b", Type::Bool, 0, 1, 0}};
  SmtProcessEntailment ent(vars, "cat >/dev/null");
  ExprPtr a = Expr::lt(Expr::var_ref(0, Type::Int), Expr::int_lit(1));
  ExprPtr c = Expr::var_ref(1, Type::Bool);
  CHECK(ent.render_query(a, c) ==
        "(declare-const x Int)\n"
        "(assert (and (>= x (- 2)) (<= x 3)))\n"
        "(declare-const b Bool)\n"
        "(assert (< x 1))\n"
        "(assert (not b))\n"
        "(check-sat)\n");
}

TEST_CASE("process entailment answers through the stand-in solver") {
  std::vector<VarDecl> vars{{"x", Type::Int, 0, 3, 0}};
  SmtProcessEntailment ent(vars, LAZYMDP_FAKE_SMT);
  ExprPtr x = Expr::var_ref(0, Type::Int);
  CHECK(ent.entails(Expr::lt(x, Expr::int_lit(2)), Expr::lt(x, Expr::int_lit(3))));
  CHECK(!ent.entails(Expr::lt(x, Expr::int_lit(3)), Expr::lt(x, Expr::int_lit(2))));
  // The declared range itself is available to the solver.
  CHECK(ent.entails(Expr::bool_lit(true), Expr::le(x, Expr::int_lit(3))));
}

TEST_CASE("process entailment raises on malformed replies") {
  std::vector<VarDecl> vars{{"x", Type::Int, 0, 3, 0}};
  ExprPtr x = Expr::var_ref(0, Type::Int);
  ExprPtr taut = Expr::le(x, Expr::int_lit(3));
  // Whether the failure hits the preamble write, the query write, or the
  // reply read depends on child timing; all of them must be DomainError.
  CHECK_THROWS_AS(
      [&] {
        SmtProcessEntailment bad(vars, "sed -u 's/.*/maybe/;q'");
        bad.entails(taut, taut);
      }(),
      DomainError);
  CHECK_THROWS_AS(
      [&] {
        // Child exits after the preamble: the read sees a closed stream.
        SmtProcessEntailment dead(vars, "head -n 1 >/dev/null");
        dead.entails(taut, taut);
      }(),
      DomainError);
  CHECK_THROWS_AS(
      [&] {
        // Child never answers: the poll times out.
        SmtProcessEntailment slow(vars, "sleep 60", 200);
        slow.entails(taut, taut);
      }(),
      DomainError);
}

TEST_CASE("differential: process solver matches enumeration on random queries") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto pm = testsupport::random_instance(seed);
    const auto& vars = pm.mdp.vars;
    EnumerationEntailment ref(vars);
    SmtProcessEntailment smt(vars, LAZYMDP_FAKE_SMT);
    std::mt19937_64 rng(seed * 999 + 1);
    for (int rep = 0; rep < 25; ++rep) {
      ExprPtr a = testsupport::random_predicate(rng, vars);
      ExprPtr b = testsupport::random_predicate(rng, vars);
      CAPTURE(seed);
      CAPTURE(rep);
      CHECK(smt.entails(a, b) == ref.entails(a, b));
    }
  }
}
