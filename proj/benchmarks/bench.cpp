#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "lazymdp/domain/domain.hpp"
#include "lazymdp/domain/entailment.hpp"
#include "lazymdp/model/eval.hpp"
#include "lazymdp/oracle/explicit_mdp.hpp"
#include "lazymdp/pasg/graph.hpp"
#include "lazymdp/solve/bvi.hpp"
#include "lazymdp/solve/lazy_brtdp.hpp"
#include "lazymdp/solve/view.hpp"
#include "lazymdp/text/parser.hpp"

using namespace lazymdp;

namespace {

std::string read_model(const char* name) {
  std::ifstream in(std::string(LAZYMDP_MODELS_DIR) + "/" + name,
                   std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TargetedModel targeted(const std::string& src) {
  text::ParsedModel pm = text::parse_model(src);
  return with_target_command(pm.mdp, pm.query);
}

}  // namespace

static void BM_Parse(benchmark::State& state) {
  std::string src = read_model("running_example_bounded.gmc");
  for (auto _ : state) {
    text::ParsedModel pm = text::parse_model(src);
    benchmark::DoNotOptimize(pm);
  }
}
BENCHMARK(BM_Parse);

static void BM_Enumerate(benchmark::State& state) {
  TargetedModel tm = targeted(read_model("irrelevant_var.gmc"));
  for (auto _ : state) {
    oracle::EnumResult r = oracle::enumerate(tm);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Enumerate);

static void BM_ConstructExpl(benchmark::State& state) {
  TargetedModel tm = targeted(read_model("irrelevant_var.gmc"));
  ExplDomain dom(tm.model.vars);
  for (auto _ : state) {
    ConstructResult r = construct(tm, dom);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ConstructExpl);

static void BM_ConstructPred(benchmark::State& state) {
  TargetedModel tm = targeted(read_model("irrelevant_var.gmc"));
  PredDomain dom(tm.model.vars,
                 std::make_shared<EnumerationEntailment>(tm.model.vars));
  for (auto _ : state) {
    ConstructResult r = construct(tm, dom);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ConstructPred);

static void BM_BviSolve(benchmark::State& state) {
  TargetedModel tm = targeted(read_model("irrelevant_var.gmc"));
  solve::MdpView v = solve::from_explicit(oracle::enumerate(tm).mdp);
  for (auto _ : state) {
    solve::SolveResult r = solve::bounded_value_iteration(v, {});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_BviSolve);

static void BM_LazyBrtdp(benchmark::State& state) {
  TargetedModel tm = targeted(read_model("irrelevant_var.gmc"));
  ExplDomain dom(tm.model.vars);
  for (auto _ : state) {
    solve::LazyResult r = solve::lazy_brtdp(tm, dom, {});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_LazyBrtdp);

BENCHMARK_MAIN();
