#pragma once

#include <cstdint>
#include <string>

#include "lazymdp/harness/stats.hpp"

namespace lazymdp::harness {

struct RunConfig {
  std::string model_path;
  std::string solver = "lazy-bvi";     // oracle|bvi|brtdp|lazy-bvi|lazy-brtdp
  std::string heuristic = "random";    // random|diff-based
  std::string domain = "expl";         // expl|pred
  std::string waitlist = "lifo";       // lifo|fifo
  double threshold = 1e-6;
  std::uint64_t seed = 0;
  std::int64_t max_nodes = 5'000'000;  // graph nodes or enumerated states
  std::int64_t max_traces = 1'000'000;
  std::string smt_cmd;          // empty: entailment by range enumeration
  std::string dump_graph_path;  // empty: no graph dump
};

// Parses the model, dispatches to the configured solver, and reports one
// record.  Throws ParseError for unreadable or ill-formed models; budget
// stops come back as a record with status "budget-exceeded".
StatsRecord run_check(const RunConfig& cfg);

struct SuiteConfig {
  std::string dir;
  std::string heuristic = "random";
  double threshold = 1e-6;
  std::uint64_t seed = 0;
  std::string waitlist = "lifo";
  std::int64_t max_nodes = 5'000'000;
  std::int64_t max_traces = 1'000'000;
  std::string smt_cmd;
};

// Runs the lazy solvers under both abstract domains on every *.gmc file in
// the directory and renders the records as CSV, sorted by model name and
// configuration.  Per-model failures become rows with status "error".
std::string run_suite(const SuiteConfig& cfg);

}  // namespace lazymdp::harness
