#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lazymdp/errors.hpp"
#include "lazymdp/harness/run.hpp"

namespace {

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal reachability probabilities for guarded-command MDPs"};
  app.require_subcommand(1);

  lazymdp::harness::RunConfig cfg;
  std::string stats_out;

  CLI::App* check =
      app.add_subcommand("check", "Solve one model and emit a JSON record");
  check->add_option("--model", cfg.model_path, "Model file (.gmc)")
      ->required();
  check->add_option("--solver", cfg.solver, "Solving method")
      ->check(CLI::IsMember(
          {"oracle", "bvi", "brtdp", "lazy-bvi", "lazy-brtdp"}));
  check->add_option("--domain", cfg.domain, "Abstract domain")
      ->check(CLI::IsMember({"expl", "pred"}));
  check->add_option("--heuristic", cfg.heuristic, "Successor choice")
      ->check(CLI::IsMember({"random", "diff-based"}));
  check->add_option("--threshold", cfg.threshold, "Bound gap to reach");
  check->add_option("--seed", cfg.seed, "Simulation seed");
  check->add_option("--waitlist", cfg.waitlist, "Construction order")
      ->check(CLI::IsMember({"lifo", "fifo"}));
  check->add_option("--max-nodes", cfg.max_nodes,
                    "Graph node / explicit state budget");
  check->add_option("--max-traces", cfg.max_traces, "Simulation trace budget");
  check->add_option("--smt-cmd", cfg.smt_cmd,
                    "External SMT-LIB solver command for entailment");
  check->add_option("--stats-out", stats_out, "Record file (default stdout)");
  check->add_option("--dump-graph", cfg.dump_graph_path,
                    "Write the abstraction graph as text");

  lazymdp::harness::SuiteConfig suite_cfg;
  CLI::App* suite = app.add_subcommand(
      "suite", "Run the lazy solver grid over a model directory as CSV");
  suite->add_option("dir", suite_cfg.dir, "Directory of .gmc files")
      ->required();
  suite->add_option("--heuristic", suite_cfg.heuristic, "Successor choice")
      ->check(CLI::IsMember({"random", "diff-based"}));
  suite->add_option("--threshold", suite_cfg.threshold, "Bound gap to reach");
  suite->add_option("--seed", suite_cfg.seed, "Simulation seed");
  suite->add_option("--waitlist", suite_cfg.waitlist, "Construction order")
      ->check(CLI::IsMember({"lifo", "fifo"}));
  suite->add_option("--max-nodes", suite_cfg.max_nodes,
                    "Graph node / explicit state budget");
  suite->add_option("--max-traces", suite_cfg.max_traces,
                    "Simulation trace budget");
  suite->add_option("--smt-cmd", suite_cfg.smt_cmd,
                    "External SMT-LIB solver command for entailment");
  suite->add_option("--stats-out", stats_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) {
      lazymdp::harness::StatsRecord rec = lazymdp::harness::run_check(cfg);
      write_output(stats_out, rec.to_json());
      std::cerr << rec.model << ": [" << rec.lower << ", " << rec.upper
                << "] solver=" << rec.solver << " domain=" << rec.domain
                << " nodes=" << rec.total_nodes << " (" << rec.covered_nodes
                << " covered) iterations=" << rec.iterations
                << " wall_ms=" << rec.wall_ms << " status=" << rec.status
                << "\n";
      return rec.status == "ok" ? 0 : 2;
    }
    std::string csv = lazymdp::harness::run_suite(suite_cfg);
    // The CSV already ends with a newline per row.
    if (!stats_out.empty()) {
      std::ofstream out(stats_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write '" + stats_out + "'");
      out << csv;
    } else {
      std::cout << csv;
    }
    return 0;
  } catch (const lazymdp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  (void)suite;
}
