#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "lazymdp/domain/entailment.hpp"
#include "lazymdp/errors.hpp"
#include "lazymdp/harness/run.hpp"
#include "lazymdp/oracle/explicit_mdp.hpp"
#include "lazymdp/pasg/check.hpp"
#include "lazymdp/solve/bvi.hpp"
#include "lazymdp/solve/brtdp.hpp"
#include "lazymdp/solve/lazy_brtdp.hpp"
#include "lazymdp/solve/view.hpp"
#include "lazymdp/text/parser.hpp"

namespace lazymdp::harness {

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::unique_ptr<StateDomain> make_domain(const std::string& name,
                                                 const std::string& smt_cmd,
                                                 const SymbolicMdp& m) {
  if (name == "expl") return std::make_unique<ExplDomain>(m.vars);
  std::shared_ptr<Entailment> ent;
  if (smt_cmd.empty())
    ent = std::make_shared<EnumerationEntailment>(m.vars);
  else
    ent = std::make_shared<SmtProcessEntailment>(m.vars, smt_cmd);
  return std::make_unique<PredDomain>(m.vars, std::move(ent));
}

solve::TraceHeuristic heuristic_of(const std::string& name) {
  return name == "diff-based" ? solve::TraceHeuristic::DiffBased
                              : solve::TraceHeuristic::Random;
}

WaitlistPolicy waitlist_of(const std::string& name) {
  return name == "fifo" ? WaitlistPolicy::Fifo
                        : WaitlistPolicy::Lifo;
}

void fill_graph_stats(StatsRecord& rec, const Pasg& p) {
  rec.total_nodes = p.size();
  rec.covered_nodes = p.covered_count();
  rec.noncovered_nodes = rec.total_nodes - rec.covered_nodes;
}

void fill_explicit_stats(StatsRecord& rec, std::int64_t states) {
  rec.total_nodes = states;
  rec.covered_nodes = 0;
  rec.noncovered_nodes = states;
  rec.explicit_states = states;
}

void maybe_dump(const RunConfig& cfg, const Pasg& p, const TargetedModel& tm,
                const StateDomain& dom) {
  if (cfg.dump_graph_path.empty()) return;
  std::ofstream out(cfg.dump_graph_path, std::ios::binary);
  if (!out)
    throw std::runtime_error(
                     "cannot write graph dump '" + cfg.dump_graph_path + "'");
  write_debug_graph(p, tm, dom, out);
}

StatsRecord run_on_model(const RunConfig& cfg, const text::ParsedModel& pm,
                         const std::string& model_name) {
  StatsRecord rec;
  rec.model = model_name;
  rec.solver = cfg.solver;
  rec.domain = cfg.domain;
  rec.heuristic = cfg.heuristic;
  rec.seed = cfg.seed;
  rec.threshold = cfg.threshold;

  TargetedModel tm = with_target_command(pm.mdp, pm.query);
  auto t0 = Clock::now();

  if (cfg.solver == "oracle" || cfg.solver == "bvi" || cfg.solver == "brtdp") {
    oracle::EnumResult en = oracle::enumerate(tm, cfg.max_nodes);
    fill_explicit_stats(rec, en.mdp.num_states());
    if (en.status == oracle::EnumStatus::StateBudget) {
      rec.status = "budget-exceeded";
    } else if (cfg.solver == "oracle") {
      double v = oracle::value_iteration_oracle(en.mdp, cfg.threshold);
      rec.lower = rec.upper = v;
    } else if (cfg.solver == "bvi") {
      solve::MdpView view = solve::from_explicit(en.mdp);
      solve::BviOptions opt;
      opt.eps = cfg.threshold;
      solve::SolveResult r = solve::bounded_value_iteration(view, opt);
      rec.lower = r.bounds.lower;
      rec.upper = r.bounds.upper;
      rec.iterations = r.iterations;
      if (r.status != solve::SolveStatus::Ok) rec.status = "budget-exceeded";
    } else {
      solve::MdpView view = solve::from_explicit(en.mdp);
      solve::BrtdpOptions opt;
      opt.eps = cfg.threshold;
      opt.seed = cfg.seed;
      opt.heuristic = heuristic_of(cfg.heuristic);
      opt.max_traces = cfg.max_traces;
      solve::SolveResult r = solve::brtdp(view, opt);
      rec.lower = r.bounds.lower;
      rec.upper = r.bounds.upper;
      rec.iterations = r.iterations;
      if (r.status != solve::SolveStatus::Ok) rec.status = "budget-exceeded";
    }
  } else if (cfg.solver == "lazy-bvi") {
    auto dom = make_domain(cfg.domain, cfg.smt_cmd, pm.mdp);
    BuildOptions bopt;
    bopt.policy = waitlist_of(cfg.waitlist);
    bopt.max_nodes = cfg.max_nodes;
    ConstructResult cr = construct(tm, *dom, bopt);
    fill_graph_stats(rec, cr.graph);
    maybe_dump(cfg, cr.graph, tm, *dom);
    if (cr.status == BuildStatus::NodeBudget) {
      rec.status = "budget-exceeded";
    } else {
      solve::MdpView view = solve::pasg_as_mdp(cr.graph);
      solve::BviOptions opt;
      opt.eps = cfg.threshold;
      solve::SolveResult r = solve::bounded_value_iteration(view, opt);
      rec.lower = r.bounds.lower;
      rec.upper = r.bounds.upper;
      rec.iterations = r.iterations;
      if (r.status != solve::SolveStatus::Ok) rec.status = "budget-exceeded";
    }
  } else if (cfg.solver == "lazy-brtdp") {
    auto dom = make_domain(cfg.domain, cfg.smt_cmd, pm.mdp);
    solve::LazyOptions opt;
    opt.eps = cfg.threshold;
    opt.seed = cfg.seed;
    opt.heuristic = heuristic_of(cfg.heuristic);
    opt.max_traces = cfg.max_traces;
    opt.max_nodes = cfg.max_nodes;
    solve::LazyResult r = solve::lazy_brtdp(tm, *dom, opt);
    fill_graph_stats(rec, r.graph);
    maybe_dump(cfg, r.graph, tm, *dom);
    rec.lower = r.solve.bounds.lower;
    rec.upper = r.solve.bounds.upper;
    rec.iterations = r.solve.iterations;
    if (r.solve.status != solve::SolveStatus::Ok)
      rec.status = "budget-exceeded";
  } else {
    throw std::runtime_error("unknown solver '" + cfg.solver + "'");
  }

  auto t1 = Clock::now();
  rec.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rec;
}

}  // namespace

StatsRecord run_check(const RunConfig& cfg) {
  std::string text = read_file(cfg.model_path);
  text::ParsedModel pm = text::parse_model(text);
  std::string name = std::filesystem::path(cfg.model_path).stem().string();
  return run_on_model(cfg, pm, name);
}

std::string run_suite(const SuiteConfig& cfg) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(cfg.dir)) {
    if (entry.path().extension() == ".gmc")
      files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());

  const std::string solvers[] = {"lazy-bvi", "lazy-brtdp"};
  const std::string domains[] = {"expl", "pred"};
  std::vector<StatsRecord> rows;
  for (const std::string& path : files) {
    std::string name = std::filesystem::path(path).stem().string();
    std::optional<text::ParsedModel> pm;
    std::optional<std::int64_t> explicit_states;
    try {
      pm = text::parse_model(read_file(path));
      TargetedModel tm = with_target_command(pm->mdp, pm->query);
      oracle::EnumResult en = oracle::enumerate(tm, cfg.max_nodes);
      if (en.status == oracle::EnumStatus::Complete)
        explicit_states = en.mdp.num_states();
    } catch (const std::exception&) {
      pm.reset();
    }
    for (const std::string& solver : solvers) {
      for (const std::string& dom : domains) {
        RunConfig rc;
        rc.model_path = path;
        rc.solver = solver;
        rc.domain = dom;
        rc.heuristic = cfg.heuristic;
        rc.threshold = cfg.threshold;
        rc.seed = cfg.seed;
        rc.waitlist = cfg.waitlist;
        rc.max_nodes = cfg.max_nodes;
        rc.max_traces = cfg.max_traces;
        rc.smt_cmd = cfg.smt_cmd;
        StatsRecord rec;
        if (!pm) {
          rec.model = name;
          rec.solver = solver;
          rec.domain = dom;
          rec.heuristic = cfg.heuristic;
          rec.seed = cfg.seed;
          rec.threshold = cfg.threshold;
          rec.status = "error";
        } else {
          try {
            rec = run_on_model(rc, *pm, name);
          } catch (const std::exception&) {
            rec = StatsRecord{};
            rec.model = name;
            rec.solver = solver;
            rec.domain = dom;
            rec.heuristic = cfg.heuristic;
            rec.seed = cfg.seed;
            rec.threshold = cfg.threshold;
            rec.status = "error";
          }
        }
        rec.explicit_states = explicit_states;
        rows.push_back(std::move(rec));
      }
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const StatsRecord& a, const StatsRecord& b) {
              auto key = [](const StatsRecord& r) {
                return std::tie(r.model, r.domain, r.solver, r.heuristic,
                                r.seed);
              };
              return key(a) < key(b);
            });
  std::string out = StatsRecord::csv_header();
  out += '\n';
  for (const StatsRecord& r : rows) {
    out += r.to_csv_row();
    out += '\n';
  }
  return out;
}

}  // namespace lazymdp::harness
