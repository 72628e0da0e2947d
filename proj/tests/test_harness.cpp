#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lazymdp/errors.hpp"
#include "lazymdp/harness/run.hpp"
#include "lazymdp/harness/stats.hpp"

using namespace lazymdp;
using harness::RunConfig;
using harness::StatsRecord;
using harness::SuiteConfig;

namespace {

std::string model_path(const std::string& name) {
  return std::string(LAZYMDP_MODELS_DIR) + "/" + name;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("lazymdp_test_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("json rendering keeps a fixed field order") {
  StatsRecord rec;
  rec.model = "m";
  rec.solver = "lazy-bvi";
  rec.domain = "expl";
  rec.heuristic = "random";
  rec.seed = 3;
  rec.threshold = 1e-6;
  rec.lower = 0.25;
  rec.upper = 0.75;
  rec.total_nodes = 10;
  rec.covered_nodes = 4;
  rec.noncovered_nodes = 6;
  rec.iterations = 7;
  rec.wall_ms = 12;

  std::string js = rec.to_json();
  const char* keys[] = {"\"model\"",         "\"solver\"",
                        "\"domain\"",        "\"heuristic\"",
                        "\"seed\"",          "\"threshold\"",
                        "\"status\"",        "\"lower\"",
                        "\"upper\"",         "\"total_nodes\"",
                        "\"covered_nodes\"", "\"noncovered_nodes\"",
                        "\"explicit_states\"", "\"iterations\"",
                        "\"wall_ms\""};
  std::size_t pos = 0;
  for (const char* k : keys) {
    std::size_t at = js.find(k, pos);
    CAPTURE(k);
    REQUIRE(at != std::string::npos);
    pos = at + 1;
  }

  nlohmann::json j = nlohmann::json::parse(js);
  CHECK(j.size() == 15);
  CHECK(j["model"] == "m");
  CHECK(j["seed"] == 3);
  CHECK(j["status"] == "ok");
  CHECK(j["lower"] == 0.25);
  CHECK(j["explicit_states"].is_null());
  CHECK(j["wall_ms"] == 12);

  rec.explicit_states = 42;
  j = nlohmann::json::parse(rec.to_json());
  CHECK(j["explicit_states"] == 42);
}

TEST_CASE("csv header and row formats") {
  CHECK(StatsRecord::csv_header() ==
        "model,domain,solver,heuristic,seed,threshold,status,lower,upper,"
        "total_nodes,covered_nodes,noncovered_nodes,explicit_states,"
        "iterations,wall_ms");

  StatsRecord rec;
  rec.model = "m";
  rec.solver = "lazy-bvi";
  rec.domain = "expl";
  rec.heuristic = "random";
  rec.seed = 3;
  rec.threshold = 0.001;
  rec.lower = 0.25;
  rec.upper = 0.75;
  rec.total_nodes = 10;
  rec.covered_nodes = 4;
  rec.noncovered_nodes = 6;
  rec.iterations = 7;
  rec.wall_ms = 12;
  CHECK(rec.to_csv_row() == "m,expl,lazy-bvi,random,3,0.001,ok,0.25,0.75,"
                            "10,4,6,,7,12");
  rec.explicit_states = 42;
  CHECK(rec.to_csv_row() == "m,expl,lazy-bvi,random,3,0.001,ok,0.25,0.75,"
                            "10,4,6,42,7,12");
}

TEST_CASE("run_check fills the record for a lazy solve") {
  RunConfig cfg;
  cfg.model_path = model_path("coin.gmc");
  cfg.solver = "lazy-bvi";
  cfg.domain = "expl";
  StatsRecord rec = harness::run_check(cfg);
  CHECK(rec.model == "coin");
  CHECK(rec.solver == "lazy-bvi");
  CHECK(rec.domain == "expl");
  CHECK(rec.status == "ok");
  CHECK(rec.lower == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(rec.upper == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(rec.total_nodes > 0);
  CHECK(rec.covered_nodes + rec.noncovered_nodes == rec.total_nodes);
  CHECK(!rec.explicit_states.has_value());
  CHECK(rec.iterations >= 1);
  CHECK(rec.wall_ms >= 0);
}

TEST_CASE("run_check on the explicit oracle reports the state count") {
  RunConfig cfg;
  cfg.model_path = model_path("coin.gmc");
  cfg.solver = "oracle";
  StatsRecord rec = harness::run_check(cfg);
  CHECK(rec.status == "ok");
  REQUIRE(rec.explicit_states.has_value());
  CHECK(*rec.explicit_states > 0);
  CHECK(rec.total_nodes == *rec.explicit_states);
  CHECK(rec.covered_nodes == 0);
  CHECK(rec.noncovered_nodes == *rec.explicit_states);
  CHECK(rec.iterations == 0);
  CHECK(rec.lower == rec.upper);
  CHECK(rec.lower == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("run_check reports budget stops instead of throwing") {
  RunConfig cfg;
  cfg.model_path = model_path("running_example_bounded.gmc");
  cfg.solver = "lazy-bvi";
  cfg.domain = "expl";
  cfg.max_nodes = 2;
  StatsRecord rec = harness::run_check(cfg);
  CHECK(rec.status == "budget-exceeded");
  CHECK(rec.total_nodes <= 2 + 8);  // a partial expansion may overshoot once

  cfg = RunConfig{};
  cfg.model_path = model_path("running_example_bounded.gmc");
  cfg.solver = "lazy-brtdp";
  cfg.max_traces = 1;
  rec = harness::run_check(cfg);
  CHECK(rec.status == "budget-exceeded");
  CHECK(rec.lower <= rec.upper);
}

TEST_CASE("run_check rejects unreadable or ill-formed input") {
  RunConfig cfg;
  cfg.model_path = model_path("no_such_model.gmc");
  CHECK_THROWS_AS(harness::run_check(cfg), std::runtime_error);

  TempDir tmp("badmodel");
  std::ofstream(tmp.path / "bad.gmc") << "var x: [0..1] init 0;\n@@@\n";
  cfg.model_path = (tmp.path / "bad.gmc").string();
  CHECK_THROWS_AS(harness::run_check(cfg), ParseError);

  cfg.model_path = model_path("coin.gmc");
  cfg.solver = "no-such-solver";
  CHECK_THROWS_AS(harness::run_check(cfg), std::runtime_error);
}

TEST_CASE("run_check can dump the finished graph") {
  TempDir tmp("dump");
  RunConfig cfg;
  cfg.model_path = model_path("coin.gmc");
  cfg.solver = "lazy-bvi";
  cfg.dump_graph_path = (tmp.path / "graph.txt").string();
  harness::run_check(cfg);
  std::ifstream in(cfg.dump_graph_path);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("pasg nodes=", 0) == 0);
}

TEST_CASE("identical configurations give identical records up to wall time") {
  for (const char* solver : {"lazy-bvi", "lazy-brtdp"}) {
    for (const char* heur : {"random", "diff-based"}) {
      RunConfig cfg;
      cfg.model_path = model_path("irrelevant_var.gmc");
      cfg.solver = solver;
      cfg.heuristic = heur;
      cfg.domain = "expl";
      cfg.seed = 7;
      StatsRecord a = harness::run_check(cfg);
      StatsRecord b = harness::run_check(cfg);
      a.wall_ms = b.wall_ms = 0;
      CAPTURE(solver);
      CAPTURE(heur);
      CHECK(a.to_json() == b.to_json());
    }
  }
}

TEST_CASE("suite renders one sorted row per model and configuration") {
  SuiteConfig cfg;
  cfg.dir = LAZYMDP_MODELS_DIR;
  std::string csv = harness::run_suite(cfg);

  std::istringstream in(csv);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 1 + 3 * 4);
  CHECK(lines[0] == StatsRecord::csv_header());

  const char* expected[][3] = {
      {"coin", "expl", "lazy-brtdp"},
      {"coin", "expl", "lazy-bvi"},
      {"coin", "pred", "lazy-brtdp"},
      {"coin", "pred", "lazy-bvi"},
      {"irrelevant_var", "expl", "lazy-brtdp"},
      {"irrelevant_var", "expl", "lazy-bvi"},
      {"irrelevant_var", "pred", "lazy-brtdp"},
      {"irrelevant_var", "pred", "lazy-bvi"},
      {"running_example_bounded", "expl", "lazy-brtdp"},
      {"running_example_bounded", "expl", "lazy-bvi"},
      {"running_example_bounded", "pred", "lazy-brtdp"},
      {"running_example_bounded", "pred", "lazy-bvi"},
  };
  for (std::size_t i = 0; i < 12; ++i) {
    auto cols = split(lines[1 + i], ',');
    REQUIRE(cols.size() == 15);
    CHECK(cols[0] == expected[i][0]);
    CHECK(cols[1] == expected[i][1]);
    CHECK(cols[2] == expected[i][2]);
    CHECK(cols[3] == "random");
    CHECK(cols[4] == "0");
    CHECK(cols[5] == "1e-06");
    CHECK(cols[6] == "ok");
    // graph accounting stays balanced and the explicit state count is known
    CHECK(std::stoll(cols[10]) + std::stoll(cols[11]) == std::stoll(cols[9]));
    CHECK(!cols[12].empty());
  }
}

TEST_CASE("suite keeps going past broken models") {
  TempDir tmp("suite");
  std::ofstream(tmp.path / "abc.gmc") << "this is not a model\n";
  std::filesystem::copy_file(model_path("coin.gmc"), tmp.path / "coin.gmc");
  std::ofstream(tmp.path / "notes.txt") << "ignored: wrong extension\n";

  SuiteConfig cfg;
  cfg.dir = tmp.path.string();
  std::string csv = harness::run_suite(cfg);

  std::istringstream in(csv);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 1 + 2 * 4);
  for (std::size_t i = 1; i <= 4; ++i) {
    auto cols = split(lines[i], ',');
    CHECK(cols[0] == "abc");
    CHECK(cols[6] == "error");
    CHECK(cols[12] == "");
  }
  for (std::size_t i = 5; i <= 8; ++i) {
    auto cols = split(lines[i], ',');
    CHECK(cols[0] == "coin");
    CHECK(cols[6] == "ok");
  }
}
