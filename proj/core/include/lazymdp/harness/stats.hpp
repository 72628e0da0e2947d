#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace lazymdp::harness {

// One solver run, in the shape both output formats share.  Invariant:
// covered_nodes + noncovered_nodes = total_nodes.  For explicit-state
// solvers the enumerated states count as non-covered nodes.
struct StatsRecord {
  std::string model;
  std::string solver;
  std::string domain;
  std::string heuristic;
  std::uint64_t seed = 0;
  double threshold = 1e-6;
  std::string status = "ok";  // ok | budget-exceeded | error
  double lower = 0.0;
  double upper = 1.0;
  std::int64_t total_nodes = 0;
  std::int64_t covered_nodes = 0;
  std::int64_t noncovered_nodes = 0;
  std::optional<std::int64_t> explicit_states;  // absent when not computed
  std::int64_t iterations = 0;
  std::int64_t wall_ms = 0;

  // Single JSON object with fixed field order; explicit_states is null
  // when absent.
  std::string to_json() const;

  static std::string csv_header();
  // Comma-separated row matching csv_header(); absent explicit_states is
  // an empty cell.
  std::string to_csv_row() const;
};

}  // namespace lazymdp::harness
