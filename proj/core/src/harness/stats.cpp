#include <charconv>

#include "json.hpp"
#include "lazymdp/harness/stats.hpp"

namespace lazymdp::harness {

namespace {

std::string num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

std::string StatsRecord::to_json() const {
  nlohmann::ordered_json j;
  j["model"] = model;
  j["solver"] = solver;
  j["domain"] = domain;
  j["heuristic"] = heuristic;
  j["seed"] = seed;
  j["threshold"] = threshold;
  j["status"] = status;
  j["lower"] = lower;
  j["upper"] = upper;
  j["total_nodes"] = total_nodes;
  j["covered_nodes"] = covered_nodes;
  j["noncovered_nodes"] = noncovered_nodes;
  if (explicit_states)
    j["explicit_states"] = *explicit_states;
  else
    j["explicit_states"] = nullptr;
  j["iterations"] = iterations;
  j["wall_ms"] = wall_ms;
  return j.dump(2);
}

std::string StatsRecord::csv_header() {
  return "model,domain,solver,heuristic,seed,threshold,status,lower,upper,"
         "total_nodes,covered_nodes,noncovered_nodes,explicit_states,"
         "iterations,wall_ms";
}

std::string StatsRecord::to_csv_row() const {
  std::string row;
  row += model;
  row += ',';
  row += domain;
  row += ',';
  row += solver;
  row += ',';
  row += heuristic;
  row += ',';
  row += std::to_string(seed);
  row += ',';
  row += num(threshold);
  row += ',';
  row += status;
  row += ',';
  row += num(lower);
  row += ',';
  row += num(upper);
  row += ',';
  row += std::to_string(total_nodes);
  row += ',';
  row += std::to_string(covered_nodes);
  row += ',';
  row += std::to_string(noncovered_nodes);
  row += ',';
  if (explicit_states) row += std::to_string(*explicit_states);
  row += ',';
  row += std::to_string(iterations);
  row += ',';
  row += std::to_string(wall_ms);
  return row;
}

}  // namespace lazymdp::harness
