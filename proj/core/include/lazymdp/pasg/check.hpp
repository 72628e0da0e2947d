#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lazymdp/pasg/graph.hpp"

namespace lazymdp {

// The structural constraints a sound graph satisfies. Letters group them:
// A: node labeling, B: transition edges, C: cover edges, D: uniqueness.
enum class Constraint : std::uint8_t { A1, A2, B1, B2, C1, C2, C3, D1 };

const char* constraint_name(Constraint c);

struct Violation {
  Constraint constraint;
  NodeId node = -1;
  std::int32_t edge = -1;
  std::string detail;
};

// How A2 (guard decidedness across the abstract label) is evaluated:
// with the domain's own conservative three-valued evaluation, or exactly
// by enumerating the label's concretizations.
enum class GuardCheck : std::uint8_t { DomainEval, ExactEnumeration };

// Evaluates every constraint and returns all violations found. Waiting
// nodes are exempt from A2 and D1: their labels are still top and their
// duplicates are resolved when they are processed, so only covered and
// expanded nodes carry those obligations. A finished graph has no waiting
// nodes, and the check is then the literal conjunction of all eight rules.
std::vector<Violation> check_well_labeled(const Pasg& p, const TargetedModel& tm,
                                          const StateDomain& dom,
                                          GuardCheck mode = GuardCheck::ExactEnumeration);

// Verifies that every concrete command/branch trace of up to max_len steps
// embeds into the graph: starting from the root, covers are followed to the
// covering node, the matching outgoing edge is taken, and each concrete
// state must lie in the abstract label of the node reached. Returns false
// and fills `detail` (if given) on the first failing trace.
bool trace_correspondence(const Pasg& p, const TargetedModel& tm,
                          const StateDomain& dom, int max_len,
                          std::string* detail = nullptr);

// Human-oriented dump of nodes, labels and edges (one record per line).
void write_debug_graph(const Pasg& p, const TargetedModel& tm,
                       const StateDomain& dom, std::ostream& out);

}  // namespace lazymdp
