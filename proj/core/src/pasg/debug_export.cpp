#include <ostream>

#include "lazymdp/pasg/check.hpp"

namespace lazymdp {

namespace {

void write_valuation(const Valuation& v, const SymbolicMdp& m, std::ostream& out) {
  out << "(";
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    if (i) out << " ";
    out << m.vars[i].name << "=" << v.values[i];
  }
  out << ")";
}

}  // namespace

void write_debug_graph(const Pasg& p, const TargetedModel& tm,
                       const StateDomain& dom, std::ostream& out) {
  const SymbolicMdp& m = tm.model;
  out << "pasg nodes=" << p.nodes.size() << " edges=" << p.edges.size()
      << " root=" << p.root << "\n";
  for (NodeId n = 0; n < (NodeId)p.nodes.size(); ++n) {
    const PasgNode& node = p.nodes[n];
    out << "node " << n << " ";
    switch (node.status) {
      case NodeStatus::Waiting: out << "waiting"; break;
      case NodeStatus::Expanded: out << "expanded"; break;
      case NodeStatus::Covered: out << "covered-by=" << *p.covered_by[n]; break;
    }
    if (node.target) out << " target";
    out << " concrete=";
    write_valuation(node.concrete, m, out);
    out << " label=" << dom.describe(node.label);
    if (node.parent) {
      out << " parent-edge=" << node.parent->edge << ":" << node.parent->branch;
    }
    out << "\n";
  }
  for (std::size_t ei = 0; ei < p.edges.size(); ++ei) {
    const PasgEdge& e = p.edges[ei];
    out << "edge " << ei << " source=" << e.source << " command=" << e.command;
    for (const EdgeBranch& br : e.branches) {
      out << " " << br.prob.str() << "->" << br.child;
    }
    out << "\n";
  }
}

}  // namespace lazymdp
