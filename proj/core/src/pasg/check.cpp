#include <sstream>

#include "lazymdp/pasg/check.hpp"

namespace lazymdp {

const char* constraint_name(Constraint c) {
  switch (c) {
    case Constraint::A1: return "A1";
    case Constraint::A2: return "A2";
    case Constraint::B1: return "B1";
    case Constraint::B2: return "B2";
    case Constraint::C1: return "C1";
    case Constraint::C2: return "C2";
    case Constraint::C3: return "C3";
    case Constraint::D1: return "D1";
  }
  return "?";
}

namespace {

// Exact three-valued truth of b over the concretizations of the label.
// Enumerates the full valuation space and filters by containment; labels at
// desk scale keep this cheap. An empty concretization yields False.
TriBool exact_eval(const ExprPtr& b, const AbstractState& label,
                   const StateDomain& dom, const std::vector<VarDecl>& vars) {
  bool seen_true = false, seen_false = false, seen_any = false;
  for_each_valuation(vars, [&](const Valuation& v) {
    if (!dom.contains(label, v)) return true;
    seen_any = true;
    if (eval_bool(b, v)) {
      seen_true = true;
    } else {
      seen_false = true;
    }
    return !(seen_true && seen_false);
  });
  if (!seen_any) return TriBool::False;
  if (seen_true && seen_false) return TriBool::Unknown;
  return seen_true ? TriBool::True : TriBool::False;
}

const char* tri_name(TriBool t) {
  switch (t) {
    case TriBool::True: return "True";
    case TriBool::False: return "False";
    case TriBool::Unknown: return "Unknown";
  }
  return "?";
}

}  // namespace

std::vector<Violation> check_well_labeled(const Pasg& p, const TargetedModel& tm,
                                          const StateDomain& dom, GuardCheck mode) {
  std::vector<Violation> out;
  const SymbolicMdp& m = tm.model;

  auto add = [&](Constraint c, NodeId n, std::int32_t e, std::string detail) {
    out.push_back({c, n, e, std::move(detail)});
  };

  for (NodeId n = 0; n < (NodeId)p.nodes.size(); ++n) {
    const PasgNode& node = p.nodes[n];

    // A1: the concrete label always lies inside the abstract label.
    bool a1 = dom.contains(node.label, node.concrete);
    if (!a1) add(Constraint::A1, n, -1, "concrete state not in abstract label");

    // A2: every guard is decided identically across the label. Waiting
    // nodes still carry top and are exempt; nodes failing A1 are skipped to
    // avoid cascading noise.
    if (node.status != NodeStatus::Waiting && a1) {
      for (std::size_t ci = 0; ci < m.commands.size(); ++ci) {
        const ExprPtr& g = m.commands[ci].guard;
        TriBool concrete = tri_of(eval_bool(g, node.concrete));
        TriBool abstract_val = mode == GuardCheck::DomainEval
                                   ? dom.eval_pred(g, node.label)
                                   : exact_eval(g, node.label, dom, m.vars);
        if (abstract_val != concrete) {
          std::ostringstream d;
          d << "guard of command " << ci << " is " << tri_name(abstract_val)
            << " on the label but " << tri_name(concrete) << " at the concrete state";
          add(Constraint::A2, n, -1, d.str());
        }
      }
    }
  }

  for (std::int32_t ei = 0; ei < (std::int32_t)p.edges.size(); ++ei) {
    const PasgEdge& e = p.edges[ei];
    const Command& cmd = m.commands[e.command];
    const PasgNode& src = p.nodes[e.source];

    // B1: the command is enabled at the source's concrete state.
    if (!eval_bool(cmd.guard, src.concrete)) {
      add(Constraint::B1, e.source, ei, "edge command disabled at source state");
    }

    // B2, distribution part: one child per command branch with its probability.
    if (e.branches.size() != cmd.branches.size()) {
      add(Constraint::B2, e.source, ei, "edge branch count differs from command");
    } else {
      for (std::size_t bi = 0; bi < e.branches.size(); ++bi) {
        if (e.branches[bi].branch_index != (std::int32_t)bi ||
            e.branches[bi].prob != cmd.branches[bi].prob) {
          add(Constraint::B2, e.source, ei,
              "edge branch " + std::to_string(bi) + " does not match the command");
        }
      }
    }

    for (const EdgeBranch& br : e.branches) {
      if (br.branch_index < 0 || br.branch_index >= (std::int32_t)cmd.branches.size())
        continue;
      const Assignment& a = cmd.branches[br.branch_index].assign;
      const PasgNode& child = p.nodes[br.child];

      // B2, concrete part: the child was reached by this assignment.
      Valuation expect;
      bool eval_ok = true;
      try {
        expect = apply(a, src.concrete, m);
      } catch (const EvalError&) {
        eval_ok = false;
        add(Constraint::B2, e.source, ei, "assignment fails at the source state");
      }
      if (eval_ok && !(expect == child.concrete)) {
        add(Constraint::B2, br.child, ei, "child concrete state is not the successor");
      }

      // B2, abstract part: the label's image under the assignment stays
      // inside the child's label (checked by enumeration).
      bool image_ok = true;
      std::string image_detail;
      for_each_valuation(m.vars, [&](const Valuation& v) {
        if (!dom.contains(src.label, v)) return true;
        try {
          Valuation succ = apply(a, v, m);
          if (!dom.contains(child.label, succ)) {
            image_ok = false;
            image_detail = "label image escapes the child label";
            return false;
          }
        } catch (const EvalError&) {
          image_ok = false;
          image_detail = "label image leaves the declared ranges";
          return false;
        }
        return true;
      });
      if (!image_ok) add(Constraint::B2, br.child, ei, image_detail);
    }
  }

  for (NodeId n = 0; n < (NodeId)p.nodes.size(); ++n) {
    if (!p.covered_by[n]) continue;
    NodeId cov = *p.covered_by[n];

    // C1: the covered node's concrete state lies in the coverer's label.
    if (!dom.contains(p.nodes[cov].label, p.nodes[n].concrete)) {
      add(Constraint::C1, n, -1, "concrete state not in coverer label");
    }
    // C2: the covered node's label lies below the coverer's.
    if (!dom.leq(p.nodes[n].label, p.nodes[cov].label)) {
      add(Constraint::C2, n, -1, "label not below coverer label");
    }
    // C3: the coverer is itself uncovered.
    if (p.covered_by[cov]) {
      add(Constraint::C3, n, -1, "coverer is itself covered");
    }
  }

  // D1: among settled nodes, at most one uncovered node per concrete label.
  {
    std::unordered_map<Valuation, NodeId, ValuationHash> seen;
    for (NodeId n = 0; n < (NodeId)p.nodes.size(); ++n) {
      const PasgNode& node = p.nodes[n];
      if (node.status != NodeStatus::Expanded) continue;
      auto [it, fresh] = seen.try_emplace(node.concrete, n);
      if (!fresh) {
        add(Constraint::D1, n, -1,
            "uncovered duplicate of node " + std::to_string(it->second));
      }
    }
  }

  return out;
}

}  // namespace lazymdp
