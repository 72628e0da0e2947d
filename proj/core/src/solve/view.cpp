#include <cmath>
#include <string>

#include "lazymdp/errors.hpp"
#include "lazymdp/solve/view.hpp"

namespace lazymdp::solve {

void validate(const MdpView& v) {
  std::int64_t n = v.num_states();
  if ((std::int64_t)v.target.size() != n)
    throw ContractError("view: target flag count does not match state count");
  if (v.initial < 0 || v.initial >= n)
    throw ContractError("view: initial state out of range");
  for (std::int32_t s = 0; s < n; ++s) {
    if (v.target[s]) {
      bool self_loop = v.actions[s].size() == 1 &&
                       v.actions[s][0].size() == 1 &&
                       v.actions[s][0][0].first == s;
      if (!self_loop)
        throw ContractError("view: target state " + std::to_string(s) +
                            " is not absorbing");
    }
    for (const auto& dist : v.actions[s]) {
      if (dist.empty())
        throw ContractError("view: empty distribution at state " +
                            std::to_string(s));
      double sum = 0.0;
      for (const auto& [t, p] : dist) {
        if (t < 0 || t >= n)
          throw ContractError("view: successor out of range at state " +
                              std::to_string(s));
        if (p <= 0.0)
          throw ContractError("view: non-positive probability at state " +
                              std::to_string(s));
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-12)
        throw ContractError("view: probabilities at state " +
                            std::to_string(s) + " sum to " +
                            std::to_string(sum));
    }
  }
}

MdpView pasg_as_mdp(const Pasg& p) {
  MdpView v;
  std::int64_t n = p.size();
  v.initial = p.root;
  v.target.assign(n, 0);
  v.actions.resize(n);
  for (std::int32_t i = 0; i < n; ++i) {
    const PasgNode& node = p.nodes[i];
    if (node.status == NodeStatus::Waiting)
      throw ContractError("view: node " + std::to_string(i) +
                          " is still waiting");
    if (node.status == NodeStatus::Covered) {
      v.actions[i].push_back({{*p.covered_by[i], 1.0}});
      continue;
    }
    if (node.target) {
      v.target[i] = 1;
      v.actions[i].push_back({{i, 1.0}});
      continue;
    }
    for (std::int32_t ei : p.out_edges[i]) {
      const PasgEdge& edge = p.edges[ei];
      MdpView::Dist dist;
      for (const auto& br : edge.branches)
        dist.emplace_back(br.child, br.prob.to_double());
      v.actions[i].push_back(std::move(dist));
    }
  }
  validate(v);
  return v;
}

MdpView from_explicit(const oracle::ExplicitMdp& e) {
  MdpView v;
  v.initial = e.initial;
  v.target = e.target;
  v.actions = e.actions;
  validate(v);
  return v;
}

}  // namespace lazymdp::solve
