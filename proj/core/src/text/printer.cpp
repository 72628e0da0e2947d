#include <sstream>

#include "lazymdp/text/printer.hpp"

namespace lazymdp::text {

std::string print_model(const SymbolicMdp& mdp,
                        const ReachabilityQuery& query) {
  std::vector<std::string> names = mdp.var_names();
  std::ostringstream out;
  for (const auto& d : mdp.vars) {
    out << "var " << d.name << ": ";
    if (d.type == Type::Bool) {
      out << "bool init " << (d.init ? "true" : "false");
    } else {
      out << "[" << d.lo << ".." << d.hi << "] init " << d.init;
    }
    out << ";\n";
  }
  for (const auto& c : mdp.commands) {
    out << "[" << to_string(c.guard, names) << "] ";
    bool first_branch = true;
    for (const auto& br : c.branches) {
      if (!first_branch) out << " + ";
      first_branch = false;
      out << br.prob.str() << ": (";
      bool first_upd = true;
      for (const auto& [vi, e] : br.assign.updates) {
        if (!first_upd) out << " & ";
        first_upd = false;
        out << names[vi] << "'=" << to_string(e, names);
      }
      out << ")";
    }
    out << ";\n";
  }
  out << "target " << to_string(query.target, names) << ";\n";
  return out.str();
}

}  // namespace lazymdp::text
