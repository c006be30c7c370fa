#pragma once

#include <string>
#include <vector>

#include "ped/intersection_graph.hpp"

namespace ped {

struct ValidityReport {
  std::vector<int> unresolved;   // crossing indices not erased by either side
  std::vector<std::string> errors;

  bool valid() const { return unresolved.empty() && errors.empty(); }
};

inline ValidityReport validate_solution(const Drawing& d, const Solution& sol) {
  ValidityReport rep;
  if (sol.assignment.size() != d.segments.size()) {
    rep.errors.push_back("assignment covers " + std::to_string(sol.assignment.size()) +
                         " of " + std::to_string(d.segments.size()) + " segments");
    return rep;
  }
  for (size_t i = 0; i < sol.assignment.size(); ++i) {
    const Choice& c = sol.assignment[i];
    if (sol.mode == Mode::SPED &&
        (c.kind == ChoiceKind::Gap || c.kind == ChoiceKind::NoGapSentinel))
      rep.errors.push_back("segment " + std::to_string(i) + ": gap choice in SPED mode");
    const double len = d.segments[i].length();
    if (c.ink < -kTol * len || c.ink > len * (1 + kTol))
      rep.errors.push_back("segment " + std::to_string(i) + ": ink outside [0,|s|]");
  }
  if (!rep.errors.empty()) return rep;
  IntersectionGraph g = build_graph(d);
  for (size_t x = 0; x < g.crossings.size(); ++x) {
    const Crossing& c = g.crossings[x];
    if (!choices_compatible(g, c.u, sol.assignment[c.u], c.v, sol.assignment[c.v], c))
      rep.unresolved.push_back(static_cast<int>(x));
  }
  return rep;
}

}  // namespace ped
