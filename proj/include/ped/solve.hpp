#pragma once

#include <stdexcept>
#include <string>

#include "ped/brute_force.hpp"
#include "ped/td_solver.hpp"
#include "ped/tree_solver.hpp"

namespace ped {

enum class Algo { Auto, Tree, Td, Brute };

inline std::string to_string(Algo a) {
  switch (a) {
    case Algo::Auto: return "auto";
    case Algo::Tree: return "tree";
    case Algo::Td: return "td";
    case Algo::Brute: return "brute";
  }
  return "?";
}

inline Algo algo_from_string(const std::string& s) {
  if (s == "auto") return Algo::Auto;
  if (s == "tree") return Algo::Tree;
  if (s == "td") return Algo::Td;
  if (s == "brute") return Algo::Brute;
  throw ParseError("unknown algorithm '" + s + "'");
}

struct SolveOptions {
  Algo algo = Algo::Auto;
  TdOptions td;                         // entry budget / timeout for the td path
  long long brute_budget = 100'000'000; // assignment budget for the brute path
};

struct SolveStats {
  int components = 0;
  int forest_components = 0;
  int width = -1;        // max over non-forest components (td path), -1 if none
  double decomp_ms = 0.0;
  long long peak_entries = 0;
};

// Solve one drawing by splitting its intersection graph into connected
// components and dispatching each to the cheapest applicable exact solver.
inline Solution solve(const Drawing& d, Mode mode, const SolveOptions& opt = {},
                      SolveStats* stats = nullptr) {
  if (mode == Mode::SHPED) return shped_ratio(d).second;
  if (opt.algo == Algo::Brute) {
    Solution sol = brute_force(d, mode, opt.brute_budget).witness;
    if (stats) *stats = SolveStats{1, 0, -1, 0.0, 0};
    return sol;
  }

  IntersectionGraph g = build_graph(d);
  Solution sol;
  sol.mode = mode;
  sol.assignment.assign(g.size(), Choice{});

  SolveStats st;
  for (const Component& comp : split_components(g)) {
    ++st.components;
    ComponentSolve cs;
    const bool forest = comp.kind == ComponentKind::Forest;
    if (opt.algo == Algo::Tree && !forest)
      throw std::invalid_argument("tree solver requested on a non-forest component");
    if (forest && opt.algo != Algo::Td) {
      ++st.forest_components;
      cs = solve_tree(g, comp, mode);
    } else {
      TdStats ts;
      cs = solve_td(g, comp, mode, opt.td, &ts);
      st.width = std::max(st.width, ts.width);
      st.decomp_ms += ts.decomp_ms;
      st.peak_entries = std::max(st.peak_entries, ts.peak_entries);
    }
    for (auto& [sid, c] : cs.choices) sol.assignment[sid] = c;
  }
  sol.total_ink = ink(sol);
  if (stats) *stats = st;
  return sol;
}

}  // namespace ped
