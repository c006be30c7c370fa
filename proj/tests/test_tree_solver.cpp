#include <doctest.h>

#include "ped/brute_force.hpp"
#include "ped/gadgets.hpp"
#include "ped/layout.hpp"
#include "ped/tree_solver.hpp"
#include "ped/validate.hpp"

using namespace ped;

namespace {

// Whether every component of the intersection graph is a forest.
bool all_forest(const IntersectionGraph& g) {
  for (const auto& c : split_components(g))
    if (c.kind != ComponentKind::Forest) return false;
  return true;
}

Solution assemble(const IntersectionGraph& g, Mode mode,
                  const std::vector<ComponentSolve>& parts) {
  Solution sol;
  sol.mode = mode;
  sol.assignment.assign(g.size(), Choice{});
  for (const auto& p : parts)
    for (const auto& [sid, c] : p.choices) sol.assignment[sid] = c;
  sol.total_ink = ink(sol);
  return sol;
}

}  // namespace

TEST_CASE("tree solver matches the oracle on the pair fixture") {
  Drawing d = sped_pair(8.0);
  IntersectionGraph g = build_graph(d);
  auto comps = split_components(g);
  REQUIRE(comps.size() == 1);
  for (Mode mode : {Mode::SPED, Mode::PED}) {
    ComponentSolve cs = solve_tree(g, comps[0], mode);
    CHECK(cs.ink == doctest::Approx(brute_force(d, mode).optimal_ink));
    Solution sol = assemble(g, mode, {cs});
    CHECK(validate_solution(d, sol).valid());
    CHECK(sol.total_ink == doctest::Approx(cs.ink));
  }
}

TEST_CASE("tree solver refuses non-forest components") {
  IntersectionGraph g = build_graph(sped_clause_triangle());
  auto comps = split_components(g);
  REQUIRE(comps[0].kind == ComponentKind::General);
  CHECK_THROWS_AS(solve_tree(g, comps[0], Mode::SPED), std::invalid_argument);
}

TEST_CASE("tree solver equals the oracle on random forest drawings") {
  int tested = 0;
  for (std::uint64_t seed = 1; tested < 25 && seed < 400; ++seed) {
    LayoutSpec ls;
    ls.n = 7;
    ls.m = 6 + static_cast<int>(seed % 3);
    ls.seed = seed;
    ls.layout = seed % 2 ? LayoutKind::Spring : LayoutKind::Circular;
    Drawing d = random_instance(ls);
    IntersectionGraph g = build_graph(d);
    if (!all_forest(g) || g.crossings.empty()) continue;
    ++tested;
    for (Mode mode : {Mode::SPED, Mode::PED}) {
      std::vector<ComponentSolve> parts;
      for (const auto& comp : split_components(g)) parts.push_back(solve_tree(g, comp, mode));
      Solution sol = assemble(g, mode, parts);
      OracleResult oracle = brute_force(d, mode);
      CHECK(sol.total_ink == doctest::Approx(oracle.optimal_ink).epsilon(1e-9));
      CHECK(validate_solution(d, sol).valid());
    }
  }
  CHECK(tested == 25);
}

TEST_CASE("incremental tables equal naive recomputation") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    LayoutSpec ls;
    ls.n = 8;
    ls.m = 7;
    ls.seed = seed;
    Drawing d = random_instance(ls);
    IntersectionGraph g = build_graph(d);
    if (!all_forest(g)) continue;
    std::vector<ChoiceSet> sets(g.size());
    for (int u = 0; u < g.size(); ++u) sets[u] = sped_choices(g, u);
    for (const auto& comp : split_components(g)) {
      auto fast = detail::tree_dp_tables(g, comp, sets, true);
      auto slow = detail::tree_dp_tables(g, comp, sets, false);
      for (int u : comp.vertices) {
        REQUIRE(fast.tables[u].size() == slow.tables[u].size());
        for (size_t c = 0; c < fast.tables[u].size(); ++c)
          CHECK(fast.tables[u][c] == doctest::Approx(slow.tables[u][c]).epsilon(1e-12));
      }
    }
  }
}
