#include <doctest.h>

#include "ped/brute_force.hpp"
#include "ped/gadgets.hpp"
#include "ped/layout.hpp"
#include "ped/solve.hpp"
#include "ped/validate.hpp"

using namespace ped;

TEST_CASE("td solver matches the oracle on fixtures") {
  for (Mode mode : {Mode::SPED, Mode::PED}) {
    for (const Drawing& d : {sped_pair(8.0), sped_clause_triangle(), sped_variable_cycle(2),
                             ped_variable_cycle(3, 6.0, 0.5)}) {
      IntersectionGraph g = build_graph(d);
      double total = 0.0;
      for (const auto& comp : split_components(g)) {
        TdStats st;
        ComponentSolve cs = solve_td(g, comp, mode, {}, &st);
        total += cs.ink;
        CHECK(st.width >= 0);
      }
      CHECK(total == doctest::Approx(brute_force(d, mode).optimal_ink).epsilon(1e-9));
    }
  }
}

TEST_CASE("td solver equals tree solver on forest components") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    LayoutSpec ls;
    ls.n = 9;
    ls.m = 8;
    ls.seed = seed;
    Drawing d = random_instance(ls);
    IntersectionGraph g = build_graph(d);
    for (const auto& comp : split_components(g)) {
      if (comp.kind != ComponentKind::Forest) continue;
      for (Mode mode : {Mode::SPED, Mode::PED}) {
        CHECK(solve_td(g, comp, mode).ink ==
              doctest::Approx(solve_tree(g, comp, mode).ink).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("solution ink equals the sum of its choices") {
  Drawing d = ped_clause_gadget(12.0, 1.0);
  SolveOptions opt;
  opt.algo = Algo::Td;
  Solution sol = solve(d, Mode::PED, opt);
  double sum = 0.0;
  for (const Choice& c : sol.assignment) sum += c.ink;
  CHECK(sol.total_ink == doctest::Approx(sum).epsilon(1e-12));
  CHECK(validate_solution(d, sol).valid());
}

TEST_CASE("memory budget aborts with a diagnostic") {
  Drawing d = ped_clause_gadget(12.0, 1.0);
  IntersectionGraph g = build_graph(d);
  TdOptions opt;
  opt.max_entries = 4;
  auto comps = split_components(g);
  CHECK_THROWS_AS(solve_td(g, comps[0], Mode::PED, opt), MemoryBudgetExceeded);
}

TEST_CASE("timeout aborts with a diagnostic") {
  LayoutSpec ls;
  ls.n = 40;
  ls.m = 55;
  ls.seed = 1;
  ls.layout = LayoutKind::Circular;
  Drawing d = random_instance(ls);
  SolveOptions opt;
  opt.td.timeout_ms = 1;
  CHECK_THROWS_AS(solve(d, Mode::PED, opt), TimeoutExceeded);
}

TEST_CASE("solve dispatch: tree on forests, td otherwise, brute as oracle") {
  Drawing d = sped_clause_triangle();
  SolveOptions tree_opt;
  tree_opt.algo = Algo::Tree;
  CHECK_THROWS_AS(solve(d, Mode::SPED, tree_opt), std::invalid_argument);

  SolveStats st;
  Solution sol = solve(d, Mode::SPED, {}, &st);
  CHECK(sol.total_ink == doctest::Approx(12.0));
  CHECK(st.components == 1);
  CHECK(st.width == 2);

  SolveOptions brute_opt;
  brute_opt.algo = Algo::Brute;
  CHECK(solve(d, Mode::SPED, brute_opt).total_ink == doctest::Approx(12.0));
}
