#include <doctest.h>

#include "ped/brute_force.hpp"
#include "ped/gadgets.hpp"
#include "ped/validate.hpp"

using namespace ped;

TEST_CASE("oracle solves the pair fixture") {
  Drawing d = sped_pair(8.0);
  OracleResult r = brute_force(d, Mode::SPED);
  CHECK(r.optimal_ink == doctest::Approx(10.0));
  CHECK(r.enumerated == 4);  // 2 choices per segment
  CHECK(validate_solution(d, r.witness).valid());
  CHECK(ink(r.witness) == doctest::Approx(10.0));
  // Two optima: either segment may carry the stub pair.
  CHECK(r.optimum_count == 2);
}

TEST_CASE("oracle SPED and PED values on the clause triangle") {
  Drawing d = sped_clause_triangle();
  CHECK(brute_force(d, Mode::SPED).optimal_ink == doctest::Approx(12.0));
  OracleResult p = brute_force(d, Mode::PED);
  CHECK(p.optimal_ink == doctest::Approx(24.0));  // full ink via zero-width gaps
  CHECK(validate_solution(d, p.witness).valid());
}

TEST_CASE("oracle enforces its enumeration budget") {
  CHECK_THROWS_AS(brute_force(sped_variable_cycle(3), Mode::SPED, 10), BudgetExceeded);
}

TEST_CASE("variable cycles have exactly two optima") {
  for (int p : {2, 3}) {
    OracleResult r = brute_force(sped_variable_cycle(p), Mode::SPED);
    CHECK(r.optimal_ink == doctest::Approx(10.0 * p));
    CHECK(r.optimum_count == 2);
  }
}

TEST_CASE("shped ratio: mixed pair 1/4, triangle 1/8") {
  // Lengths 8 and 4 crossing at distance 1 on each: the longer edge has stub
  // ratio 1/8, the shorter 1/4; the crossing needs only the better of the two.
  Drawing mixed;
  mixed.vertices = {{0, {0, 0}}, {1, {8, 0}}, {2, {1, -1}}, {3, {1, 3}}};
  mixed.edges = {{0, 1}, {2, 3}};
  mixed.check();
  mixed.rebuild_segments();
  auto [dp, solp] = shped_ratio(mixed);
  CHECK(dp == doctest::Approx(0.25));
  CHECK(validate_solution(mixed, solp).valid());
  CHECK(solp.delta == doctest::Approx(0.25));

  auto [dt, solt] = shped_ratio(sped_clause_triangle());
  CHECK(dt == doctest::Approx(0.125));
  CHECK(validate_solution(sped_clause_triangle(), solt).valid());
}

TEST_CASE("crossing-free drawing keeps full ink in every mode") {
  Drawing d;
  d.vertices = {{0, {0, 0}}, {1, {1, 0}}, {2, {0, 2}}, {3, {1, 2}}};
  d.edges = {{0, 1}, {2, 3}};
  d.check();
  d.rebuild_segments();
  for (Mode m : {Mode::SPED, Mode::PED}) {
    OracleResult r = brute_force(d, m);
    CHECK(r.optimal_ink == doctest::Approx(2.0));
    CHECK(r.optimum_count == 1);
  }
  CHECK(shped_ratio(d).first == doctest::Approx(0.5));
}
