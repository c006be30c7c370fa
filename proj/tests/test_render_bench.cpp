#include <doctest.h>

#include "ped/bench.hpp"
#include "ped/gadgets.hpp"
#include "ped/solve.hpp"
#include "ped/svg.hpp"

using namespace ped;

TEST_CASE("rendering without a solution draws every edge solid") {
  Drawing d = sped_clause_triangle();
  std::string svg = render_svg(d);
  CHECK(svg_solid_length(svg) == doctest::Approx(d.total_length()).epsilon(1e-5));
  CHECK(svg.find("omit") == std::string::npos);
}

TEST_CASE("pair optimum renders one full edge and two length-1 stubs") {
  Drawing d = sped_pair(8.0);
  Solution sol = solve(d, Mode::SPED);
  std::string svg = render_svg(d, &sol);
  size_t parts = 0, at = 0;
  while ((at = svg.find("class=\"part\"", at)) != std::string::npos) {
    ++parts;
    ++at;
  }
  CHECK(parts == 3);
  CHECK(svg_solid_length(svg) == doctest::Approx(10.0).epsilon(1e-5));
}

TEST_CASE("rendered solid length equals solution ink") {
  Drawing d = ped_variable_cycle(4, 12.0, 1.0);
  for (Mode mode : {Mode::SPED, Mode::PED, Mode::SHPED}) {
    Solution sol = solve(d, mode);
    std::string svg = render_svg(d, &sol);
    CHECK(svg_solid_length(svg) == doctest::Approx(ink(sol)).epsilon(1e-5));
  }
}

TEST_CASE("dotted flag adds dashed omitted pieces; output is deterministic") {
  Drawing d = sped_pair(8.0);
  Solution sol = solve(d, Mode::SPED);
  SvgOptions dotted;
  dotted.dotted = true;
  std::string a = render_svg(d, &sol, dotted);
  CHECK(a.find("stroke-dasharray") != std::string::npos);
  CHECK(a == render_svg(d, &sol, dotted));
  CHECK_THROWS_AS(render_svg(sped_clause_triangle(), &sol), ParseError);
}

TEST_CASE("bench emits the documented CSV schema") {
  BenchConfig cfg;
  cfg.n = 10;
  cfg.ms = {10};
  cfg.seeds = 2;
  cfg.modes = {Mode::SPED};
  auto rows = bench_run(cfg);
  REQUIRE(rows.size() == 4);  // 2 layouts x 1 size x 2 seeds x 1 mode
  for (const auto& r : rows) {
    CHECK(r.status == "ok");
    CHECK(r.ink_ratio == doctest::Approx(r.ink / r.total_length));
    CHECK(r.ink_ratio <= 1.0 + 1e-9);
  }
  std::string csv = bench_csv(rows);
  CHECK(csv.rfind("instance,n,m,crossings,k,width,mode,algo,total_length,ink,ink_ratio,"
                  "solve_ms,decomp_ms,peak_entries,status\n",
                  0) == 0);
  CHECK(csv.find("# summary layout=spring mode=sped") != std::string::npos);
  CHECK(csv.find("mean_ink_ratio=") != std::string::npos);
}
