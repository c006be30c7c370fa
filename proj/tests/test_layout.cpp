#include <doctest.h>

#include <set>

#include "ped/layout.hpp"

using namespace ped;

TEST_CASE("gnm generator: exact edge count, simple, seed-deterministic") {
  auto e1 = random_graph_gnm(10, 20, 7);
  auto e2 = random_graph_gnm(10, 20, 7);
  CHECK(e1 == e2);
  CHECK(e1.size() == 20);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : e1) {
    CHECK(u != v);
    CHECK(seen.insert(std::minmax(u, v)).second);
  }
  CHECK_THROWS_AS(random_graph_gnm(4, 7, 1), std::invalid_argument);
}

TEST_CASE("random instances are deterministic per seed") {
  for (LayoutKind layout : {LayoutKind::Spring, LayoutKind::Circular}) {
    LayoutSpec ls;
    ls.n = 12;
    ls.m = 14;
    ls.seed = 42;
    ls.layout = layout;
    Drawing a = random_instance(ls);
    Drawing b = random_instance(ls);
    CHECK(save_drawing(a) == save_drawing(b));
    CHECK(a.vertices.size() == 12);
    CHECK(a.segments.size() == 14);
    CHECK_NOTHROW(build_graph(a));
  }
}

TEST_CASE("different seeds give different drawings") {
  LayoutSpec a, b;
  a.n = b.n = 10;
  a.m = b.m = 12;
  a.seed = 1;
  b.seed = 2;
  CHECK(save_drawing(random_instance(a)) != save_drawing(random_instance(b)));
}

TEST_CASE("single circle layout places vertices on the circle in id order") {
  auto pos = single_circle_layout(5, 10.0);
  REQUIRE(pos.size() == 5);
  for (const Point& p : pos) CHECK(norm(p) == doctest::Approx(10.0));
  CHECK(pos[0].x == doctest::Approx(10.0));
}

TEST_CASE("block circular layout keeps sparse graphs sparse in crossings") {
  // A single shared circle would give hundreds of crossings here; the
  // block-structured layout stays in the low tens.
  double total = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    LayoutSpec ls;
    ls.n = 40;
    ls.m = 45;
    ls.layout = LayoutKind::Circular;
    ls.seed = seed;
    total += static_cast<double>(build_graph(random_instance(ls)).crossings.size());
  }
  CHECK(total / 5 < 120);
}

TEST_CASE("spring layout keeps vertices inside its frame") {
  auto edges = random_graph_gnm(20, 25, 3);
  auto pos = spring_layout(20, edges, 80, 3);
  const double L = 10.0 * std::sqrt(20.0);
  for (const Point& p : pos) {
    CHECK(p.x >= 0.0);
    CHECK(p.x <= L);
    CHECK(p.y >= 0.0);
    CHECK(p.y <= L);
  }
}

TEST_CASE("trees lay out without degeneracies in both layouts") {
  // G(5,4) and friends: mostly trees and unicyclic graphs.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    LayoutSpec ls;
    ls.n = 5;
    ls.m = 4;
    ls.seed = seed;
    for (LayoutKind layout : {LayoutKind::Spring, LayoutKind::Circular}) {
      ls.layout = layout;
      CHECK_NOTHROW(build_graph(random_instance(ls)));
    }
  }
}
