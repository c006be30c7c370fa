#include <doctest.h>

#include <random>

#include "ped/gadgets.hpp"
#include "ped/treedecomp.hpp"

using namespace ped;

namespace {

SimpleGraph random_simple_graph(int n, int m, std::uint64_t seed) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min<size_t>(m, pairs.size()));
  return SimpleGraph::from(n, std::move(pairs));
}

}  // namespace

TEST_CASE("known widths") {
  SUBCASE("single vertex -> width 0") {
    CHECK(decompose(SimpleGraph::from(1, {})).width() == 0);
  }
  SUBCASE("path -> width 1") {
    CHECK(decompose(SimpleGraph::from(4, {{0, 1}, {1, 2}, {2, 3}})).width() == 1);
  }
  SUBCASE("triangle -> width 2") {
    CHECK(decompose(SimpleGraph::from(3, {{0, 1}, {1, 2}, {0, 2}})).width() == 2);
  }
  SUBCASE("K4 -> width 3") {
    CHECK(decompose(SimpleGraph::from(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}))
              .width() == 3);
  }
  SUBCASE("pair fixture intersection graph -> width 1") {
    IntersectionGraph g = build_graph(sped_pair(8.0));
    auto cg = ComponentGraph::from(g, split_components(g)[0]);
    CHECK(decompose(cg.graph).width() == 1);
  }
  SUBCASE("clause triangle intersection graph -> width 2") {
    IntersectionGraph g = build_graph(sped_clause_triangle());
    auto cg = ComponentGraph::from(g, split_components(g)[0]);
    CHECK(decompose(cg.graph).width() == 2);
  }
}

TEST_CASE("decompositions validate and nice form preserves width") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 18);
    const int m = static_cast<int>(seed * 7 % (n * 2));
    SimpleGraph g = random_simple_graph(n, m, seed);
    TreeDecomposition td = decompose(g);
    REQUIRE(validate_td(g, td).valid());
    NiceTreeDecomposition nice = make_nice(g, td);
    REQUIRE(validate_nice(g, nice).valid());
    CHECK(nice.width() == td.width());
    CHECK(static_cast<int>(nice.nodes.size()) <= 4 * (td.width() + 1) * g.n);
  }
}

TEST_CASE("exact order never loses to the min-fill heuristic on small graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    SimpleGraph g = random_simple_graph(n, 2 * n, seed * 31);
    const int heur = detail::td_from_elimination(g, detail::min_fill_order(g)).width();
    const int exact = detail::td_from_elimination(g, detail::exact_order(g)).width();
    CHECK(exact <= heur);
  }
}

TEST_CASE("make_nice rejects invalid decompositions") {
  SimpleGraph g = SimpleGraph::from(3, {{0, 1}, {1, 2}});
  TreeDecomposition bad;
  bad.nodes.resize(1);
  bad.nodes[0].bag = {0, 1};  // vertex 2 uncovered
  CHECK_FALSE(validate_td(g, bad).valid());
  CHECK_THROWS_AS(make_nice(g, bad), std::invalid_argument);
}
