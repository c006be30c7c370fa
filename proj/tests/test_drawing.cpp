#include <doctest.h>

#include "ped/drawing.hpp"
#include "ped/gadgets.hpp"

using namespace ped;

TEST_CASE("drawing round trip is bit-identical") {
  Drawing d = sped_pair(8.0);
  const std::string once = save_drawing(d);
  Drawing back = load_drawing(once);
  CHECK(save_drawing(back) == once);
  REQUIRE(back.vertices.size() == d.vertices.size());
  REQUIRE(back.segments.size() == 2);
  CHECK(back.total_length() == doctest::Approx(16.0));
}

TEST_CASE("drawing check rejects malformed input") {
  Drawing d;
  d.vertices = {{0, {0, 0}}, {1, {1, 0}}};
  SUBCASE("self-loop") {
    d.edges = {{0, 0}};
    CHECK_THROWS_AS(d.check(), ParseError);
  }
  SUBCASE("duplicate edge") {
    d.edges = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(d.check(), ParseError);
  }
  SUBCASE("non-finite coordinate") {
    d.vertices.push_back({2, {std::nan(""), 0}});
    CHECK_THROWS_AS(d.check(), ParseError);
  }
  SUBCASE("zero-length segment") {
    d.vertices.push_back({2, {0, 0}});
    d.edges = {{0, 2}};
    CHECK_THROWS_AS(d.rebuild_segments(), ParseError);
  }
  SUBCASE("unknown vertex in edge") {
    d.edges = {{0, 9}};
    CHECK_THROWS_AS(d.rebuild_segments(), ParseError);
  }
}

TEST_CASE("segments are oriented from the smaller vertex id") {
  Drawing d;
  d.vertices = {{0, {5, 0}}, {1, {0, 0}}};
  d.edges = {{1, 0}};  // reversed edge listing
  d.check();
  d.rebuild_segments();
  CHECK(d.segments[0].a == Point{5, 0});  // endpoint of vertex 0
  CHECK(d.segments[0].b == Point{0, 0});
}

TEST_CASE("choice resolution uses closed intervals") {
  const double len = 8.0;
  SUBCASE("stubs touching the crossing resolve it") {
    Choice c = Choice::stubs(len, 2.0);
    CHECK(c.resolves(2.0, len));
    CHECK(c.resolves(6.0, len));
    CHECK_FALSE(c.resolves(1.0, len));
    CHECK(c.resolves(4.0, len));
  }
  SUBCASE("zero-width gap resolves exactly its point") {
    Choice c = Choice::gap(len, 3.0, 3.0);
    CHECK(c.ink == doctest::Approx(8.0));
    CHECK(c.resolves(3.0, len));
    CHECK_FALSE(c.resolves(3.1, len));
  }
  SUBCASE("full and sentinel resolve nothing") {
    CHECK_FALSE(Choice::full(len).resolves(4.0, len));
    CHECK_FALSE(Choice::no_gap(len).resolves(4.0, len));
  }
}

TEST_CASE("solution files round trip") {
  Drawing d = sped_pair(8.0);
  Solution sol;
  sol.mode = Mode::SPED;
  sol.assignment = {Choice::full(8.0), Choice::stubs(8.0, 1.0)};
  sol.total_ink = ink(sol);
  CHECK(sol.total_ink == doctest::Approx(10.0));

  const std::string text = save_solution(d, sol);
  Solution back = load_solution(d, text);
  CHECK(back.mode == Mode::SPED);
  CHECK(ink(back) == doctest::Approx(10.0));
  CHECK(back.assignment[1].kind == ChoiceKind::SymmetricStubs);
  CHECK(back.delta == doctest::Approx(-1.0));  // unset outside SHPED

  SUBCASE("missing segment rejected") {
    nlohmann::json j = nlohmann::json::parse(text);
    j["choices"].erase(0);
    CHECK_THROWS_AS(load_solution(d, j.dump()), ParseError);
  }
  SUBCASE("delta serialized as null outside SHPED") {
    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j.at("delta").is_null());
  }
}

TEST_CASE("scale_drawing scales lengths and validates the factor") {
  Drawing d = sped_pair(8.0);
  Drawing s = scale_drawing(d, 3.0);
  CHECK(s.total_length() == doctest::Approx(48.0));
  CHECK_THROWS_AS(scale_drawing(d, 0.0), ParseError);
  CHECK_THROWS_AS(scale_drawing(d, -1.0), ParseError);
}
