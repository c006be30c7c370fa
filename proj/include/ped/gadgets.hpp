#pragma once

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "ped/intersection_graph.hpp"

namespace ped {

// Fixed drawing fragments with known optimal ink, used as ground-truth
// fixtures. Coordinates are synthesized in closed form; every generator
// re-derives the intersection graph and asserts the intended crossing
// positions before returning, so a drifting construction fails loudly.
struct GadgetSpec {
  enum class Kind {
    SpedPair,
    SpedClauseTriangle,
    SpedVariableCycle,
    PedVariableCycle,
    PedClauseGadget,
    PedWeightComponent,
  };

  Kind kind = Kind::SpedPair;
  double length = 8.0;  // SpedPair segment length
  int p = 3;            // cycle size parameter
  double alpha = 12.0;
  double beta = 1.0;
};

namespace detail {

inline void add_free_segment(Drawing& d, Point a, Point b) {
  const int base = static_cast<int>(d.vertices.size());
  d.vertices.push_back({base, a});
  d.vertices.push_back({base + 1, b});
  d.edges.emplace_back(base, base + 1);
}

inline Point rotate(Point v, double rad) {
  const double c = std::cos(rad), s = std::sin(rad);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Per-segment sorted crossing positions a generator intends to realize.
inline void verify_positions(const Drawing& d, const std::vector<std::vector<double>>& expected,
                             const std::string& what) {
  IntersectionGraph g = build_graph(d);
  if (g.size() != static_cast<int>(expected.size()))
    throw std::logic_error(what + ": segment count mismatch");
  for (int u = 0; u < g.size(); ++u) {
    const double tol = kTol * g.seg_length(u) * 16;
    if (g.positions[u].size() != expected[u].size())
      throw std::logic_error(what + ": segment " + std::to_string(u) + " has " +
                             std::to_string(g.positions[u].size()) + " crossings, expected " +
                             std::to_string(expected[u].size()));
    for (size_t i = 0; i < expected[u].size(); ++i)
      if (std::abs(g.positions[u][i] - expected[u][i]) > tol)
        throw std::logic_error(what + ": crossing position " + std::to_string(g.positions[u][i]) +
                               " on segment " + std::to_string(u) + ", expected " +
                               std::to_string(expected[u][i]));
  }
}

// A cycle of m segments through the vertices of a regular m-gon of the given
// side, each extended `over` beyond both crossing points. Segment i runs from
// P_i to P_{i+1}, so its crossings sit at `over` and `over + side`.
inline Drawing polygon_cycle(int m, double side, double over, const std::string& what) {
  if (m < 3) throw std::invalid_argument(what + ": cycle needs at least 3 segments");
  const double circ = side / (2.0 * std::sin(std::numbers::pi / m));
  std::vector<Point> P(m);
  for (int i = 0; i < m; ++i) {
    const double ang = 2.0 * std::numbers::pi * i / m;
    P[i] = {circ * std::cos(ang), circ * std::sin(ang)};
  }
  Drawing d;
  for (int i = 0; i < m; ++i) {
    const Point dir = (1.0 / side) * (P[(i + 1) % m] - P[i]);
    add_free_segment(d, P[i] - over * dir, P[(i + 1) % m] + over * dir);
  }
  d.check();
  d.rebuild_segments();
  verify_positions(d, std::vector<std::vector<double>>(m, {over, over + side}), what);
  return d;
}

}  // namespace detail

// Two segments of the given length crossing at distance 1 from an endpoint of
// each. SPED optimum: one Full, one stub pair of length 1.
inline Drawing sped_pair(double length = 8.0) {
  if (length <= 2.0) throw std::invalid_argument("pair gadget needs length > 2");
  Drawing d;
  detail::add_free_segment(d, {0, 0}, {length, 0});
  detail::add_free_segment(d, {1, -1}, {1, length - 1});
  d.check();
  d.rebuild_segments();
  detail::verify_positions(d, {{1.0}, {1.0}}, "sped_pair");
  return d;
}

// Three length-8 segments pairwise crossing at distance 1 from endpoints
// (crossings at 1 and 7 on each). At most one can be fully drawn.
inline Drawing sped_clause_triangle() { return detail::polygon_cycle(3, 6.0, 1.0, "sped_clause_triangle"); }

// A cycle of 2p length-8 segments, crossings at 1 and 7 on each; exactly two
// ink-maximal SPEDs (alternating Full / stub-pair).
inline Drawing sped_variable_cycle(int p) {
  if (p < 2) throw std::invalid_argument("sped variable cycle needs p >= 2");
  return detail::polygon_cycle(2 * p, 6.0, 1.0, "sped_variable_cycle");
}

// A cycle of p segments of length alpha + 2*beta, crossings at beta from each
// end. 2-plane; full PED ink with exactly two zero-width-gap orientations.
inline Drawing ped_variable_cycle(int p, double alpha = 12.0, double beta = 1.0) {
  if (p < 3)
    throw std::invalid_argument("ped variable cycle needs p >= 3 (a 2-cycle of segments has no "
                                "straight-line realization)");
  return detail::polygon_cycle(p, alpha, beta, "ped_variable_cycle");
}

// One weight component alone: a 4-cycle of length-(18*alpha + 2*beta)
// segments drawn as a square, crossings at beta from the ends.
inline Drawing ped_weight_component(double alpha = 12.0, double beta = 1.0) {
  return detail::polygon_cycle(4, 18.0 * alpha, beta, "ped_weight_component");
}

// Clause gadget: three triangle segments of length 4*alpha + 2*beta (pairwise
// crossings at beta and beta + alpha; a weight attachment at 4*alpha + beta),
// each tied to a rhombic 4-cycle of length-(18*alpha + 2*beta) segments whose
// own crossings are beta from the ends.
//
// The attachment sits at 6.5*alpha from the nearer cycle crossing along the
// attached segment. Any distance above 6*alpha keeps the optimum at
// 221*alpha + 30*beta: resolving the attachment inside the weight component
// costs that distance plus alpha of triangle ink, which exceeds the 7*alpha
// the triangle loses otherwise. A centered attachment admits no planar
// realization (the three attached segments would be forced pairwise
// near-parallel yet cannot clear the other triangle arms), so this placement
// is what makes the gadget drawable at all.
inline Drawing ped_clause_gadget(double alpha = 12.0, double beta = 1.0) {
  if (alpha <= 0 || beta <= 0) throw std::invalid_argument("clause gadget needs alpha, beta > 0");
  if (alpha < 4 * beta)
    std::cerr << "warning: clause gadget with alpha < 4*beta has nearly degenerate "
                 "crossing spacing\n";
  using detail::rotate;
  const double a = alpha, b = beta;
  const double attach = 6.5 * a;                 // along s_w, from the nearer cycle crossing
  const double deg = std::numbers::pi / 180.0;
  const double circ = a / std::sqrt(3.0);
  Drawing d;
  std::vector<std::vector<double>> expect;
  for (int i = 0; i < 3; ++i) {
    const double ang = (90.0 + 120.0 * i) * deg;
    const Point near{circ * std::cos(ang), circ * std::sin(ang)};
    const double ang2 = (90.0 + 120.0 * (i + 1)) * deg;
    const Point far{circ * std::cos(ang2), circ * std::sin(ang2)};
    const Point e = (1.0 / a) * (far - near);
    detail::add_free_segment(d, near - b * e, near + (4 * a + b) * e);
    expect.push_back({b, b + a, 4 * a + b});
  }
  for (int i = 0; i < 3; ++i) {
    const double ang = (90.0 + 120.0 * i) * deg;
    const Point near{circ * std::cos(ang), circ * std::sin(ang)};
    const double ang2 = (90.0 + 120.0 * (i + 1)) * deg;
    const Point far{circ * std::cos(ang2), circ * std::sin(ang2)};
    const Point e = (1.0 / a) * (far - near);
    const Point Q = near + 4 * a * e;
    const Point t = rotate(e, 55.0 * deg);
    const Point u = rotate(t, -60.0 * deg);
    const Point A = Q - attach * t;
    const Point B = Q + (18 * a - attach) * t;
    const Point C = B + 18 * a * u;
    const Point D = A + 18 * a * u;
    detail::add_free_segment(d, A - b * t, B + b * t);  // s_w, attachment at attach + b
    detail::add_free_segment(d, B - b * u, C + b * u);
    detail::add_free_segment(d, C + b * t, D - b * t);
    detail::add_free_segment(d, D + b * u, A - b * u);
    expect.push_back({b, attach + b, 18 * a + b});
    expect.push_back({b, 18 * a + b});
    expect.push_back({b, 18 * a + b});
    expect.push_back({b, 18 * a + b});
  }
  d.check();
  d.rebuild_segments();
  detail::verify_positions(d, expect, "ped_clause_gadget");
  return d;
}

inline Drawing gadget(const GadgetSpec& spec) {
  switch (spec.kind) {
    case GadgetSpec::Kind::SpedPair: return sped_pair(spec.length);
    case GadgetSpec::Kind::SpedClauseTriangle: return sped_clause_triangle();
    case GadgetSpec::Kind::SpedVariableCycle: return sped_variable_cycle(spec.p);
    case GadgetSpec::Kind::PedVariableCycle: return ped_variable_cycle(spec.p, spec.alpha, spec.beta);
    case GadgetSpec::Kind::PedClauseGadget: return ped_clause_gadget(spec.alpha, spec.beta);
    case GadgetSpec::Kind::PedWeightComponent: return ped_weight_component(spec.alpha, spec.beta);
  }
  throw std::invalid_argument("unknown gadget kind");
}

inline GadgetSpec gadget_spec_from_name(const std::string& name) {
  GadgetSpec s;
  if (name == "sped-pair-8") {
    s.kind = GadgetSpec::Kind::SpedPair;
    s.length = 8.0;
  } else if (name == "sped-pair-4") {
    s.kind = GadgetSpec::Kind::SpedPair;
    s.length = 4.0;
  } else if (name == "sped-clause") {
    s.kind = GadgetSpec::Kind::SpedClauseTriangle;
  } else if (name == "sped-cycle") {
    s.kind = GadgetSpec::Kind::SpedVariableCycle;
  } else if (name == "ped-cycle") {
    s.kind = GadgetSpec::Kind::PedVariableCycle;
  } else if (name == "ped-clause") {
    s.kind = GadgetSpec::Kind::PedClauseGadget;
  } else if (name == "ped-weight") {
    s.kind = GadgetSpec::Kind::PedWeightComponent;
  } else {
    throw std::invalid_argument("unknown gadget '" + name + "'");
  }
  return s;
}

}  // namespace ped
