#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ped/drawing.hpp"
#include "ped/geometry.hpp"

namespace ped {

// Interior intersection of two segments, with its position along each.
struct Crossing {
  int u, v;        // segment ids, u < v
  Point point;
  double du, dv;   // distance from the `a` endpoint of s(u) / s(v)

  double pos_on(int seg) const { return seg == u ? du : dv; }
  int other(int seg) const { return seg == u ? v : u; }
};

inline std::vector<Crossing> compute_crossings(const Drawing& d) {
  std::vector<Crossing> out;
  const auto& segs = d.segments;
  // O(m^2) pairwise tests; desk-scale m keeps this well below the sweep-line
  // crossover and the orientation tests are robust on near-degenerate input.
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      const bool share_vertex =
          d.edges[i].first == d.edges[j].first || d.edges[i].first == d.edges[j].second ||
          d.edges[i].second == d.edges[j].first || d.edges[i].second == d.edges[j].second;
      auto hit = intersect_segments(segs[i], segs[j]);
      if (!hit) continue;
      const double li = segs[i].length(), lj = segs[j].length();
      const double di = hit->t * li, dj = hit->u * lj;
      const bool at_endpoint_i = di <= kTol * li || di >= li - kTol * li;
      const bool at_endpoint_j = dj <= kTol * lj || dj >= lj - kTol * lj;
      if (share_vertex && at_endpoint_i && at_endpoint_j) continue;
      if (at_endpoint_i || at_endpoint_j)
        throw GeometryError("endpoint-touching crossing between segments " +
                            std::to_string(segs[i].id) + " and " + std::to_string(segs[j].id));
      out.push_back({segs[i].id, segs[j].id, hit->point, di, dj});
    }
  }
  return out;
}

// Intersection graph C: one vertex per segment, one arc per crossing.
struct IntersectionGraph {
  struct Arc {
    int neighbor;
    int crossing;  // index into `crossings`
    double pos;    // position of the crossing along this vertex's segment
  };

  const Drawing* drawing = nullptr;
  std::vector<Crossing> crossings;
  std::vector<std::vector<Arc>> adj;           // per segment, sorted by pos
  std::vector<std::vector<double>> positions;  // per segment, sorted crossing positions
  int max_degree = 0;

  int size() const { return static_cast<int>(adj.size()); }
  int degree(int u) const { return static_cast<int>(adj[u].size()); }
  double seg_length(int u) const { return drawing->segments[u].length(); }

  int crossing_between(int u, int v) const {
    for (const auto& a : adj[u])
      if (a.neighbor == v) return a.crossing;
    return -1;
  }
};

inline IntersectionGraph build_graph(const Drawing& d) {
  IntersectionGraph g;
  g.drawing = &d;
  g.crossings = compute_crossings(d);
  g.adj.resize(d.segments.size());
  g.positions.resize(d.segments.size());
  for (size_t c = 0; c < g.crossings.size(); ++c) {
    const Crossing& x = g.crossings[c];
    g.adj[x.u].push_back({x.v, static_cast<int>(c), x.du});
    g.adj[x.v].push_back({x.u, static_cast<int>(c), x.dv});
  }
  for (size_t u = 0; u < g.adj.size(); ++u) {
    std::stable_sort(g.adj[u].begin(), g.adj[u].end(),
                     [](const auto& a, const auto& b) { return a.pos < b.pos; });
    for (const auto& a : g.adj[u]) g.positions[u].push_back(a.pos);
    g.max_degree = std::max(g.max_degree, static_cast<int>(g.adj[u].size()));
  }
  return g;
}

// A segment's finite candidate set, each choice annotated with the incident
// crossings it resolves (bit i of `resolved` = i-th arc in adj[u]).
struct AnnotatedChoice {
  Choice choice;
  uint64_t resolved = 0;
};

struct ChoiceSet {
  int vertex = -1;
  std::vector<AnnotatedChoice> choices;
};

inline uint64_t resolved_mask(const IntersectionGraph& g, int u, const Choice& c) {
  const double len = g.seg_length(u);
  uint64_t mask = 0;
  for (size_t i = 0; i < g.adj[u].size(); ++i)
    if (c.resolves(g.adj[u][i].pos, len)) mask |= uint64_t{1} << i;
  return mask;
}

// The delta_u + 1 symmetric candidates: the full segment plus one stub pair
// per incident crossing, sorted by ascending stub length.
inline ChoiceSet sped_choices(const IntersectionGraph& g, int u) {
  if (g.degree(u) > 63) throw GeometryError("segment degree exceeds choice-mask capacity");
  const double len = g.seg_length(u);
  ChoiceSet cs;
  cs.vertex = u;
  cs.choices.push_back({Choice::full(len), 0});
  std::vector<double> stubs;
  for (double pos : g.positions[u]) stubs.push_back(std::min(pos, len - pos));
  std::stable_sort(stubs.begin(), stubs.end());
  for (double l : stubs) {
    Choice c = Choice::stubs(len, l);
    cs.choices.push_back({c, resolved_mask(g, u, c)});
  }
  return cs;
}

// Gap candidates over the sorted distinct crossing positions: one closed
// interval per ordered position pair. Crossing-free segments get the single
// no-gap sentinel.
inline ChoiceSet ped_choices(const IntersectionGraph& g, int u) {
  if (g.degree(u) > 63) throw GeometryError("segment degree exceeds choice-mask capacity");
  const double len = g.seg_length(u);
  ChoiceSet cs;
  cs.vertex = u;
  if (g.degree(u) == 0) {
    cs.choices.push_back({Choice::no_gap(len), 0});
    return cs;
  }
  std::vector<double> pos;
  for (double p : g.positions[u]) {
    if (pos.empty() || p - pos.back() > kTol * len) pos.push_back(p);
  }
  for (size_t i = 0; i < pos.size(); ++i)
    for (size_t j = i; j < pos.size(); ++j) {
      Choice c = Choice::gap(len, pos[i], pos[j]);
      cs.choices.push_back({c, resolved_mask(g, u, c)});
    }
  return cs;
}

// True iff the crossing is erased by at least one of the two configurations.
inline bool choices_compatible(const IntersectionGraph& g, int u, const Choice& cu, int v,
                               const Choice& cv, const Crossing& x) {
  if (x.other(u) != v) throw GeometryError("crossing not incident to the given segments");
  return cu.resolves(x.pos_on(u), g.seg_length(u)) || cv.resolves(x.pos_on(v), g.seg_length(v));
}

enum class ComponentKind { Forest, General };

struct Component {
  std::vector<int> vertices;
  ComponentKind kind;
};

inline std::vector<Component> split_components(const IntersectionGraph& g) {
  std::vector<Component> out;
  std::vector<int> comp(g.size(), -1);
  for (int s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    Component c;
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size());
    size_t arcs = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      c.vertices.push_back(u);
      arcs += g.adj[u].size();
      for (const auto& a : g.adj[u])
        if (comp[a.neighbor] < 0) {
          comp[a.neighbor] = comp[u];
          stack.push_back(a.neighbor);
        }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.kind = (arcs / 2 == c.vertices.size() - 1) ? ComponentKind::Forest : ComponentKind::General;
    out.push_back(std::move(c));
  }
  return out;
}

// Debug dump of C for test fixtures.
inline std::string dump_graph(const IntersectionGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.size();
  j["max_degree"] = g.max_degree;
  j["adjacency"] = nlohmann::json::array();
  for (int u = 0; u < g.size(); ++u) {
    nlohmann::json ju = nlohmann::json::array();
    for (const auto& a : g.adj[u]) ju.push_back({{"neighbor", a.neighbor}, {"pos", a.pos}});
    j["adjacency"].push_back(std::move(ju));
  }
  return j.dump();
}

}  // namespace ped
