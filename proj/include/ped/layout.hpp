#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "ped/intersection_graph.hpp"

namespace ped {

enum class LayoutKind { Spring, Circular };

inline LayoutKind layout_from_string(const std::string& s) {
  if (s == "spring") return LayoutKind::Spring;
  if (s == "circle" || s == "circular") return LayoutKind::Circular;
  throw ParseError("unknown layout '" + s + "'");
}

struct LayoutSpec {
  int n = 40;
  int m = 45;
  LayoutKind layout = LayoutKind::Spring;
  int iterations = 100;  // spring only
  std::uint64_t seed = 1;
  int max_retries = 64;
};

// Uniform random simple graph with exactly m edges: shuffle the full pair
// list and keep a prefix. Fine at the n <= a-few-hundred scale used here.
inline std::vector<std::pair<int, int>> random_graph_gnm(int n, int m, std::uint64_t seed) {
  if (n < 0 || m < 0 || static_cast<long long>(m) > static_cast<long long>(n) * (n - 1) / 2)
    throw std::invalid_argument("need 0 <= m <= n(n-1)/2");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(m);
  return pairs;
}

// Vertices on a single circle in id order. Exposed for small fixtures; the
// benchmark-facing circular layout below is block-structured, because one
// giant circle turns any sparse graph into a dense chord diagram whose
// intersection graph is far beyond exact solving.
inline std::vector<Point> single_circle_layout(int n, double radius = 10.0) {
  std::vector<Point> pos(n);
  for (int i = 0; i < n; ++i) {
    const double ang = 2.0 * std::numbers::pi * i / std::max(n, 1);
    pos[i] = {radius * std::cos(ang), radius * std::sin(ang)};
  }
  return pos;
}

namespace detail {

// Biconnected components (bridges count as 2-vertex blocks), iterative
// Hopcroft-Tarjan.
inline std::vector<std::vector<int>> biconnected_blocks(int n,
                                                        const std::vector<std::vector<int>>& adj) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;
  struct Frame {
    int v, parent;
    size_t next = 0;
  };
  for (int s = 0; s < n; ++s) {
    if (num[s] >= 0) continue;
    std::vector<Frame> stack{{s, -1}};
    num[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        const int w = adj[f.v][f.next++];
        if (num[w] < 0) {
          edge_stack.emplace_back(f.v, w);
          num[w] = low[w] = timer++;
          stack.push_back({w, f.v});
        } else if (w != f.parent && num[w] < num[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        const int v = f.v, p = f.parent;
        stack.pop_back();
        if (p < 0) continue;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= num[p]) {
          // p is a cut vertex (or the root); pop the block below the edge (p,v).
          std::vector<int> verts;
          const auto seen = [&](int x) {
            return std::find(verts.begin(), verts.end(), x) != verts.end();
          };
          while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            if (num[a] < num[v] && a != p) break;
            edge_stack.pop_back();
            if (!seen(a)) verts.push_back(a);
            if (!seen(b)) verts.push_back(b);
            if (a == p && b == v) break;
          }
          std::sort(verts.begin(), verts.end());
          blocks.push_back(std::move(verts));
        }
      }
    }
  }
  return blocks;
}

}  // namespace detail

// Block-structured circular layout: each biconnected block sits on its own
// circle, blocks chained through their cut vertices over the block-cut tree.
// This mirrors the circular layouts used in practice (graphviz circo) and
// keeps sparse graphs sparse in crossings; a single shared circle would not.
inline std::vector<Point> circular_layout(int n, const std::vector<std::pair<int, int>>& edges,
                                          double spacing = 3.0) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  auto blocks = detail::biconnected_blocks(n, adj);
  // blocks_of[v]: blocks containing v, in discovery order.
  std::vector<std::vector<int>> blocks_of(n);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b]) blocks_of[v].push_back(static_cast<int>(b));

  std::vector<Point> pos(n);
  std::vector<bool> placed(n, false);
  std::vector<bool> block_done(blocks.size(), false);
  const auto radius = [&](int b) {
    const int sz = static_cast<int>(blocks[b].size());
    return spacing / (2.0 * std::sin(std::numbers::pi / std::max(sz, 2)));
  };

  // Lays out block b so that `entry` (already placed) lies on its circle in
  // direction `dir` from the circle's center; recurses into sibling blocks.
  auto place = [&](auto&& self, int b, int entry, Point dir) -> void {
    block_done[b] = true;
    const double r = radius(b);
    const int sz = static_cast<int>(blocks[b].size());
    const Point center = pos[entry] + r * dir;
    const double theta0 = std::atan2(pos[entry].y - center.y, pos[entry].x - center.x);
    // Order the block's vertices around its circle along a DFS of its induced
    // subgraph, so cycle edges become polygon sides instead of long chords.
    std::vector<int> order;
    {
      std::vector<bool> in_block(adj.size(), false), seen(adj.size(), false);
      for (int v : blocks[b]) in_block[v] = true;
      std::vector<int> st{entry};
      seen[entry] = true;
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        order.push_back(v);
        for (int w : adj[v])
          if (in_block[w] && !seen[w]) {
            seen[w] = true;
            st.push_back(w);
          }
      }
    }
    for (int slot = 1; slot < sz; ++slot) {
      const int v = order[slot];
      const double ang = theta0 + 2.0 * std::numbers::pi * slot / sz;
      if (!placed[v]) {
        pos[v] = center + Point{r * std::cos(ang), r * std::sin(ang)};
        placed[v] = true;
      }
    }
    for (int v : blocks[b]) {
      std::vector<int> pending;
      for (int nb : blocks_of[v])
        if (!block_done[nb]) pending.push_back(nb);
      const Point out = pos[v] - center;
      const double base = std::atan2(out.y, out.x);
      for (size_t j = 0; j < pending.size(); ++j) {
        const double fan =
            base + (static_cast<double>(j) - (pending.size() - 1) / 2.0) * std::numbers::pi / 3.0;
        self(self, pending[j], v, Point{std::cos(fan), std::sin(fan)});
      }
    }
  };

  double x_off = 0.0;
  for (int v = 0; v < n; ++v) {
    if (placed[v]) continue;
    pos[v] = {x_off, 0.0};
    placed[v] = true;
    if (!blocks_of[v].empty()) place(place, blocks_of[v].front(), v, {1.0, 0.0});
    // Advance past this component's worst-case extent before starting the next.
    x_off += spacing * (2.0 + 2.0 * static_cast<double>(n));
  }
  return pos;
}

// Fruchterman-Reingold force-directed layout: optimal distance sqrt(area/n),
// linear cooling, fixed iteration count, positions clamped to the frame.
inline std::vector<Point> spring_layout(int n, const std::vector<std::pair<int, int>>& edges,
                                        int iterations, std::uint64_t seed) {
  const double L = 10.0 * std::sqrt(static_cast<double>(std::max(n, 1)));
  const double k = std::sqrt(L * L / std::max(n, 1));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, L);
  std::vector<Point> pos(n);
  for (auto& p : pos) p = {unif(rng), unif(rng)};
  std::vector<Point> disp(n);
  for (int it = 0; it < iterations; ++it) {
    const double temp = 0.1 * L * (1.0 - static_cast<double>(it) / std::max(iterations, 1));
    for (auto& d : disp) d = {0, 0};
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Point delta = pos[i] - pos[j];
        double dlen = std::max(norm(delta), 1e-9);
        Point f = (k * k / (dlen * dlen)) * delta;  // repulsive, k^2/d along delta/d
        disp[i] = disp[i] + f;
        disp[j] = disp[j] - f;
      }
    for (auto [u, v] : edges) {
      Point delta = pos[u] - pos[v];
      double dlen = std::max(norm(delta), 1e-9);
      Point f = (dlen / k) * delta;  // attractive, d^2/k along delta/d
      disp[u] = disp[u] - f;
      disp[v] = disp[v] + f;
    }
    for (int i = 0; i < n; ++i) {
      double dlen = std::max(norm(disp[i]), 1e-9);
      pos[i] = pos[i] + (std::min(dlen, temp) / dlen) * disp[i];
      pos[i].x = std::clamp(pos[i].x, 0.0, L);
      pos[i].y = std::clamp(pos[i].y, 0.0, L);
    }
  }
  return pos;
}

// Seed-deterministic random drawing. Degenerate layouts (coincident adjacent
// vertices, collinear overlaps, endpoint-touching crossings) are retried with
// a documented jitter: on retry t, every vertex moves by an independent
// uniform offset in [-t, t] * 1e-3 * frame size.
inline Drawing random_instance(const LayoutSpec& spec) {
  auto edges = random_graph_gnm(spec.n, spec.m, spec.seed);
  std::vector<Point> base = spec.layout == LayoutKind::Spring
                                ? spring_layout(spec.n, edges, spec.iterations, spec.seed)
                                : circular_layout(spec.n, edges);
  double frame = 1.0;
  for (const auto& p : base) frame = std::max({frame, std::abs(p.x), std::abs(p.y)});
  for (int attempt = 0; attempt <= spec.max_retries; ++attempt) {
    Drawing d;
    std::mt19937_64 rng(spec.seed * 1000003ULL + attempt);
    std::uniform_real_distribution<double> jit(-1.0, 1.0);
    const double amp = 1e-3 * frame * attempt;
    for (int i = 0; i < spec.n; ++i) {
      Point p = base[i];
      if (attempt > 0) p = p + Point{amp * jit(rng), amp * jit(rng)};
      d.vertices.push_back({i, p});
    }
    d.edges = edges;
    try {
      d.check();
      d.rebuild_segments();
      build_graph(d);  // degeneracy probe
      return d;
    } catch (const GeometryError&) {
    } catch (const ParseError&) {
    }
  }
  throw std::runtime_error("random_instance: retry limit exceeded (degenerate layout)");
}

}  // namespace ped
