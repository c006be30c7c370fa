#pragma once

#include <limits>
#include <vector>

#include "ped/intersection_graph.hpp"

namespace ped {

struct ComponentSolve {
  double ink = 0.0;
  std::vector<std::pair<int, Choice>> choices;  // (segment id, chosen configuration)
};

namespace detail {

struct TreeDp {
  std::vector<int> parent;        // -1 for roots
  std::vector<int> parent_arc;    // index of the parent in adj[u]
  std::vector<int> order;         // DFS preorder, parents before children
  std::vector<std::vector<double>> tables;  // W per vertex, indexed by choice
  std::vector<double> short_v, long_v;
};

inline void tree_dfs(const IntersectionGraph& g, const Component& comp, TreeDp& dp) {
  const int n = g.size();
  dp.parent.assign(n, -2);
  dp.parent_arc.assign(n, -1);
  for (int root : comp.vertices) {
    if (dp.parent[root] != -2) continue;
    dp.parent[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      dp.order.push_back(u);
      for (size_t i = 0; i < g.adj[u].size(); ++i) {
        int v = g.adj[u][i].neighbor;
        if (dp.parent[v] != -2) continue;
        dp.parent[v] = u;
        for (size_t j = 0; j < g.adj[v].size(); ++j)
          if (g.adj[v][j].neighbor == u) dp.parent_arc[v] = static_cast<int>(j);
        stack.push_back(v);
      }
    }
  }
}

// Naive table evaluation: every choice summed over all children.
inline void tree_tables_naive(const IntersectionGraph& g, const std::vector<ChoiceSet>& sets,
                              TreeDp& dp) {
  for (auto it = dp.order.rbegin(); it != dp.order.rend(); ++it) {
    const int u = *it;
    const auto& cs = sets[u].choices;
    auto& W = dp.tables[u];
    W.assign(cs.size(), 0.0);
    for (size_t c = 0; c < cs.size(); ++c) {
      double w = cs[c].choice.ink;
      for (size_t i = 0; i < g.adj[u].size(); ++i) {
        const int v = g.adj[u][i].neighbor;
        if (v == dp.parent[u]) continue;
        const bool covers = cs[c].resolved >> i & 1;
        w += covers ? dp.long_v[v] : dp.short_v[v];
      }
      W[c] = w;
    }
    dp.long_v[u] = *std::max_element(W.begin(), W.end());
    dp.short_v[u] = -std::numeric_limits<double>::infinity();
    if (dp.parent[u] >= 0)
      for (size_t c = 0; c < cs.size(); ++c)
        if (cs[c].resolved >> dp.parent_arc[u] & 1) dp.short_v[u] = std::max(dp.short_v[u], W[c]);
  }
}

// O(k) per vertex for the symmetric candidate order: W for the shortest stub
// counts every child at long(v); each later entry swaps in short(v) for the
// children whose crossings fall off the resolved set.
inline void tree_tables_incremental(const IntersectionGraph& g, const std::vector<ChoiceSet>& sets,
                                    TreeDp& dp) {
  for (auto it = dp.order.rbegin(); it != dp.order.rend(); ++it) {
    const int u = *it;
    const auto& cs = sets[u].choices;
    auto& W = dp.tables[u];
    W.assign(cs.size(), 0.0);
    double short_sum = 0.0;
    for (size_t i = 0; i < g.adj[u].size(); ++i) {
      const int v = g.adj[u][i].neighbor;
      if (v != dp.parent[u]) short_sum += dp.short_v[v];
    }
    W[0] = cs[0].choice.ink + short_sum;  // the full segment resolves nothing
    if (cs.size() > 1) {
      double w = cs[1].choice.ink;
      for (size_t i = 0; i < g.adj[u].size(); ++i) {
        const int v = g.adj[u][i].neighbor;
        if (v != dp.parent[u]) w += dp.long_v[v];
      }
      W[1] = w;
      for (size_t c = 2; c < cs.size(); ++c) {
        w += cs[c].choice.ink - cs[c - 1].choice.ink;
        const uint64_t dropped = cs[c - 1].resolved & ~cs[c].resolved;
        for (size_t i = 0; i < g.adj[u].size(); ++i) {
          if (!(dropped >> i & 1)) continue;
          const int v = g.adj[u][i].neighbor;
          if (v == dp.parent[u]) continue;
          w += dp.short_v[v] - dp.long_v[v];
        }
        W[c] = w;
      }
    }
    dp.long_v[u] = *std::max_element(W.begin(), W.end());
    dp.short_v[u] = -std::numeric_limits<double>::infinity();
    if (dp.parent[u] >= 0)
      for (size_t c = 0; c < cs.size(); ++c)
        if (cs[c].resolved >> dp.parent_arc[u] & 1) dp.short_v[u] = std::max(dp.short_v[u], W[c]);
  }
}

inline TreeDp tree_dp_tables(const IntersectionGraph& g, const Component& comp,
                             const std::vector<ChoiceSet>& sets, bool incremental) {
  TreeDp dp;
  dp.tables.resize(g.size());
  dp.short_v.assign(g.size(), 0.0);
  dp.long_v.assign(g.size(), 0.0);
  tree_dfs(g, comp, dp);
  if (incremental)
    tree_tables_incremental(g, sets, dp);
  else
    tree_tables_naive(g, sets, dp);
  return dp;
}

}  // namespace detail

// Exact maximum-ink solve on a forest component via the bottom-up recurrence.
// `mode` selects symmetric stub pairs (SPED) or gap candidates (PED); the PED
// case always evaluates tables naively since its candidates carry no useful
// order.
inline ComponentSolve solve_tree(const IntersectionGraph& g, const Component& comp, Mode mode,
                                 bool incremental = true) {
  if (comp.kind != ComponentKind::Forest)
    throw std::invalid_argument("tree solver requires a forest component");
  std::vector<ChoiceSet> sets(g.size());
  for (int u : comp.vertices) sets[u] = mode == Mode::SPED ? sped_choices(g, u) : ped_choices(g, u);
  auto dp = detail::tree_dp_tables(g, comp, sets, incremental && mode == Mode::SPED);

  ComponentSolve out;
  // Backtrack top-down; ties break toward the smallest choice index.
  std::vector<int> chosen(g.size(), -1);
  for (int u : dp.order) {
    const auto& cs = sets[u].choices;
    const auto& W = dp.tables[u];
    const int p = dp.parent[u];
    int best = -1;
    bool must_resolve_parent = false;
    if (p >= 0) {
      // If the parent's chosen configuration leaves the shared crossing
      // uncovered, u is restricted to its short candidates.
      int arc_in_parent = -1;
      for (size_t i = 0; i < g.adj[p].size(); ++i)
        if (g.adj[p][i].neighbor == u) arc_in_parent = static_cast<int>(i);
      must_resolve_parent = !(sets[p].choices[chosen[p]].resolved >> arc_in_parent & 1);
    }
    for (size_t c = 0; c < cs.size(); ++c) {
      if (must_resolve_parent && !(cs[c].resolved >> dp.parent_arc[u] & 1)) continue;
      if (best < 0 || W[c] > W[best]) best = static_cast<int>(c);
    }
    chosen[u] = best;
    out.choices.emplace_back(u, cs[best].choice);
  }
  for (int u : comp.vertices)
    if (dp.parent[u] < 0) out.ink += dp.long_v[u];
  return out;
}

}  // namespace ped
