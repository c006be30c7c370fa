#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ped/intersection_graph.hpp"

namespace ped {

// Plain undirected graph over vertices 0..n-1, the decomposition input.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  static SimpleGraph from(int n, std::vector<std::pair<int, int>> es) {
    SimpleGraph g;
    g.n = n;
    g.edges = std::move(es);
    g.adj.resize(n);
    for (auto [u, v] : g.edges) {
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
    return g;
  }
};

// Restriction of an intersection graph to one component, with the mapping
// back to segment ids.
struct ComponentGraph {
  SimpleGraph graph;
  std::vector<int> to_segment;  // local vertex -> segment id

  static ComponentGraph from(const IntersectionGraph& ig, const Component& comp) {
    ComponentGraph cg;
    cg.to_segment = comp.vertices;
    std::vector<int> local(ig.size(), -1);
    for (size_t i = 0; i < comp.vertices.size(); ++i) local[comp.vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int u : comp.vertices)
      for (const auto& a : ig.adj[u])
        if (u < a.neighbor) es.emplace_back(local[u], local[a.neighbor]);
    cg.graph = SimpleGraph::from(static_cast<int>(comp.vertices.size()), std::move(es));
    return cg;
  }
};

struct TreeDecomposition {
  struct Node {
    int parent = -1;
    std::vector<int> bag;  // sorted vertex ids
  };
  std::vector<Node> nodes;

  int width() const {
    int w = 0;
    for (const auto& t : nodes) w = std::max(w, static_cast<int>(t.bag.size()) - 1);
    return w;
  }
};

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceTreeDecomposition {
  struct Node {
    NiceKind kind;
    int vertex = -1;  // introduced/forgotten vertex
    std::vector<int> bag;
    int child1 = -1, child2 = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  int width() const {
    int w = 0;
    for (const auto& t : nodes) w = std::max(w, static_cast<int>(t.bag.size()) - 1);
    return w;
  }

  // Children-before-parents order for bottom-up DP.
  std::vector<int> postorder() const {
    std::vector<int> out, stack{root};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      out.push_back(t);
      if (nodes[t].child1 >= 0) stack.push_back(nodes[t].child1);
      if (nodes[t].child2 >= 0) stack.push_back(nodes[t].child2);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
};

namespace detail {

// Bags and tree from an elimination order: eliminating v yields the bag
// {v} + its not-yet-eliminated neighbors, which are clique-ified.
inline TreeDecomposition td_from_elimination(const SimpleGraph& g, const std::vector<int>& order) {
  const int n = g.n;
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  TreeDecomposition td;
  td.nodes.resize(n);
  std::vector<std::vector<int>> bag_neighbors(n);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    td.nodes[i].bag = nb;
    td.nodes[i].bag.push_back(v);
    std::sort(td.nodes[i].bag.begin(), td.nodes[i].bag.end());
    for (int a : nb) adj[a].erase(v);
    for (size_t x = 0; x < nb.size(); ++x)
      for (size_t y = x + 1; y < nb.size(); ++y) {
        adj[nb[x]].insert(nb[y]);
        adj[nb[y]].insert(nb[x]);
      }
    bag_neighbors[i] = std::move(nb);
  }
  for (int i = 0; i < n; ++i) {
    int p = -1;
    for (int w : bag_neighbors[i]) p = p < 0 ? pos[w] : std::min(p, pos[w]);
    // Isolated-at-elimination vertices chain onto the next bag.
    td.nodes[i].parent = p >= 0 ? p : (i + 1 < n ? i + 1 : -1);
  }
  return td;
}

inline std::vector<int> min_fill_order(const SimpleGraph& g) {
  const int n = g.n;
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> gone(n, false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = std::numeric_limits<long>::max();
    size_t best_deg = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      std::vector<int> nb(adj[v].begin(), adj[v].end());
      for (size_t x = 0; x < nb.size(); ++x)
        for (size_t y = x + 1; y < nb.size(); ++y)
          if (!adj[nb[x]].count(nb[y])) ++fill;
      if (best < 0 || fill < best_fill || (fill == best_fill && nb.size() < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = nb.size();
      }
    }
    order.push_back(best);
    gone[best] = true;
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    for (int a : nb) adj[a].erase(best);
    for (size_t x = 0; x < nb.size(); ++x)
      for (size_t y = x + 1; y < nb.size(); ++y) {
        adj[nb[x]].insert(nb[y]);
        adj[nb[y]].insert(nb[x]);
      }
    adj[best].clear();
  }
  return order;
}

// Exact elimination-order DP over vertex subsets (feasible up to ~20, used
// for components of at most 12 vertices).
inline std::vector<int> exact_order(const SimpleGraph& g) {
  const int n = g.n;
  const int full = (1 << n) - 1;
  // q[S][v]: neighbors of v outside S reachable through S.
  const auto q_degree = [&](int S, int v) {
    int seen = 1 << v;
    std::vector<int> stack{v};
    int deg = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj[u]) {
        if (seen >> w & 1) continue;
        seen |= 1 << w;
        if (S >> w & 1)
          stack.push_back(w);
        else
          ++deg;
      }
    }
    return deg;
  };
  std::vector<int> f(full + 1, 0), pick(full + 1, -1);
  for (int S = 1; S <= full; ++S) {
    int best = std::numeric_limits<int>::max();
    int who = -1;
    for (int v = 0; v < n; ++v) {
      if (!(S >> v & 1)) continue;
      const int rest = S & ~(1 << v);
      const int cand = std::max(f[rest], q_degree(rest, v));
      if (cand < best) {
        best = cand;
        who = v;
      }
    }
    f[S] = best;
    pick[S] = who;
  }
  std::vector<int> order(n);
  int S = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = pick[S];
    S &= ~(1 << pick[S]);
  }
  return order;
}

}  // namespace detail

inline constexpr int kExactWidthLimit = 12;

// Tree decomposition via min-fill elimination; components of at most
// kExactWidthLimit vertices take the better of the heuristic and an exact
// subset-DP order.
inline TreeDecomposition decompose(const SimpleGraph& g) {
  if (g.n == 0) return {};
  auto order = detail::min_fill_order(g);
  TreeDecomposition td = detail::td_from_elimination(g, order);
  if (g.n <= kExactWidthLimit) {
    TreeDecomposition exact = detail::td_from_elimination(g, detail::exact_order(g));
    if (exact.width() < td.width()) td = std::move(exact);
  }
  return td;
}

struct TdValidity {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

inline TdValidity validate_td(const SimpleGraph& g, const TreeDecomposition& td) {
  TdValidity r;
  const int nn = static_cast<int>(td.nodes.size());
  std::vector<std::vector<int>> occ(g.n);
  for (int t = 0; t < nn; ++t)
    for (int v : td.nodes[t].bag) {
      if (v < 0 || v >= g.n) {
        r.violations.push_back("bag " + std::to_string(t) + " contains unknown vertex " +
                               std::to_string(v));
        continue;
      }
      occ[v].push_back(t);
    }
  for (int v = 0; v < g.n; ++v)
    if (occ[v].empty())
      r.violations.push_back("vertex-cover violation " + std::to_string(v));
  for (auto [u, v] : g.edges) {
    bool covered = false;
    for (int t : occ[u])
      if (std::find(td.nodes[t].bag.begin(), td.nodes[t].bag.end(), v) != td.nodes[t].bag.end())
        covered = true;
    if (!covered)
      r.violations.push_back("edge-cover violation (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
  }
  // Connectivity: the nodes holding v must induce a connected subtree.
  for (int v = 0; v < g.n; ++v) {
    if (occ[v].size() <= 1) continue;
    std::set<int> members(occ[v].begin(), occ[v].end());
    std::set<int> reached{*members.begin()};
    std::vector<int> stack{*members.begin()};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      std::vector<int> nbrs;
      if (td.nodes[t].parent >= 0) nbrs.push_back(td.nodes[t].parent);
      for (int s = 0; s < nn; ++s)
        if (td.nodes[s].parent == t) nbrs.push_back(s);
      for (int s : nbrs)
        if (members.count(s) && !reached.count(s)) {
          reached.insert(s);
          stack.push_back(s);
        }
    }
    if (reached.size() != members.size())
      r.violations.push_back("connectivity violation " + std::to_string(v));
  }
  return r;
}

// Nice-form transform: binarized joins, introduce/forget chains between
// differing bags, single-vertex leaves, and a forget chain up to an empty
// root bag.
inline NiceTreeDecomposition make_nice(const SimpleGraph& g, const TreeDecomposition& td) {
  if (!validate_td(g, td).valid()) throw std::invalid_argument("make_nice: invalid decomposition");
  NiceTreeDecomposition nice;
  const auto add = [&](NiceKind k, int v, std::vector<int> bag, int c1, int c2) {
    nice.nodes.push_back({k, v, std::move(bag), c1, c2});
    return static_cast<int>(nice.nodes.size()) - 1;
  };

  const int nn = static_cast<int>(td.nodes.size());
  std::vector<std::vector<int>> children(nn);
  int td_root = 0;
  for (int t = 0; t < nn; ++t) {
    if (td.nodes[t].parent >= 0)
      children[td.nodes[t].parent].push_back(t);
    else
      td_root = t;
  }

  // Builds a chain on top of `below` transforming bag `from` into `to`.
  const auto chain_to = [&](int below, std::vector<int> from, const std::vector<int>& to) {
    int cur = below;
    for (int v : std::vector<int>(from)) {
      if (std::find(to.begin(), to.end(), v) == to.end()) {
        std::erase(from, v);
        cur = add(NiceKind::Forget, v, from, cur, -1);
      }
    }
    for (int v : to) {
      if (std::find(from.begin(), from.end(), v) == from.end()) {
        from.push_back(v);
        std::sort(from.begin(), from.end());
        cur = add(NiceKind::Introduce, v, from, cur, -1);
      }
    }
    return cur;
  };

  // Returns the nice node whose bag equals X_t, covering t's whole subtree.
  auto build = [&](auto&& self, int t) -> int {
    const auto& bag = td.nodes[t].bag;
    std::vector<int> parts;
    for (int c : children[t]) {
      int sub = self(self, c);
      parts.push_back(chain_to(sub, td.nodes[c].bag, bag));
    }
    if (parts.empty()) {
      // Leaf expansion: single-vertex leaf plus introduces.
      int cur = add(NiceKind::Leaf, bag.front(), {bag.front()}, -1, -1);
      std::vector<int> have{bag.front()};
      for (size_t i = 1; i < bag.size(); ++i) {
        have.push_back(bag[i]);
        cur = add(NiceKind::Introduce, bag[i], have, cur, -1);
      }
      return cur;
    }
    int cur = parts[0];
    for (size_t i = 1; i < parts.size(); ++i)
      cur = add(NiceKind::Join, -1, bag, cur, parts[i]);
    return cur;
  };

  int top = build(build, td_root);
  nice.root = chain_to(top, td.nodes[td_root].bag, {});
  if (nice.nodes[nice.root].bag.empty() && td.nodes[td_root].bag.empty()) {
    // Degenerate empty decomposition: nothing to do.
  }
  return nice;
}

inline TdValidity validate_nice(const SimpleGraph& g, const NiceTreeDecomposition& nice) {
  TdValidity r;
  // Structural axioms of the nice form.
  if (nice.root < 0 || !nice.nodes[nice.root].bag.empty())
    r.violations.push_back("root bag not empty");
  for (size_t t = 0; t < nice.nodes.size(); ++t) {
    const auto& nd = nice.nodes[t];
    const auto bag_of = [&](int c) { return nice.nodes[c].bag; };
    switch (nd.kind) {
      case NiceKind::Leaf:
        if (nd.bag.size() != 1) r.violations.push_back("leaf bag size != 1 at " + std::to_string(t));
        break;
      case NiceKind::Introduce: {
        auto b = bag_of(nd.child1);
        b.push_back(nd.vertex);
        std::sort(b.begin(), b.end());
        if (b != nd.bag) r.violations.push_back("introduce mismatch at " + std::to_string(t));
        break;
      }
      case NiceKind::Forget: {
        auto b = bag_of(nd.child1);
        std::erase(b, nd.vertex);
        if (b != nd.bag) r.violations.push_back("forget mismatch at " + std::to_string(t));
        break;
      }
      case NiceKind::Join:
        if (bag_of(nd.child1) != nd.bag || bag_of(nd.child2) != nd.bag)
          r.violations.push_back("join mismatch at " + std::to_string(t));
        break;
    }
  }
  // Reuse the plain validator for the decomposition axioms.
  TreeDecomposition td;
  td.nodes.resize(nice.nodes.size());
  for (size_t t = 0; t < nice.nodes.size(); ++t) {
    td.nodes[t].bag = nice.nodes[t].bag;
    if (nice.nodes[t].child1 >= 0) td.nodes[nice.nodes[t].child1].parent = static_cast<int>(t);
    if (nice.nodes[t].child2 >= 0) td.nodes[nice.nodes[t].child2].parent = static_cast<int>(t);
  }
  // The empty root bag never covers a vertex, which is fine; vertex cover is
  // checked over all bags.
  auto base = validate_td(g, td);
  r.violations.insert(r.violations.end(), base.violations.begin(), base.violations.end());
  return r;
}

inline std::string dump_td(const NiceTreeDecomposition& nice) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& nd : nice.nodes) {
    const char* k = nd.kind == NiceKind::Leaf        ? "leaf"
                    : nd.kind == NiceKind::Introduce ? "introduce"
                    : nd.kind == NiceKind::Forget    ? "forget"
                                                     : "join";
    j.push_back({{"kind", k}, {"vertex", nd.vertex}, {"bag", nd.bag}});
  }
  return j.dump();
}

}  // namespace ped
