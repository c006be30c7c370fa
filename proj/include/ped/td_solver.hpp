#pragma once

#include <chrono>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ped/tree_solver.hpp"
#include "ped/treedecomp.hpp"

namespace ped {

class MemoryBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TimeoutExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TdOptions {
  long long max_entries = 50'000'000;  // total table entries kept alive
  long long timeout_ms = 0;            // 0 = unlimited
};

struct TdStats {
  int width = -1;
  long long peak_entries = 0;
  double decomp_ms = 0.0;
};

namespace detail {

using TdKey = std::vector<uint16_t>;  // per-bag-vertex choice indices

struct TdKeyHash {
  size_t operator()(const TdKey& k) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t v : k) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using TdTable = std::unordered_map<TdKey, double, TdKeyHash>;

}  // namespace detail

// Exact maximum-ink solve of one component via dynamic programming over a
// nice tree decomposition of its intersection graph. Table entries cover only
// valid partial assignments; crossings are checked when their later endpoint
// is introduced into a bag holding the other.
inline ComponentSolve solve_td(const IntersectionGraph& g, const Component& comp, Mode mode,
                               const TdOptions& opt = {}, TdStats* stats = nullptr) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  const auto deadline = started + std::chrono::milliseconds(opt.timeout_ms);
  const auto check_time = [&] {
    if (opt.timeout_ms > 0 && Clock::now() > deadline)
      throw TimeoutExceeded("decomposition solve exceeded " + std::to_string(opt.timeout_ms) +
                            " ms");
  };

  ComponentGraph cg = ComponentGraph::from(g, comp);
  const int n = cg.graph.n;
  std::vector<ChoiceSet> sets(n);
  for (int u = 0; u < n; ++u) {
    const int seg = cg.to_segment[u];
    sets[u] = mode == Mode::SPED ? sped_choices(g, seg) : ped_choices(g, seg);
  }
  // arc_idx[u][v]: index of segment(v) in adj[segment(u)], -1 without a crossing.
  std::vector<int> seg_to_local(g.size(), -1);
  for (int u = 0; u < n; ++u) seg_to_local[cg.to_segment[u]] = u;
  std::vector<std::vector<int>> arc_idx(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u) {
    const auto& arcs = g.adj[cg.to_segment[u]];
    for (size_t i = 0; i < arcs.size(); ++i)
      arc_idx[u][seg_to_local[arcs[i].neighbor]] = static_cast<int>(i);
  }
  const auto compatible = [&](int u, int cu, int v, int cv) {
    return (sets[u].choices[cu].resolved >> arc_idx[u][v] & 1) ||
           (sets[v].choices[cv].resolved >> arc_idx[v][u] & 1);
  };

  const auto t0 = Clock::now();
  TreeDecomposition td = decompose(cg.graph);
  NiceTreeDecomposition nice = make_nice(cg.graph, td);
  if (stats) {
    stats->width = td.width();
    stats->decomp_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }

  const auto order = nice.postorder();
  std::vector<detail::TdTable> tables(nice.nodes.size());
  long long live_entries = 0;
  const auto account = [&](size_t added) {
    live_entries += static_cast<long long>(added);
    if (stats) stats->peak_entries = std::max(stats->peak_entries, live_entries);
    if (live_entries > opt.max_entries)
      throw MemoryBudgetExceeded("decomposition table budget exceeded (" +
                                 std::to_string(opt.max_entries) + " entries)");
  };

  const auto bag_pos = [](const std::vector<int>& bag, int v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  };

  for (int t : order) {
    check_time();
    const auto& nd = nice.nodes[t];
    auto& tab = tables[t];
    // Guard inside the per-node loops too: one introduce node can overshoot
    // the whole budget before it finishes.
    long long guard_tick = 0;
    const auto guard = [&] {
      if (live_entries + static_cast<long long>(tab.size()) > opt.max_entries)
        throw MemoryBudgetExceeded("decomposition table budget exceeded (" +
                                   std::to_string(opt.max_entries) + " entries)");
      if ((++guard_tick & 0xffff) == 0) check_time();
    };
    switch (nd.kind) {
      case NiceKind::Leaf: {
        const int v = nd.vertex;
        for (size_t c = 0; c < sets[v].choices.size(); ++c)
          tab[{static_cast<uint16_t>(c)}] = sets[v].choices[c].choice.ink;
        break;
      }
      case NiceKind::Introduce: {
        const int v = nd.vertex;
        const int pv = bag_pos(nd.bag, v);
        const auto& cbag = nice.nodes[nd.child1].bag;
        for (const auto& [key, val] : tables[nd.child1]) {
          for (size_t c = 0; c < sets[v].choices.size(); ++c) {
            bool ok = true;
            for (size_t i = 0; i < cbag.size() && ok; ++i)
              if (arc_idx[v][cbag[i]] >= 0)
                ok = compatible(v, static_cast<int>(c), cbag[i], key[i]);
            if (!ok) continue;
            detail::TdKey nk = key;
            nk.insert(nk.begin() + pv, static_cast<uint16_t>(c));
            tab[std::move(nk)] = val + sets[v].choices[c].choice.ink;
            guard();
          }
        }
        break;
      }
      case NiceKind::Forget: {
        const int pv = bag_pos(nice.nodes[nd.child1].bag, nd.vertex);
        for (const auto& [key, val] : tables[nd.child1]) {
          detail::TdKey nk = key;
          nk.erase(nk.begin() + pv);
          auto it = tab.find(nk);
          if (it == tab.end()) {
            tab.emplace(std::move(nk), val);
            guard();
          } else if (val > it->second) {
            it->second = val;
          }
        }
        break;
      }
      case NiceKind::Join: {
        const auto& t1 = tables[nd.child1];
        const auto& t2 = tables[nd.child2];
        const auto& small = t1.size() <= t2.size() ? t1 : t2;
        const auto& large = t1.size() <= t2.size() ? t2 : t1;
        for (const auto& [key, val] : small) {
          auto it = large.find(key);
          if (it == large.end()) continue;
          double bag_ink = 0.0;
          for (size_t i = 0; i < nd.bag.size(); ++i)
            bag_ink += sets[nd.bag[i]].choices[key[i]].choice.ink;
          tab[key] = val + it->second - bag_ink;
          guard();
        }
        break;
      }
    }
    account(tab.size());
  }

  const auto& root_tab = tables[nice.root];
  auto root_it = root_tab.find(detail::TdKey{});
  if (root_it == root_tab.end())
    throw std::logic_error("no valid assignment in decomposition DP (internal error)");

  // Top-down backtracking: every vertex is forgotten exactly once, so each
  // forget node fixes its vertex's choice by matching the retained child table.
  std::vector<int> chosen(n, -1);
  std::vector<std::pair<int, detail::TdKey>> stack{{nice.root, {}}};
  while (!stack.empty()) {
    auto [t, key] = std::move(stack.back());
    stack.pop_back();
    const auto& nd = nice.nodes[t];
    switch (nd.kind) {
      case NiceKind::Leaf:
        break;
      case NiceKind::Introduce: {
        detail::TdKey nk = key;
        nk.erase(nk.begin() + bag_pos(nd.bag, nd.vertex));
        stack.emplace_back(nd.child1, std::move(nk));
        break;
      }
      case NiceKind::Forget: {
        const double target = tables[t].at(key);
        const int pv = bag_pos(nice.nodes[nd.child1].bag, nd.vertex);
        int best = -1;
        detail::TdKey best_key;
        for (size_t c = 0; c < sets[nd.vertex].choices.size() && best < 0; ++c) {
          detail::TdKey nk = key;
          nk.insert(nk.begin() + pv, static_cast<uint16_t>(c));
          auto it = tables[nd.child1].find(nk);
          if (it != tables[nd.child1].end() && it->second == target) {
            best = static_cast<int>(c);
            best_key = std::move(nk);
          }
        }
        if (best < 0) throw std::logic_error("backtracking mismatch (internal error)");
        chosen[nd.vertex] = best;
        stack.emplace_back(nd.child1, std::move(best_key));
        break;
      }
      case NiceKind::Join:
        stack.emplace_back(nd.child1, key);
        stack.emplace_back(nd.child2, std::move(key));
        break;
    }
  }

  ComponentSolve out;
  out.ink = root_it->second;
  for (int u = 0; u < n; ++u) {
    if (chosen[u] < 0) throw std::logic_error("vertex never forgotten (internal error)");
    out.choices.emplace_back(cg.to_segment[u], sets[u].choices[chosen[u]].choice);
  }
  return out;
}

}  // namespace ped
