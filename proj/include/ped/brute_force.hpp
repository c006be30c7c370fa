#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ped/intersection_graph.hpp"
#include "ped/validate.hpp"

namespace ped {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  double optimal_ink = 0.0;
  long long optimum_count = 0;
  Solution witness;
  long long enumerated = 0;
};

namespace detail {

inline bool same_choice(const Choice& a, const Choice& b, double len) {
  if (a.kind != b.kind) return false;
  const double eps = kTol * len;
  switch (a.kind) {
    case ChoiceKind::Full:
    case ChoiceKind::NoGapSentinel:
      return true;
    case ChoiceKind::SymmetricStubs:
      return std::abs(a.stub - b.stub) <= eps;
    case ChoiceKind::Gap:
      return std::abs(a.gap_a - b.gap_a) <= eps && std::abs(a.gap_b - b.gap_b) <= eps;
  }
  return false;
}

}  // namespace detail

// Exhaustive ground-truth solver. Enumerates every choice vector in
// deterministic order (segment id, then choice index), filters by validity,
// and reports the maximum ink together with the number of distinct maximal
// vectors and one witness.
inline OracleResult brute_force(const Drawing& d, Mode mode, long long budget = 100'000'000) {
  IntersectionGraph g = build_graph(d);
  const int m = g.size();
  std::vector<ChoiceSet> sets;
  sets.reserve(m);
  long long product = 1;
  for (int u = 0; u < m; ++u) {
    sets.push_back(mode == Mode::SPED ? sped_choices(g, u) : ped_choices(g, u));
    product *= static_cast<long long>(sets.back().choices.size());
    if (product > budget)
      throw BudgetExceeded("brute-force enumeration budget exceeded (" + std::to_string(budget) +
                           " vectors)");
  }

  OracleResult res;
  res.optimal_ink = -1.0;
  double total_len = d.total_length();
  std::vector<int> idx(m, 0);
  std::vector<std::vector<int>> near_optima;  // vectors within tolerance of the running max

  const auto vector_ink = [&](const std::vector<int>& v) {
    double s = 0.0;
    for (int u = 0; u < m; ++u) s += sets[u].choices[v[u]].choice.ink;
    return s;
  };
  const auto valid = [&](const std::vector<int>& v) {
    for (const Crossing& x : g.crossings) {
      const Choice& cu = sets[x.u].choices[v[x.u]].choice;
      const Choice& cv = sets[x.v].choices[v[x.v]].choice;
      if (!choices_compatible(g, x.u, cu, x.v, cv, x)) return false;
    }
    return true;
  };

  bool done = m == 0;
  if (m == 0) res.optimal_ink = 0.0;
  while (!done) {
    ++res.enumerated;
    if (valid(idx)) {
      const double v = vector_ink(idx);
      const double eps = kTol * std::max(1.0, total_len);
      if (v > res.optimal_ink + eps) {
        res.optimal_ink = v;
        // Drop stale near-optima no longer within tolerance.
        std::erase_if(near_optima, [&](const std::vector<int>& w) {
          return vector_ink(w) < res.optimal_ink - eps;
        });
        near_optima.push_back(idx);
      } else if (v >= res.optimal_ink - eps) {
        near_optima.push_back(idx);
      }
    }
    // odometer increment
    int pos = m - 1;
    while (pos >= 0) {
      if (++idx[pos] < static_cast<int>(sets[pos].choices.size())) break;
      idx[pos] = 0;
      --pos;
    }
    done = pos < 0;
  }

  if (res.optimal_ink < 0.0)
    throw std::logic_error("no valid assignment found (internal error)");

  // Deduplicate maximal vectors by choice parameters.
  std::vector<std::vector<int>> distinct;
  for (const auto& v : near_optima) {
    bool dup = false;
    for (const auto& w : distinct) {
      bool eq = true;
      for (int u = 0; u < m && eq; ++u)
        eq = detail::same_choice(sets[u].choices[v[u]].choice, sets[u].choices[w[u]].choice,
                                 g.seg_length(u));
      if (eq) {
        dup = true;
        break;
      }
    }
    if (!dup) distinct.push_back(v);
  }
  res.optimum_count = static_cast<long long>(distinct.size());

  res.witness.mode = mode;
  res.witness.assignment.resize(m);
  if (!near_optima.empty())
    for (int u = 0; u < m; ++u)
      res.witness.assignment[u] = sets[u].choices[near_optima.front()[u]].choice;
  res.witness.total_ink = ink(res.witness);
  return res;
}

// The trivial SHPED optimum: per crossing take the larger of the two stub
// ratios that resolve it, then take the minimum over all crossings.
inline std::pair<double, Solution> shped_ratio(const Drawing& d) {
  IntersectionGraph g = build_graph(d);
  double delta = 0.5;
  for (const Crossing& x : g.crossings) {
    const double lu = g.seg_length(x.u), lv = g.seg_length(x.v);
    const double ru = std::min(x.du, lu - x.du) / lu;
    const double rv = std::min(x.dv, lv - x.dv) / lv;
    delta = std::min(delta, std::max(ru, rv));
  }
  Solution sol;
  sol.mode = Mode::SHPED;
  sol.delta = delta;
  for (const Segment& s : d.segments)
    sol.assignment.push_back(Choice::stubs(s.length(), delta * s.length()));
  sol.total_ink = ink(sol);
  return {delta, sol};
}

}  // namespace ped
