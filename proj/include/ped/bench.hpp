#pragma once

#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "ped/layout.hpp"
#include "ped/solve.hpp"

namespace ped {

struct BenchConfig {
  int n = 40;
  std::vector<int> ms = {40, 45, 50, 55, 60};
  int seeds = 20;
  std::vector<LayoutKind> layouts = {LayoutKind::Spring, LayoutKind::Circular};
  std::vector<Mode> modes = {Mode::SPED, Mode::PED};
  Algo algo = Algo::Auto;
  long long timeout_ms = 10'000;  // per instance+mode, 0 = unlimited
  long long max_entries = 8'000'000;
  int iterations = 100;  // spring layout iterations
};

struct BenchRow {
  std::string instance;
  int n = 0, m = 0;
  int crossings = 0;  // |E(C)|
  int k = 0;          // max degree of C
  int width = -1;     // reported decomposition width (td path), -1 otherwise
  Mode mode = Mode::SPED;
  Algo algo = Algo::Auto;
  double total_length = 0.0;
  double ink = 0.0;
  double ink_ratio = 0.0;
  double solve_ms = 0.0;   // wall clock around the DP, decomposition excluded
  double decomp_ms = 0.0;
  long long peak_entries = 0;
  std::string status = "ok";  // ok | skipped
};

inline std::string layout_name(LayoutKind l) {
  return l == LayoutKind::Spring ? "spring" : "circle";
}

inline std::vector<BenchRow> bench_run(const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  for (LayoutKind layout : cfg.layouts)
    for (int m : cfg.ms)
      for (int seed = 0; seed < cfg.seeds; ++seed) {
        LayoutSpec ls;
        ls.n = cfg.n;
        ls.m = m;
        ls.layout = layout;
        ls.iterations = cfg.iterations;
        ls.seed = static_cast<std::uint64_t>(seed) + 1;
        Drawing d = random_instance(ls);
        IntersectionGraph g = build_graph(d);
        for (Mode mode : cfg.modes) {
          BenchRow row;
          row.instance = layout_name(layout) + "-n" + std::to_string(cfg.n) + "-m" +
                         std::to_string(m) + "-s" + std::to_string(seed);
          row.n = cfg.n;
          row.m = m;
          row.crossings = static_cast<int>(g.crossings.size());
          row.k = g.max_degree;
          row.mode = mode;
          row.algo = cfg.algo;
          row.total_length = d.total_length();
          SolveOptions opt;
          opt.algo = cfg.algo;
          opt.td.timeout_ms = cfg.timeout_ms;
          opt.td.max_entries = cfg.max_entries;
          SolveStats st;
          const auto t0 = std::chrono::steady_clock::now();
          try {
            Solution sol = solve(d, mode, opt, &st);
            const auto t1 = std::chrono::steady_clock::now();
            const double elapsed = std::chrono::duration<double, std::milli>(t1 - t0).count();
            row.width = st.width;
            row.decomp_ms = st.decomp_ms;
            row.solve_ms = std::max(0.0, elapsed - st.decomp_ms);
            row.peak_entries = st.peak_entries;
            row.ink = sol.total_ink;
            row.ink_ratio = row.total_length > 0 ? row.ink / row.total_length : 0.0;
          } catch (const TimeoutExceeded&) {
            row.status = "skipped";
          } catch (const MemoryBudgetExceeded&) {
            row.status = "skipped";
          }
          rows.push_back(std::move(row));
        }
      }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows, bool summary = true) {
  std::ostringstream out;
  out << "instance,n,m,crossings,k,width,mode,algo,total_length,ink,ink_ratio,solve_ms,"
         "decomp_ms,peak_entries,status\n";
  for (const auto& r : rows)
    out << r.instance << ',' << r.n << ',' << r.m << ',' << r.crossings << ',' << r.k << ','
        << r.width << ',' << to_string(r.mode) << ',' << to_string(r.algo) << ','
        << r.total_length << ',' << r.ink << ',' << r.ink_ratio << ',' << r.solve_ms << ','
        << r.decomp_ms << ',' << r.peak_entries << ',' << r.status << '\n';
  if (!summary) return out.str();
  // Mean and sigma of the ink ratio per layout x mode; skipped rows are
  // excluded from the statistics but counted.
  for (const char* layout : {"spring", "circle"})
    for (const char* mode : {"sped", "ped", "shped"}) {
      double sum = 0, sumsq = 0;
      int count = 0, skipped = 0;
      for (const auto& r : rows) {
        if (r.instance.rfind(layout, 0) != 0 || to_string(r.mode) != mode) continue;
        if (r.status != "ok") {
          ++skipped;
          continue;
        }
        sum += r.ink_ratio;
        sumsq += r.ink_ratio * r.ink_ratio;
        ++count;
      }
      if (count + skipped == 0) continue;
      const double mean = count ? sum / count : 0.0;
      const double var = count ? std::max(0.0, sumsq / count - mean * mean) : 0.0;
      out << "# summary layout=" << layout << " mode=" << mode << " count=" << count
          << " skipped=" << skipped << " mean_ink_ratio=" << mean << " sigma=" << std::sqrt(var)
          << '\n';
    }
  return out.str();
}

}  // namespace ped
