#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ped/bench.hpp"
#include "ped/gadgets.hpp"
#include "ped/layout.hpp"
#include "ped/solve.hpp"
#include "ped/svg.hpp"
#include "ped/validate.hpp"

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ink-maximal partial edge drawings"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a drawing (random instance or gadget fixture)");
  std::string gen_out = "-", gen_layout = "spring", gen_gadget;
  ped::LayoutSpec ls;
  double alpha = 12.0, beta = 1.0;
  int gp = 3;
  gen->add_option("--output,-o", gen_out, "output drawing file ('-' = stdout)");
  gen->add_option("--seed", ls.seed, "random seed");
  gen->add_option("--n", ls.n, "vertex count");
  gen->add_option("--m", ls.m, "edge count");
  gen->add_option("--iterations", ls.iterations, "spring layout iterations");
  gen->add_option("--layout", gen_layout, "spring | circle");
  gen->add_option("--gadget", gen_gadget,
                  "fixture instead of a random instance: sped-pair-8, sped-pair-4, sped-clause, "
                  "sped-cycle, ped-cycle, ped-clause, ped-weight");
  gen->add_option("--alpha", alpha, "gadget alpha");
  gen->add_option("--beta", beta, "gadget beta");
  gen->add_option("--p", gp, "gadget cycle parameter");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "compute a maximum-ink partial edge drawing");
  std::string sv_in, sv_out = "-", sv_mode = "sped", sv_algo = "auto";
  long long budget_entries = 50'000'000, timeout_ms = 0;
  bool no_timestamp = false;
  solve_cmd->add_option("--input,-i", sv_in, "drawing file")->required();
  solve_cmd->add_option("--output,-o", sv_out, "solution file ('-' = stdout)");
  solve_cmd->add_option("--mode", sv_mode, "sped | ped | shped");
  solve_cmd->add_option("--algo", sv_algo, "auto | tree | td | brute");
  solve_cmd->add_option("--budget-entries", budget_entries, "decomposition DP entry budget");
  solve_cmd->add_option("--timeout-ms", timeout_ms, "solver timeout (0 = unlimited)");
  solve_cmd->add_flag("--no-timestamp", no_timestamp, "omit the timestamp header");

  // render
  auto* render = app.add_subcommand("render", "render a drawing (optionally with a solution) as SVG");
  std::string rd_in, rd_sol, rd_out = "-";
  bool dotted = false;
  render->add_option("--input,-i", rd_in, "drawing file")->required();
  render->add_option("--solution,-s", rd_sol, "solution file");
  render->add_option("--output,-o", rd_out, "SVG file ('-' = stdout)");
  render->add_flag("--dotted", dotted, "draw omitted central pieces dashed");

  // bench
  auto* bench = app.add_subcommand("bench", "run the benchmark corpus, emit CSV");
  ped::BenchConfig cfg;
  std::string bn_out = "-", bn_algo = "auto";
  std::vector<std::string> bn_modes, bn_layouts;
  bench->add_option("--output,-o", bn_out, "CSV file ('-' = stdout)");
  bench->add_option("--n", cfg.n, "vertex count");
  bench->add_option("--m", cfg.ms, "edge counts (repeatable)");
  bench->add_option("--seeds", cfg.seeds, "seeds per size");
  bench->add_option("--mode", bn_modes, "modes to run (repeatable; default sped ped)");
  bench->add_option("--layout", bn_layouts, "layouts to run (repeatable; default spring circle)");
  bench->add_option("--algo", bn_algo, "auto | tree | td | brute");
  bench->add_option("--budget-entries", cfg.max_entries, "decomposition DP entry budget");
  bench->add_option("--timeout-ms", cfg.timeout_ms, "per-instance timeout (0 = unlimited)");

  // check
  auto* check = app.add_subcommand("check", "validate a solution against a drawing");
  std::string ck_in, ck_sol;
  check->add_option("--input,-i", ck_in, "drawing file")->required();
  check->add_option("--solution,-s", ck_sol, "solution file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      ped::Drawing d;
      if (!gen_gadget.empty()) {
        ped::GadgetSpec spec = ped::gadget_spec_from_name(gen_gadget);
        spec.alpha = alpha;
        spec.beta = beta;
        spec.p = gp;
        d = ped::gadget(spec);
      } else {
        ls.layout = ped::layout_from_string(gen_layout);
        d = ped::random_instance(ls);
      }
      write_file(gen_out, ped::save_drawing(d) + "\n");
    } else if (solve_cmd->parsed()) {
      ped::Drawing d = ped::load_drawing(read_file(sv_in));
      ped::SolveOptions opt;
      opt.algo = ped::algo_from_string(sv_algo);
      opt.td.max_entries = budget_entries;
      opt.td.timeout_ms = timeout_ms;
      ped::Solution sol = ped::solve(d, ped::mode_from_string(sv_mode), opt);
      write_file(sv_out, ped::save_solution(d, sol, no_timestamp ? "" : iso_timestamp()) + "\n");
    } else if (render->parsed()) {
      ped::Drawing d = ped::load_drawing(read_file(rd_in));
      ped::SvgOptions opt;
      opt.dotted = dotted;
      if (rd_sol.empty()) {
        write_file(rd_out, ped::render_svg(d, nullptr, opt));
      } else {
        ped::Solution sol = ped::load_solution(d, read_file(rd_sol));
        write_file(rd_out, ped::render_svg(d, &sol, opt));
      }
    } else if (bench->parsed()) {
      cfg.algo = ped::algo_from_string(bn_algo);
      if (!bn_modes.empty()) {
        cfg.modes.clear();
        for (const auto& m : bn_modes) cfg.modes.push_back(ped::mode_from_string(m));
      }
      if (!bn_layouts.empty()) {
        cfg.layouts.clear();
        for (const auto& l : bn_layouts) cfg.layouts.push_back(ped::layout_from_string(l));
      }
      write_file(bn_out, ped::bench_csv(ped::bench_run(cfg)));
    } else if (check->parsed()) {
      ped::Drawing d = ped::load_drawing(read_file(ck_in));
      ped::Solution sol = ped::load_solution(d, read_file(ck_sol));
      ped::ValidityReport rep = ped::validate_solution(d, sol);
      if (rep.valid()) {
        std::cout << "valid: ink " << ped::ink(sol) << "\n";
      } else {
        for (const auto& e : rep.errors) std::cerr << "error: " << e << "\n";
        for (int x : rep.unresolved) std::cerr << "unresolved crossing " << x << "\n";
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
