#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/generators.hpp"
#include "cli/render.hpp"
#include "cli/solve.hpp"

namespace capcover::cli {

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kVerifyFailed = 2;
constexpr int kGuard = 3;

const std::vector<std::string> kKinds = {"antenna", "generic", "load", "binsched"};
const std::vector<std::string> kAlgos = {"dp", "ffd", "refined1", "refined2", "ptas", "binsched"};

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InvalidInstance("bad size '" + item + "' in --sizes");
    }
  }
  if (out.empty()) throw InvalidInstance("--sizes is empty");
  return out;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << x;
  return s.str();
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Capacitated and geometric set cover toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  std::string gen_kind = "antenna";
  std::string gen_out = "-";
  auto* cmd_gen = app.add_subcommand("gen", "Write a random or adversarial instance");
  cmd_gen->add_option("--kind", gen_kind, "Instance kind")->check(CLI::IsMember(kKinds));
  cmd_gen->add_option("--pattern", gen.pattern, "uniform | ffd-worst | p2-worst")
      ->check(CLI::IsMember({"uniform", "ffd-worst", "p2-worst"}));
  cmd_gen->add_option("--n", gen.n, "Number of points, elements or items")->check(CLI::PositiveNumber);
  cmd_gen->add_option("--seed", gen.seed, "Random seed");
  cmd_gen->add_flag("--wrap", gen.wrap, "Angles on the full circle");
  cmd_gen->add_option("--eps", gen.eps, "Offset added to adversarial demands")->check(CLI::NonNegativeNumber);
  cmd_gen->add_option("--max-demand", gen.max_demand, "Upper end of uniform demands");
  cmd_gen->add_option("--sets", gen.sets, "Family size for generic instances");
  cmd_gen->add_option("--window", gen.window, "Window width for load instances");
  cmd_gen->add_option("--m", gen.m, "Antennas for load instances")->check(CLI::PositiveNumber);
  cmd_gen->add_option("--out", gen_out, "Output file, - for stdout");

  SolveOptions solve_opts;
  std::string solve_in, solve_out = "-";
  std::uint64_t solve_seed = 0;
  auto* cmd_solve = app.add_subcommand("solve", "Solve an instance and write a report");
  cmd_solve->add_option("--in", solve_in, "Instance file, - for stdin")->required();
  cmd_solve->add_option("--algo", solve_opts.algo, "Algorithm")->check(CLI::IsMember(kAlgos));
  cmd_solve->add_option("--eps", solve_opts.eps, "Accuracy of the load scheme")->check(CLI::Range(1e-3, 1.0));
  cmd_solve->add_flag("--wrap", solve_opts.force_wrap, "Treat angles as wrapping around the circle");
  cmd_solve->add_flag("--oracle", solve_opts.oracle, "Also compute the exact optimum and the ratio");
  auto* seed_opt = cmd_solve->add_option("--seed", solve_seed, "Seed recorded in the report");
  cmd_solve->add_option("--out", solve_out, "Report file, - for stdout");

  std::string verify_in;
  auto* cmd_verify = app.add_subcommand("verify", "Recheck a report against its instance");
  cmd_verify->add_option("--in", verify_in, "Report file")->required();

  std::string oracle_in, oracle_algo;
  auto* cmd_oracle = app.add_subcommand("oracle", "Exact optimum by exhaustive search");
  cmd_oracle->add_option("--in", oracle_in, "Instance file")->required();
  cmd_oracle->add_option("--algo", oracle_algo, "Problem variant (dp: uncapacitated antenna cover)")
      ->check(CLI::IsMember(kAlgos));

  std::string bench_kind = "antenna", bench_algo, bench_sizes = "4,6,8", bench_out = "-";
  int bench_trials = 10;
  std::uint64_t bench_seed = 1;
  double bench_eps = 0.3;
  bool bench_wrap = false;
  auto* cmd_bench = app.add_subcommand("bench", "Sweep sizes and tabulate runtimes and ratios");
  cmd_bench->add_option("--kind", bench_kind, "Instance kind")->check(CLI::IsMember(kKinds));
  cmd_bench->add_option("--algo", bench_algo, "Algorithm")->check(CLI::IsMember(kAlgos));
  cmd_bench->add_option("--sizes", bench_sizes, "Comma-separated instance sizes");
  cmd_bench->add_option("--trials", bench_trials, "Instances per size")->check(CLI::PositiveNumber);
  cmd_bench->add_option("--seed", bench_seed, "First seed");
  cmd_bench->add_option("--eps", bench_eps, "Accuracy of the load scheme")->check(CLI::Range(1e-3, 1.0));
  cmd_bench->add_flag("--wrap", bench_wrap, "Angles on the full circle");
  cmd_bench->add_option("--out", bench_out, "Table file, - for stdout");

  std::string render_in, render_out = "-";
  auto* cmd_render = app.add_subcommand("render", "Draw an antenna or load report as SVG");
  cmd_render->add_option("--in", render_in, "Report file")->required();
  cmd_render->add_option("--out", render_out, "SVG file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (cmd_gen->parsed()) {
      gen.kind = parse_kind(gen_kind);
      if (gen.pattern != "uniform") gen.kind = Kind::Generic;
      write_text(gen_out, dump(to_json(generate(gen))));
      return kOk;
    }
    if (cmd_solve->parsed()) {
      if (seed_opt->count() > 0) solve_opts.seed = solve_seed;
      const auto instance = instance_from_json(read_json(solve_in));
      const Report report = solve(instance, solve_opts);
      write_text(solve_out, dump(to_json(report)));
      return kOk;
    }
    if (cmd_verify->parsed()) {
      const Report report = report_from_json(read_json(verify_in));
      const auto problems = verify_report(report);
      if (problems.empty()) {
        std::cout << "ok: " << report.algorithm << " solution with " << report.sets.size()
                  << " sets is valid\n";
        return kOk;
      }
      for (const auto& p : problems) std::cerr << "verify: " << p << "\n";
      return kVerifyFailed;
    }
    if (cmd_oracle->parsed()) {
      const auto instance = instance_from_json(read_json(oracle_in));
      const std::string algo = oracle_algo.empty() ? default_algo(instance.kind) : oracle_algo;
      const auto started = std::chrono::steady_clock::now();
      const double optimum = oracle_optimum(instance, algo);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
      json out{{"kind", kind_name(instance.kind)},
               {"algorithm", algo},
               {"optimum", format_real(optimum)},
               {"elapsed_ms", format_real(ms)}};
      std::cout << dump(out);
      return kOk;
    }
    if (cmd_bench->parsed()) {
      const Kind kind = parse_kind(bench_kind);
      SolveOptions o;
      o.algo = bench_algo.empty() ? default_algo(kind) : bench_algo;
      o.eps = bench_eps;
      std::ostringstream table;
      table << "| kind | algo | n | trials | median ms | max ms | mean ratio | max ratio | oracle runs |\n"
            << "|---|---|---|---|---|---|---|---|---|\n";
      for (int n : parse_sizes(bench_sizes)) {
        std::vector<double> times, ratios;
        for (int t = 0; t < bench_trials; ++t) {
          GenOptions g;
          g.kind = kind;
          g.n = n;
          g.seed = bench_seed + static_cast<std::uint64_t>(t);
          g.wrap = bench_wrap;
          const auto instance = generate(g);
          Report r = solve(instance, o);
          times.push_back(r.elapsed_ms);
          try {
            const double optimum = oracle_optimum(r.instance, o.algo);
            const double achieved = r.bound ? *r.bound : r.size;
            if (optimum > 0.0) ratios.push_back(achieved / optimum);
          } catch (const GuardExceeded&) {
            // past the oracle limits: runtime only
          }
        }
        table << "| " << bench_kind << " | " << o.algo << " | " << n << " | " << bench_trials
              << " | " << fixed(median(times), 3) << " | "
              << fixed(*std::max_element(times.begin(), times.end()), 3) << " | ";
        if (ratios.empty()) {
          table << "- | - | 0 |\n";
        } else {
          double sum = 0.0;
          for (double x : ratios) sum += x;
          table << fixed(sum / ratios.size(), 4) << " | "
                << fixed(*std::max_element(ratios.begin(), ratios.end()), 4) << " | "
                << ratios.size() << " |\n";
        }
      }
      write_text(bench_out, table.str());
      return kOk;
    }
    if (cmd_render->parsed()) {
      const Report report = report_from_json(read_json(render_in));
      write_text(render_out, render_svg(report));
      return kOk;
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace capcover::cli
