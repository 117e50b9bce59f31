#include "nqga_cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nqga/error.hpp"
#include "nqga/fitness.hpp"
#include "nqga/tuple_io.hpp"
#include "nqga_cli/record.hpp"

namespace nqga::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GaFlags {
  int n = 8;
  std::size_t pop_size = 1000;
  std::uint64_t max_generations = 5000;
  std::uint64_t stagnation_window = 500;
  std::uint64_t seed = 0;
  double crossover_prob = 0.9;
  double mutation_prob = 0.8;
  double double_mutation_prob = 0.4;
  std::size_t elitism = 1;
  std::string format = "text";

  GAConfig config_for(int board, std::uint64_t run_seed) const {
    GAConfig c;
    c.n = board;
    c.population_size = pop_size;
    c.max_generations = max_generations;
    c.stagnation_window =
        stagnation_window == 0 ? std::nullopt : std::optional<std::uint64_t>(stagnation_window);
    c.operator_params = {crossover_prob, mutation_prob, double_mutation_prob};
    c.seed = run_seed;
    c.elitism_count = elitism;
    return c;
  }
};

void add_ga_flags(CLI::App& cmd, GaFlags& f) {
  cmd.add_option("--pop-size", f.pop_size, "Population size")->capture_default_str();
  cmd.add_option("--max-generations", f.max_generations, "Generation budget")->capture_default_str();
  cmd.add_option("--stagnation-window", f.stagnation_window,
                 "Stop after this many generations without improvement (0 disables)")
      ->capture_default_str();
  cmd.add_option("--seed", f.seed, "Random seed")->capture_default_str();
  cmd.add_option("--crossover-prob", f.crossover_prob)->capture_default_str();
  cmd.add_option("--mutation-prob", f.mutation_prob)->capture_default_str();
  cmd.add_option("--double-mutation-prob", f.double_mutation_prob)->capture_default_str();
  cmd.add_option("--elitism", f.elitism, "Members carried over unchanged")->capture_default_str();
  cmd.add_option("--format", f.format, "Record format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

void write_record(std::ostream& out, const ResultRecord& rec, const std::string& format) {
  if (format == "json") {
    out << to_json_line(rec) << '\n';
  } else if (format == "csv") {
    out << csv_header() << '\n' << to_csv_row(rec) << '\n';
  } else {
    out << to_text(rec);
  }
}

int cmd_solve(const GaFlags& flags, bool render, std::ostream& out, std::ostream& err) {
  const GAConfig config = flags.config_for(flags.n, flags.seed);
  const SolveResult result = run(config);
  out << format_tuple(result.best) << '\n';
  if (render) {
    try {
      out << render_board(result.best);
    } catch (const RenderLimitError& e) {
      err << "board not rendered: " << e.what() << '\n';
    }
  }
  write_record(out, make_record(config, result), flags.format);
  return result.terminated_by == Termination::Solved ? kOk : kUnsolved;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_verify(const std::string& tuple, const std::string& file, bool render, std::ostream& out,
               std::ostream& err) {
  const std::string text = file.empty() ? tuple : read_file(file);
  const Chromosome chrom = parse_tuple(text);
  const FitnessValue f = fitness(chrom);
  const ConflictReport report = pairwise_attack_count(chrom);

  out << "n: " << chrom.size() << '\n'
      << "fitness: " << f.value << '\n'
      << "attacking_pairs: " << report.attacking_pairs << '\n';
  bool any = false;
  for (const auto& [id, count] : report.per_diagonal_counts) {
    if (count < 2) continue;
    if (!any) out << "conflicting_diagonals:\n";
    any = true;
    out << "  " << (id.kind == DiagonalKind::Difference ? "row-col=" : "row+col=") << id.index
        << ": " << count << " queens\n";
  }
  if (!any) out << "conflicting_diagonals: none\n";
  if (render) {
    try {
      out << render_board(chrom);
    } catch (const RenderLimitError& e) {
      err << "board not rendered: " << e.what() << '\n';
    }
  }
  return f.solved() ? kOk : kUnsolved;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const auto mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

int cmd_bench(const GaFlags& flags, std::vector<int> n_list, std::size_t trials,
              const std::string& out_path, unsigned jobs, std::ostream& out) {
  if (n_list.empty()) throw ConfigError("--n-list must name at least one board size");
  if (trials < 1) throw ConfigError("--trials must be at least 1");
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());

  std::vector<GAConfig> configs;
  for (int n : n_list) {
    for (std::size_t t = 0; t < trials; ++t) configs.push_back(flags.config_for(n, flags.seed + t));
  }
  for (const auto& c : configs) c.validate();

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::out | std::ios::trunc);
    if (!file) throw IoError("cannot write '" + out_path + "'");
  }
  std::ostream& sink = out_path.empty() ? out : file;

  std::vector<ResultRecord> records(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < configs.size(); k = next++) {
      records[k] = make_record(configs[k], run(configs[k]));
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(configs.size())));
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }

  if (flags.format == "csv") sink << csv_header() << '\n';
  for (const auto& rec : records) {
    sink << (flags.format == "csv" ? to_csv_row(rec) : to_json_line(rec)) << '\n';
  }
  sink.flush();
  if (!sink) throw IoError("failed writing records");

  out << std::left << std::setw(8) << "n" << std::setw(8) << "trials" << std::setw(8) << "solved"
      << std::setw(12) << "solve_rate" << std::setw(20) << "median_generations"
      << "median_wall_ms\n";
  std::size_t k = 0;
  for (int n : n_list) {
    std::size_t solved = 0;
    std::vector<double> gens;
    std::vector<double> wall;
    for (std::size_t t = 0; t < trials; ++t, ++k) {
      solved += records[k].best_fitness == 0 ? 1 : 0;
      gens.push_back(static_cast<double>(records[k].generations_run));
      wall.push_back(static_cast<double>(records[k].wall_time_ms));
    }
    const double rate = static_cast<double>(solved) / static_cast<double>(trials);
    out << std::left << std::setw(8) << n << std::setw(8) << trials << std::setw(8) << solved
        << std::setw(12) << std::fixed << std::setprecision(3) << rate << std::setw(20)
        << std::setprecision(1) << median(gens) << median(wall) << '\n';
    out << std::defaultfloat;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genetic-algorithm N-Queens solver"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  GaFlags solve_flags;
  bool solve_render = false;
  auto* solve = app.add_subcommand("solve", "Run the solver once");
  solve->add_option("--n", solve_flags.n, "Board size")->required();
  add_ga_flags(*solve, solve_flags);
  solve->add_flag("--render", solve_render, "Print the board");

  std::string tuple;
  std::string file;
  bool verify_render = false;
  auto* verify = app.add_subcommand("verify", "Score a given arrangement");
  auto* tuple_opt = verify->add_option("--tuple", tuple, "Tuple text, e.g. 2,4,1,3");
  auto* file_opt = verify->add_option("--file", file, "File holding the tuple");
  tuple_opt->excludes(file_opt);
  verify->add_flag("--render", verify_render, "Print the board");

  GaFlags bench_flags;
  std::vector<int> n_list;
  std::size_t trials = 1;
  std::string out_path;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* bench = app.add_subcommand("bench", "Run seeded trials over several board sizes");
  bench->add_option("--n-list", n_list, "Comma-separated board sizes")->delimiter(',')->required();
  bench->add_option("--trials", trials, "Trials per board size")->capture_default_str();
  bench->add_option("--out", out_path, "Record file (JSON lines, or CSV with --format csv)");
  bench->add_option("--jobs", jobs, "Concurrent trials")->check(CLI::PositiveNumber);
  add_ga_flags(*bench, bench_flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }
  if (*verify && tuple_opt->count() + file_opt->count() != 1) {
    err << "usage error: verify needs exactly one of --tuple or --file\n";
    return kUsage;
  }

  try {
    if (*solve) return cmd_solve(solve_flags, solve_render, out, err);
    if (*verify) return cmd_verify(tuple, file, verify_render, out, err);
    return cmd_bench(bench_flags, n_list, trials, out_path, jobs, out);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kDataError;
  } catch (const PermutationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kDataError;
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace nqga::cli
