// maxcover — solve, generate, and benchmark maximum-coverage instances.
//
// Exit codes: 0 success, 1 usage error, 2 solver / cost-guard error,
// 3 I/O or parse error. Machine-readable output goes to stdout only;
// diagnostics and progress go to stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "maxcover/bench.hpp"
#include "maxcover/instance_gen.hpp"
#include "maxcover/instance_io.hpp"
#include "maxcover/rng.hpp"
#include "maxcover/solvers.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;
constexpr int kExitIo = 3;

struct SolveOptions {
  std::string input;
  std::string algo;
  std::size_t k = 0;
  std::optional<std::size_t> step;
  std::optional<std::size_t> repetitions;
  std::uint64_t seed = 0;
  std::string output = "json";
};

struct GenerateOptions {
  maxcover::GenSpec spec;
  std::string out_dir;
  std::string tag;
};

struct BenchOptions {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  unsigned jobs = 1;
};

maxcover::AlgoSpec resolve_algo(const SolveOptions& options) {
  using maxcover::AlgoSpec;
  using maxcover::InvalidArgument;

  // Bare "bs" / "rgreedy" take their parameter from --p / --N; the suffixed
  // forms carry it inline and must not also get the flag.
  if (options.algo == "bs") {
    if (!options.step) throw InvalidArgument("--algo bs requires --p");
    AlgoSpec spec;
    spec.kind = AlgoSpec::Kind::BigStep;
    spec.step = *options.step;
    if (spec.step < 1) throw InvalidArgument("--p must be >= 1");
    return spec;
  }
  if (options.algo == "rgreedy") {
    if (!options.repetitions) throw InvalidArgument("--algo rgreedy requires --N");
    AlgoSpec spec;
    spec.kind = AlgoSpec::Kind::RandomizedGreedy;
    spec.repetitions = *options.repetitions;
    if (spec.repetitions < 1) throw InvalidArgument("--N must be >= 1");
    return spec;
  }

  const AlgoSpec spec = AlgoSpec::parse(options.algo);
  if (options.step && spec.kind != AlgoSpec::Kind::BigStep) {
    throw InvalidArgument("--p only applies to --algo bs");
  }
  if (options.step && spec.kind == AlgoSpec::Kind::BigStep) {
    throw InvalidArgument("give the step either as bs:<p> or via --p, not both");
  }
  if (options.repetitions) {
    if (spec.kind != AlgoSpec::Kind::RandomizedGreedy) {
      throw InvalidArgument("--N only applies to --algo rgreedy");
    }
    throw InvalidArgument("give the repetition count either as rgreedy:<N> or via --N, not both");
  }
  return spec;
}

int run_solve(const SolveOptions& options, std::uint64_t cost_limit) {
  const maxcover::AlgoSpec algo = resolve_algo(options);
  const maxcover::Instance instance = maxcover::load_instance_file(options.input);
  const maxcover::Solution solution =
      maxcover::run_algorithm(algo, instance, options.k, cost_limit, options.seed);

  if (options.output == "json") {
    nlohmann::ordered_json out;
    out["selected"] = solution.selected;
    out["covered"] = solution.covered;
    out["algorithm"] = solution.algorithm;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "algorithm: " << solution.algorithm << '\n';
    std::cout << "selected:";
    for (const std::uint32_t ix : solution.selected) std::cout << ' ' << ix;
    std::cout << '\n';
    std::cout << "covered: " << solution.covered << '\n';
  }
  return kExitOk;
}

int run_generate(GenerateOptions& options) {
  options.spec.validate();
  if (options.tag.empty()) options.tag = options.spec.family_tag();

  fs::create_directories(options.out_dir);
  std::cout << "# file universe sets seed\n";
  for (std::uint32_t i = 0; i < options.spec.num_problems; ++i) {
    const maxcover::Instance instance = maxcover::generate_instance(options.spec, i);
    const std::string name = maxcover::instance_file_name(options.tag, i);
    maxcover::save_instance_file(instance, fs::path(options.out_dir) / name);
    std::cout << name << ' ' << options.spec.universe_size << ' ' << options.spec.num_sets << ' '
              << maxcover::mix_seed(options.spec.seed, i) << '\n';
  }
  std::cerr << "wrote " << options.spec.num_problems << " instances to " << options.out_dir
            << '\n';
  return kExitOk;
}

int run_bench(const BenchOptions& options, std::uint64_t cost_limit) {
  std::ifstream in(options.config_path, std::ios::binary);
  if (!in) throw maxcover::IoError("cannot open '" + options.config_path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();

  const auto families = maxcover::parse_bench_config(buffer.str());

  std::vector<maxcover::ComparisonStats> stats;
  stats.reserve(families.size());
  for (const auto& family : families) {
    std::cerr << "family " << family.spec.family_tag() << ": " << family.algo_a.tag() << " vs "
              << family.algo_b.tag() << " over " << family.spec.num_problems << " problems...\n";
    stats.push_back(maxcover::run_comparison(family.spec, family.algo_a, family.algo_b,
                                             cost_limit, options.jobs));
  }

  const auto format = options.format == "table" ? maxcover::StatsFormat::AlignedText
                                                : maxcover::StatsFormat::Csv;
  std::cout << maxcover::render_stats(stats, format);

  if (!options.out_path.empty()) {
    std::ofstream out(options.out_path, std::ios::binary);
    if (!out) throw maxcover::IoError("cannot open '" + options.out_path + "' for writing");
    out << maxcover::render_stats(stats, maxcover::StatsFormat::Csv);
    if (!out) throw maxcover::IoError("write failure on '" + options.out_path + "'");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-coverage solvers, instance generator, and benchmark harness"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t cost_limit = maxcover::kDefaultCostLimit;
  app.add_option("--cost-limit", cost_limit,
                 "Maximum combination evaluations per big-step/exact run")
      ->capture_default_str();

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  solve_cmd->add_option("input", solve.input, "Instance file (mcp text format)")->required();
  solve_cmd->add_option("--algo", solve.algo,
                        "Algorithm: greedy | bs:<p> | rgreedy:<N> | bbs:<p1,p2,...> | exact")
      ->required();
  solve_cmd->add_option("--k", solve.k, "Number of sets to select")->required();
  solve_cmd->add_option("--p", solve.step, "Step size (with --algo bs)");
  solve_cmd->add_option("--N", solve.repetitions, "Repetitions (with --algo rgreedy)");
  solve_cmd->add_option("--seed", solve.seed, "Randomized-greedy seed")->capture_default_str();
  solve_cmd->add_option("--output", solve.output, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  GenerateOptions generate;
  generate.spec.k = 1;
  CLI::App* generate_cmd = app.add_subcommand("generate", "Write a random instance family");
  generate_cmd->add_option("--universe", generate.spec.universe_size, "Universe size |X|")
      ->required();
  generate_cmd->add_option("--sets", generate.spec.num_sets, "Collection size n")->required();
  generate_cmd->add_option("--avg-size", generate.spec.avg_set_size, "Target mean set size")
      ->required();
  generate_cmd->add_option("--k", generate.spec.k, "Selection budget recorded for the family")
      ->capture_default_str();
  generate_cmd->add_option("--problems", generate.spec.num_problems, "Instances to generate")
      ->required();
  generate_cmd->add_option("--seed", generate.spec.seed, "Family master seed")
      ->capture_default_str();
  generate_cmd->add_option("--out-dir", generate.out_dir, "Output directory")->required();
  generate_cmd->add_option("--tag", generate.tag,
                           "File name prefix (default: derived from the parameters)");

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run win-count comparisons from a config");
  bench_cmd->add_option("config", bench.config_path, "Benchmark config file")->required();
  bench_cmd->add_option("--out", bench.out_path, "Also write the CSV to this path");
  bench_cmd->add_option("--format", bench.format, "stdout format")
      ->check(CLI::IsMember({"csv", "table"}))
      ->capture_default_str();
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads across instances")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve, cost_limit);
    if (generate_cmd->parsed()) return run_generate(generate);
    if (bench_cmd->parsed()) return run_bench(bench, cost_limit);
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const maxcover::CostLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const maxcover::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const maxcover::InvalidSpec& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const maxcover::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const maxcover::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
