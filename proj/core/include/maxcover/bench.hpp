#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxcover/instance_gen.hpp"
#include "maxcover/solvers.hpp"

namespace maxcover {

/// A parsed algorithm string: one of
///   greedy | bs:<p> | rgreedy:<N> | bbs:<p1,p2,...> | exact
struct AlgoSpec {
  enum class Kind { Greedy, BigStep, RandomizedGreedy, BestOfBigSteps, Exact };

  Kind kind = Kind::Greedy;
  std::size_t step = 1;              // bs
  std::size_t repetitions = 1;       // rgreedy
  std::vector<std::size_t> steps;    // bbs

  /// Throws InvalidArgument on an unknown name or bad parameter.
  static AlgoSpec parse(std::string_view text);

  /// Canonical string form, inverse of parse().
  std::string tag() const;
};

/// Dispatches one algorithm run. `seed` feeds the randomized greedy only;
/// `cost_limit` guards big-step and exact runs.
Solution run_algorithm(const AlgoSpec& algo, const Instance& instance, std::size_t k,
                       std::uint64_t cost_limit, std::uint64_t seed);

/// One Table-style row: a family's parameters plus head-to-head win counts.
/// A win is a strictly larger coverage on one instance; equal coverage is a
/// tie, so wins_a + wins_b + ties == spec.num_problems.
struct ComparisonStats {
  GenSpec spec;
  std::string algo_a;
  std::string algo_b;
  std::uint32_t wins_a = 0;
  std::uint32_t wins_b = 0;
  std::uint32_t ties = 0;
  double mean_coverage_a = 0.0;
  double mean_coverage_b = 0.0;
};

/// Generates the family's instances, solves each with both algorithms, and
/// tallies strict wins and ties. Deterministic for fixed inputs: a
/// randomized greedy in slot a/b of problem i is seeded with
/// mix_seed(spec.seed, i, slot). Instances may be solved on `threads`
/// workers; tallies are reduced in problem order either way.
/// CostLimitExceeded from a solver is rethrown annotated with the family tag
/// and problem index.
ComparisonStats run_comparison(const GenSpec& spec, const AlgoSpec& algo_a,
                               const AlgoSpec& algo_b,
                               std::uint64_t cost_limit = kDefaultCostLimit,
                               unsigned threads = 1);

enum class StatsFormat { Csv, AlignedText };

/// Renders one row per family. CSV uses the exact header
///   universe,sets,avg_size,k,problems,algo_a,wins_a,algo_b,wins_b,ties,mean_cov_a,mean_cov_b
/// with minimal quoting (fields containing commas are double-quoted).
std::string render_stats(std::span<const ComparisonStats> stats, StatsFormat format);

/// One benchmark family read from a config file.
struct BenchFamily {
  GenSpec spec;
  AlgoSpec algo_a;
  AlgoSpec algo_b;
};

/// Parses the benchmark config format: one "[family]" section per family
/// with key=value lines for universe, sets, avg_size, k, problems, seed,
/// algo_a, algo_b. '#' comments and blank lines are skipped. Throws
/// ConfigError with a 1-based line number.
std::vector<BenchFamily> parse_bench_config(std::string_view text);

}  // namespace maxcover
