#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "maxcover/combinations.hpp"
#include "maxcover/instance.hpp"

namespace maxcover {

/// Default ceiling on combination evaluations per big-step / exact call.
/// Keeps the heaviest sensible configurations (k=20, p=4 over 150 sets is
/// ~8e7 evaluations) an explicit opt-in rather than a silent stall.
inline constexpr std::uint64_t kDefaultCostLimit = 50'000'000;

/// Bundled solver parameters. Only the fields an algorithm consumes matter
/// to it: `step` is big-step only, `repetitions` and `seed` belong to the
/// randomized greedy, the cost limit guards big-step and exact runs.
struct SolverConfig {
  std::size_t k = 0;
  std::size_t step = 1;
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;
  std::uint64_t cost_limit = kDefaultCostLimit;

  /// Throws InvalidArgument when step < 1, repetitions < 1, or cost_limit < 1.
  void validate() const;
};

/// Number of combination evaluations one big-step run will perform: the sum
/// of C(|remaining|, q) over its steps. For step size p over n sets this is
/// about (k/p) * C(n, p).
CostPrediction predict_big_step_cost(std::size_t set_count, std::size_t k, std::size_t step);

/// Number of evaluations one exact run performs: C(n, min(k, n)).
CostPrediction predict_exact_cost(std::size_t set_count, std::size_t k);

/// Classical greedy: repeatedly add the single remaining set with maximum
/// marginal gain, lowest index first on ties, until min(k, n) sets are
/// selected (zero-gain picks included).
Solution greedy_solve(const Instance& instance, std::size_t k);

/// Big-step greedy: each step evaluates every q-combination of the remaining
/// sets, q = min(p, k - selected, |remaining|), and adds the
/// lexicographically-first combination with maximum joint marginal gain.
/// Throws CostLimitExceeded before evaluating anything when the predicted
/// evaluation count is above cost_limit.
Solution big_step_solve(const Instance& instance, std::size_t k, std::size_t step,
                        std::uint64_t cost_limit = kDefaultCostLimit);

/// Classical greedy with uniform-random tie breaking, restarted `repetitions`
/// times; the best run wins, earliest run first on coverage ties. Repetition
/// r draws from a SplitMix64 stream seeded with mix_seed(seed, r), so the
/// result is a pure function of (instance, k, repetitions, seed).
Solution randomized_greedy_solve(const Instance& instance, std::size_t k,
                                 std::size_t repetitions, std::uint64_t seed);

/// Runs big_step_solve for each step size in order and keeps the first
/// strictly-better solution; the result is tagged with the winning step.
Solution best_of_big_steps(const Instance& instance, std::size_t k,
                           std::span<const std::size_t> steps,
                           std::uint64_t cost_limit = kDefaultCostLimit);

/// best_of_big_steps with the step list {1, 2, 3, 4}.
Solution best_of_big_steps(const Instance& instance, std::size_t k,
                           std::uint64_t cost_limit = kDefaultCostLimit);

/// True optimum by evaluating all min(k, n)-combinations of the collection;
/// the lexicographically-first maximizer is returned. Guarded by cost_limit
/// like big_step_solve.
Solution exact_solve(const Instance& instance, std::size_t k,
                     std::uint64_t cost_limit = kDefaultCostLimit);

}  // namespace maxcover
