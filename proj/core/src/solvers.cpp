#include "maxcover/solvers.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "maxcover/rng.hpp"

namespace maxcover {

namespace {

std::size_t selection_target(const Instance& instance, std::size_t k) {
  return std::min(k, instance.set_count());
}

void accumulate(CostPrediction& total, std::optional<std::uint64_t> term) {
  if (total.overflow) return;
  if (!term || *term > std::numeric_limits<std::uint64_t>::max() - total.evaluations) {
    total.overflow = true;
    total.evaluations = std::numeric_limits<std::uint64_t>::max();
    return;
  }
  total.evaluations += *term;
}

Solution finish(std::vector<std::uint32_t> selected, const Instance& instance,
                std::string tag) {
  Solution solution;
  solution.covered = detail::joint_count(instance, selected);
  solution.selected = std::move(selected);
  solution.algorithm = std::move(tag);
  return solution;
}

/// One deterministic big step: the lexicographically-first q-combination of
/// `state.remaining` with maximum joint gain. Returns the winning tuple.
std::vector<std::uint32_t> best_combination(const Instance& instance, const CoverState& state,
                                            std::size_t q) {
  CombinationCursor cursor(state.remaining, q);
  std::vector<std::uint32_t> tuple(q);
  std::vector<std::uint32_t> best(q);
  std::size_t best_gain = 0;
  bool first = true;
  while (cursor.next(tuple)) {
    const std::size_t gain = detail::joint_gain(state.uncovered, instance, tuple);
    if (first || gain > best_gain) {
      first = false;
      best_gain = gain;
      best = tuple;
    }
  }
  return best;
}

}  // namespace

void SolverConfig::validate() const {
  if (step < 1) throw InvalidArgument("step size must be >= 1");
  if (repetitions < 1) throw InvalidArgument("repetition count must be >= 1");
  if (cost_limit < 1) throw InvalidArgument("cost limit must be >= 1");
}

CostPrediction predict_big_step_cost(std::size_t set_count, std::size_t k, std::size_t step) {
  CostPrediction total;
  const std::size_t target = std::min(k, set_count);
  std::size_t selected = 0;
  std::size_t remaining = set_count;
  while (selected < target) {
    const std::size_t q = std::min({step, k - selected, remaining});
    accumulate(total, combination_count(remaining, q));
    selected += q;
    remaining -= q;
  }
  return total;
}

CostPrediction predict_exact_cost(std::size_t set_count, std::size_t k) {
  CostPrediction total;
  accumulate(total, combination_count(set_count, std::min(k, set_count)));
  return total;
}

Solution greedy_solve(const Instance& instance, std::size_t k) {
  const std::size_t target = selection_target(instance, k);
  CoverState state = CoverState::initial(instance);
  std::vector<std::uint32_t> selected;
  selected.reserve(target);

  while (selected.size() < target) {
    std::uint32_t best = state.remaining.front();
    std::size_t best_gain = 0;
    bool first = true;
    for (const std::uint32_t ix : state.remaining) {
      const std::size_t gain =
          BitVec::intersection_count(state.uncovered, instance.set_bits(ix));
      if (first || gain > best_gain) {
        first = false;
        best_gain = gain;
        best = ix;
      }
    }
    const std::uint32_t picked[] = {best};
    state.apply_selection(instance, picked);
    selected.push_back(best);
  }

  return finish(std::move(selected), instance, "greedy");
}

Solution big_step_solve(const Instance& instance, std::size_t k, std::size_t step,
                        std::uint64_t cost_limit) {
  if (step < 1) throw InvalidArgument("step size must be >= 1");

  const CostPrediction predicted = predict_big_step_cost(instance.set_count(), k, step);
  const std::string tag = "bs:" + std::to_string(step);
  if (predicted.exceeds(cost_limit)) throw CostLimitExceeded(predicted, cost_limit, tag);

  const std::size_t target = selection_target(instance, k);
  CoverState state = CoverState::initial(instance);
  std::vector<std::uint32_t> selected;
  selected.reserve(target);

  while (selected.size() < target) {
    const std::size_t q = std::min({step, k - selected.size(), state.remaining.size()});
    const std::vector<std::uint32_t> picked = best_combination(instance, state, q);
    state.apply_selection(instance, picked);
    selected.insert(selected.end(), picked.begin(), picked.end());
  }

  return finish(std::move(selected), instance, tag);
}

Solution randomized_greedy_solve(const Instance& instance, std::size_t k,
                                 std::size_t repetitions, std::uint64_t seed) {
  if (repetitions < 1) throw InvalidArgument("repetition count must be >= 1");

  const std::size_t target = selection_target(instance, k);
  Solution best;
  std::vector<std::uint32_t> tie_set;

  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    SplitMix64 rng(mix_seed(seed, rep));
    CoverState state = CoverState::initial(instance);
    std::vector<std::uint32_t> selected;
    selected.reserve(target);

    while (selected.size() < target) {
      std::size_t max_gain = 0;
      bool first = true;
      tie_set.clear();
      for (const std::uint32_t ix : state.remaining) {
        const std::size_t gain =
            BitVec::intersection_count(state.uncovered, instance.set_bits(ix));
        if (first || gain > max_gain) {
          first = false;
          max_gain = gain;
          tie_set.clear();
        }
        if (gain == max_gain) tie_set.push_back(ix);
      }
      const std::uint32_t picked[] = {tie_set[rng.next_below(tie_set.size())]};
      state.apply_selection(instance, picked);
      selected.push_back(picked[0]);
    }

    Solution run = finish(std::move(selected), instance, "");
    if (rep == 0 || run.covered > best.covered) best = std::move(run);
  }

  best.algorithm = "rgreedy:" + std::to_string(repetitions);
  return best;
}

Solution best_of_big_steps(const Instance& instance, std::size_t k,
                           std::span<const std::size_t> steps, std::uint64_t cost_limit) {
  if (steps.empty()) throw InvalidArgument("step list must be non-empty");

  std::string list;
  for (const std::size_t p : steps) {
    if (p < 1) throw InvalidArgument("step size must be >= 1");
    if (!list.empty()) list += ',';
    list += std::to_string(p);
  }
  // Admissibility of every inner run is known up front; refuse before any
  // evaluation work rather than part way through the step list.
  for (const std::size_t p : steps) {
    const CostPrediction predicted = predict_big_step_cost(instance.set_count(), k, p);
    if (predicted.exceeds(cost_limit)) {
      throw CostLimitExceeded(predicted, cost_limit,
                              "bbs:" + list + " inner run bs:" + std::to_string(p));
    }
  }

  Solution best;
  std::size_t winning_step = steps.front();
  bool first = true;
  for (const std::size_t p : steps) {
    Solution candidate = big_step_solve(instance, k, p, cost_limit);
    if (first || candidate.covered > best.covered) {
      first = false;
      winning_step = p;
      best = std::move(candidate);
    }
  }

  best.algorithm = "bbs:" + list + "(p=" + std::to_string(winning_step) + ")";
  return best;
}

Solution best_of_big_steps(const Instance& instance, std::size_t k, std::uint64_t cost_limit) {
  constexpr std::size_t kDefaultSteps[] = {1, 2, 3, 4};
  return best_of_big_steps(instance, k, kDefaultSteps, cost_limit);
}

Solution exact_solve(const Instance& instance, std::size_t k, std::uint64_t cost_limit) {
  const CostPrediction predicted = predict_exact_cost(instance.set_count(), k);
  if (predicted.exceeds(cost_limit)) throw CostLimitExceeded(predicted, cost_limit, "exact");

  const std::size_t target = selection_target(instance, k);
  if (target == 0) return finish({}, instance, "exact");

  std::vector<std::uint32_t> all(instance.set_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);

  CombinationCursor cursor(all, target);
  std::vector<std::uint32_t> tuple(target);
  std::vector<std::uint32_t> best(target);
  std::size_t best_coverage = 0;
  bool first = true;
  while (cursor.next(tuple)) {
    const std::size_t coverage = detail::joint_count(instance, tuple);
    if (first || coverage > best_coverage) {
      first = false;
      best_coverage = coverage;
      best = tuple;
    }
  }

  return finish(std::move(best), instance, "exact");
}

}  // namespace maxcover
