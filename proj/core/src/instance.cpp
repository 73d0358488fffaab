#include "maxcover/instance.hpp"

#include <algorithm>
#include <bit>

namespace maxcover {

Instance::Instance(std::uint32_t universe_size,
                   const std::vector<std::vector<std::uint32_t>>& sets)
    : universe_size_(universe_size) {
  sets_.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    BitVec bits(universe_size);
    for (const std::uint32_t e : sets[i]) {
      if (e >= universe_size) {
        throw InvalidInstance("set " + std::to_string(i) + ": element id " + std::to_string(e) +
                              " >= universe size " + std::to_string(universe_size));
      }
      if (bits.test(e)) {
        throw InvalidInstance("set " + std::to_string(i) + ": duplicate element " +
                              std::to_string(e));
      }
      bits.set(e);
    }
    sets_.push_back(std::move(bits));
  }
}

BitVec Instance::union_of_all() const {
  BitVec all(universe_size_);
  for (const BitVec& s : sets_) all |= s;
  return all;
}

CoverState CoverState::initial(const Instance& instance) {
  CoverState state;
  state.uncovered = instance.union_of_all();
  state.remaining.resize(instance.set_count());
  for (std::size_t i = 0; i < state.remaining.size(); ++i)
    state.remaining[i] = static_cast<std::uint32_t>(i);
  return state;
}

void CoverState::apply_selection(const Instance& instance,
                                 std::span<const std::uint32_t> picked) {
  for (const std::uint32_t ix : picked) uncovered.and_not(instance.set_bits(ix));
  // Both sequences are ascending: one merge pass.
  std::size_t out = 0, p = 0;
  for (std::size_t r = 0; r < remaining.size(); ++r) {
    if (p < picked.size() && remaining[r] == picked[p]) {
      ++p;
      continue;
    }
    remaining[out++] = remaining[r];
  }
  remaining.resize(out);
}

namespace {

void check_indices(const Instance& instance, std::span<const std::uint32_t> indices) {
  std::vector<std::uint32_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= instance.set_count()) {
      throw IndexOutOfRange("set index " + std::to_string(sorted[i]) + " >= set count " +
                            std::to_string(instance.set_count()));
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw DuplicateIndex("set index " + std::to_string(sorted[i]) + " appears more than once");
    }
  }
}

}  // namespace

std::size_t coverage_of(const Instance& instance, std::span<const std::uint32_t> indices) {
  check_indices(instance, indices);
  return detail::joint_count(instance, indices);
}

std::size_t marginal_gain(const Instance& instance, const BitVec& uncovered,
                          std::span<const std::uint32_t> indices) {
  if (uncovered.size() != instance.universe_size()) {
    throw InvalidArgument("uncovered set width " + std::to_string(uncovered.size()) +
                          " != universe size " + std::to_string(instance.universe_size()));
  }
  check_indices(instance, indices);
  return detail::joint_gain(uncovered, instance, indices);
}

ValidationReport validate_solution(const Instance& instance, const Solution& solution) {
  ValidationReport report;

  bool in_range = true;
  std::string range_detail;
  for (const std::uint32_t ix : solution.selected) {
    if (ix >= instance.set_count()) {
      in_range = false;
      range_detail = "index " + std::to_string(ix) + " >= set count " +
                     std::to_string(instance.set_count());
      break;
    }
  }
  report.checks.push_back({"index-range", in_range, range_detail});

  std::vector<std::uint32_t> sorted(solution.selected.begin(), solution.selected.end());
  std::sort(sorted.begin(), sorted.end());
  bool distinct = true;
  std::string distinct_detail;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      distinct = false;
      distinct_detail = "duplicate index " + std::to_string(sorted[i]);
      break;
    }
  }
  report.checks.push_back({"distinct", distinct, distinct_detail});

  bool coverage_ok = false;
  std::string coverage_detail;
  if (!in_range) {
    coverage_detail = "cannot recompute: selection has out-of-range indices";
  } else {
    const std::size_t recomputed = detail::joint_count(instance, solution.selected);
    coverage_ok = recomputed == solution.covered;
    if (!coverage_ok) {
      coverage_detail = "covered_count " + std::to_string(solution.covered) + " != recomputed " +
                        std::to_string(recomputed);
    }
  }
  report.checks.push_back({"coverage", coverage_ok, coverage_detail});

  return report;
}

namespace detail {

std::size_t joint_count(const Instance& instance, std::span<const std::uint32_t> indices) {
  if (indices.empty()) return 0;
  const std::size_t words = instance.set_bits(indices.front()).words().size();
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t u = 0;
    for (const std::uint32_t ix : indices) u |= instance.set_bits(ix).words()[w];
    total += static_cast<std::size_t>(std::popcount(u));
  }
  return total;
}

std::size_t joint_gain(const BitVec& mask, const Instance& instance,
                       std::span<const std::uint32_t> indices) {
  const auto mask_words = mask.words();
  std::size_t total = 0;
  for (std::size_t w = 0; w < mask_words.size(); ++w) {
    std::uint64_t u = 0;
    for (const std::uint32_t ix : indices) u |= instance.set_bits(ix).words()[w];
    total += static_cast<std::size_t>(std::popcount(u & mask_words[w]));
  }
  return total;
}

}  // namespace detail

}  // namespace maxcover
