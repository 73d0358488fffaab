#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maxcover/bitvec.hpp"
#include "maxcover/errors.hpp"

namespace maxcover {

/// A maximum-coverage problem input: a universe of dense element ids
/// [0, universe_size) and an ordered collection of element sets. Set order is
/// significant and stable; index i names the i-th set of the collection.
/// Duplicate sets across indices are legal, duplicate elements within one set
/// are not. Immutable after construction and safe to share across threads.
class Instance {
 public:
  Instance() = default;

  /// Throws InvalidInstance on an element id >= universe_size or a duplicate
  /// element within one set.
  Instance(std::uint32_t universe_size, const std::vector<std::vector<std::uint32_t>>& sets);

  std::uint32_t universe_size() const { return universe_size_; }
  std::size_t set_count() const { return sets_.size(); }

  const BitVec& set_bits(std::size_t index) const { return sets_[index]; }
  std::size_t set_size(std::size_t index) const { return sets_[index].count(); }

  /// Elements of one set in ascending order.
  std::vector<std::uint32_t> set_elements(std::size_t index) const {
    return sets_[index].to_indices();
  }

  /// Union of every set in the collection.
  BitVec union_of_all() const;

  bool operator==(const Instance&) const = default;

 private:
  std::uint32_t universe_size_ = 0;
  std::vector<BitVec> sets_;
};

/// One algorithm run's output: the selected set indices in selection order,
/// the achieved coverage, and a tag naming the producing algorithm and its
/// parameters (e.g. "greedy", "bs:2", "rgreedy:20").
struct Solution {
  std::vector<std::uint32_t> selected;
  std::size_t covered = 0;
  std::string algorithm;
};

/// Mutable working state of one solver run: the still-uncovered elements
/// (seeded from the union of all sets) and the not-yet-selected set indices,
/// kept ascending. Solver-local; never shared.
struct CoverState {
  BitVec uncovered;
  std::vector<std::uint32_t> remaining;

  static CoverState initial(const Instance& instance);

  /// Removes the picked sets' elements from `uncovered` and the picked
  /// indices from `remaining`. `picked` must be ascending.
  void apply_selection(const Instance& instance, std::span<const std::uint32_t> picked);
};

/// |union of the named sets|; 0 for an empty index list.
/// Throws IndexOutOfRange / DuplicateIndex.
std::size_t coverage_of(const Instance& instance, std::span<const std::uint32_t> indices);

/// |uncovered ∩ union of the named sets|. `uncovered` must have the
/// instance's universe width. Throws like coverage_of, InvalidArgument on a
/// width mismatch.
std::size_t marginal_gain(const Instance& instance, const BitVec& uncovered,
                          std::span<const std::uint32_t> indices);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Checks every Solution invariant against the instance: index range,
/// distinctness, and the recomputed coverage. Failures are report entries,
/// never exceptions.
ValidationReport validate_solution(const Instance& instance, const Solution& solution);

namespace detail {

/// |∪ sets[indices]| with no allocation and no validation.
std::size_t joint_count(const Instance& instance, std::span<const std::uint32_t> indices);

/// |mask ∩ ∪ sets[indices]| with no allocation and no validation.
std::size_t joint_gain(const BitVec& mask, const Instance& instance,
                       std::span<const std::uint32_t> indices);

}  // namespace detail

}  // namespace maxcover
