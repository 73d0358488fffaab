#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "maxcover/instance.hpp"

namespace maxcover {

/// Parameters of one random-instance family: universe size |X|, collection
/// size n, target mean set cardinality, the selection budget k the family is
/// benchmarked with, the number of instances, and the family's master seed.
struct GenSpec {
  std::uint32_t universe_size = 0;
  std::uint32_t num_sets = 0;
  std::uint32_t avg_set_size = 0;
  std::uint32_t k = 1;
  std::uint32_t num_problems = 1;
  std::uint64_t seed = 0;

  /// Throws InvalidSpec unless universe_size >= 1, num_sets >= 1,
  /// 1 <= avg_set_size <= universe_size, k >= 1, num_problems >= 1.
  void validate() const;

  /// Compact deterministic family label, e.g. "u1000n150m40k10".
  std::string family_tag() const;
};

/// Draws instance `problem_index` of the family: each set includes each
/// element independently with probability avg_set_size / universe_size, and
/// empty sets are redrawn until non-empty. A pure function of
/// (spec, problem_index); the per-instance stream is seeded with
/// mix_seed(spec.seed, problem_index). The Bernoulli test compares a 64-bit
/// draw against floor(2^64 * avg_set_size / universe_size), so no floating
/// point is involved and corpora are identical across platforms.
Instance generate_instance(const GenSpec& spec, std::uint32_t problem_index);

/// File naming convention for generated corpora: "<tag>_<index>.mcp".
std::string instance_file_name(std::string_view family_tag, std::uint32_t problem_index);

}  // namespace maxcover
