#pragma once

#include <cstdint>

namespace maxcover {

// All randomness in this library flows through splitmix64 (Steele, Lea &
// Flood, "Fast Splittable Pseudorandom Number Generators", OOPSLA 2014):
// the state walks the golden-ratio gamma sequence and each output is one
// finalizer pass. The generator is tiny, portable, and produces identical
// streams on every platform, which is what makes generated corpora and
// randomized-solver runs reproducible bit for bit.

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += kSplitMix64Gamma;
    return splitmix64_finalize(state_);
  }

  /// Unbiased draw in [0, bound). `bound` must be >= 1.
  constexpr std::uint64_t next_below(std::uint64_t bound) {
    // Reject the short tail so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Deterministic sub-seed derivation: mix_seed(seed, i) equals the (i+1)-th
/// output of SplitMix64{seed}, computed in O(1). Repetitions, problem
/// indices, and algorithm slots each get an independent, reproducible seed
/// regardless of evaluation order.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64_finalize(seed + (index + 1) * kSplitMix64Gamma);
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix_seed(mix_seed(seed, a), b);
}

}  // namespace maxcover
