#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maxcover/errors.hpp"

namespace maxcover {

/// binomial(n, q) when it fits in 64 bits, std::nullopt on overflow.
/// binomial(n, 0) == 1 and binomial(n, q) == 0 for q > n.
std::optional<std::uint64_t> combination_count(std::uint64_t n, std::uint64_t q);

/// Streams the q-element subsets of an ordered candidate list in
/// lexicographic order over candidate positions; every emitted tuple keeps
/// the candidates' own order. Constant memory per step: the full sequence is
/// never materialized (C(150,4) is ~2e7 tuples at benchmark scale).
///
/// The cursor holds a view of the candidate list, which must outlive it.
/// Single consumer; independent cursors over the same list are safe, emit
/// identical sequences, and may each cover one lexicographic chunk so chunk
/// streams concatenate to exactly the full stream.
class CombinationCursor {
 public:
  /// Throws InvalidArity unless 1 <= q <= candidates.size().
  CombinationCursor(std::span<const std::uint32_t> candidates, std::size_t q);

  /// Cursor over the `chunk_index`-th of `chunk_count` near-equal
  /// lexicographic slices. Throws InvalidArgument when chunk_index >=
  /// chunk_count or when the total tuple count overflows 64 bits.
  CombinationCursor(std::span<const std::uint32_t> candidates, std::size_t q,
                    std::uint64_t chunk_index, std::uint64_t chunk_count);

  /// Writes the next tuple's candidate values into `out` (size >= q).
  /// Returns false once the stream is exhausted.
  bool next(std::span<std::uint32_t> out);

  std::size_t arity() const { return q_; }

  /// Rewinds to the start of this cursor's range.
  void reset();

 private:
  void seek(std::uint64_t rank);

  std::span<const std::uint32_t> candidates_;
  std::size_t q_ = 0;
  std::vector<std::uint32_t> positions_;
  bool done_ = false;
  bool bounded_ = false;
  std::uint64_t start_rank_ = 0;
  std::uint64_t emissions_left_ = 0;
  std::uint64_t chunk_size_ = 0;
};

}  // namespace maxcover
