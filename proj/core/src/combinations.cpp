#include "maxcover/combinations.hpp"

#include <limits>

namespace maxcover {

std::optional<std::uint64_t> combination_count(std::uint64_t n, std::uint64_t q) {
  if (q > n) return 0;
  if (q > n - q) q = n - q;
  if (q == 0) return 1;
  // Multiplicative form; each partial product is itself a binomial
  // coefficient, so the division is exact at every step.
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= q; ++i) {
    result = result * (n - q + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(result);
}

CombinationCursor::CombinationCursor(std::span<const std::uint32_t> candidates, std::size_t q)
    : candidates_(candidates), q_(q) {
  if (q < 1 || q > candidates.size()) {
    throw InvalidArity("combination size " + std::to_string(q) + " outside [1, " +
                       std::to_string(candidates.size()) + "]");
  }
  positions_.resize(q);
  reset();
}

CombinationCursor::CombinationCursor(std::span<const std::uint32_t> candidates, std::size_t q,
                                     std::uint64_t chunk_index, std::uint64_t chunk_count)
    : CombinationCursor(candidates, q) {
  if (chunk_count == 0 || chunk_index >= chunk_count) {
    throw InvalidArgument("chunk index " + std::to_string(chunk_index) + " outside [0, " +
                          std::to_string(chunk_count) + ")");
  }
  const auto total = combination_count(candidates.size(), q);
  if (!total) {
    throw InvalidArgument("combination count overflows 64 bits; range split unavailable");
  }
  const auto slice = [&](std::uint64_t i) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(*total) * i / chunk_count);
  };
  bounded_ = true;
  start_rank_ = slice(chunk_index);
  chunk_size_ = slice(chunk_index + 1) - start_rank_;
  reset();
}

void CombinationCursor::reset() {
  done_ = false;
  if (bounded_) {
    emissions_left_ = chunk_size_;
    if (emissions_left_ == 0) {
      done_ = true;
      return;
    }
    seek(start_rank_);
    return;
  }
  for (std::size_t i = 0; i < q_; ++i) positions_[i] = static_cast<std::uint32_t>(i);
}

void CombinationCursor::seek(std::uint64_t rank) {
  // Combinatorial number system unranking: every sub-binomial is bounded by
  // the (64-bit) total, so the counts below never overflow.
  const std::uint64_t n = candidates_.size();
  std::uint32_t c = 0;
  for (std::size_t slot = 0; slot < q_; ++slot) {
    for (;;) {
      const std::uint64_t with_c = *combination_count(n - 1 - c, q_ - 1 - slot);
      if (rank < with_c) {
        positions_[slot] = c;
        ++c;
        break;
      }
      rank -= with_c;
      ++c;
    }
  }
}

bool CombinationCursor::next(std::span<std::uint32_t> out) {
  if (done_) return false;
  for (std::size_t i = 0; i < q_; ++i) out[i] = candidates_[positions_[i]];

  if (bounded_ && --emissions_left_ == 0) {
    done_ = true;
    return true;
  }

  // Advance: bump the rightmost position that still has room, then pack the
  // tail right behind it.
  const std::size_t n = candidates_.size();
  std::size_t i = q_;
  while (i-- > 0) {
    if (positions_[i] + (q_ - i) < n) {
      std::uint32_t value = positions_[i] + 1;
      for (std::size_t j = i; j < q_; ++j) positions_[j] = value++;
      return true;
    }
  }
  done_ = true;
  return true;
}

}  // namespace maxcover
