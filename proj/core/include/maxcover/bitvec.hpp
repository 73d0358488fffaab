#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace maxcover {

/// Fixed-width bit array over 64-bit words: element membership for a dense
/// integer universe [0, size). Union and popcount are the primitives the
/// solver inner loops spend essentially all their time in, so everything
/// here is word-at-a-time with no hidden allocation.
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(std::size_t bit_count)
      : bits_(bit_count), words_((bit_count + 63) / 64, 0) {}

  /// Universe width in bits (not the number of set bits).
  std::size_t size() const { return bits_; }

  /// Number of set bits.
  std::size_t count() const {
    std::size_t total = 0;
    for (const std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool test(std::size_t i) const {
    assert(i < bits_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < bits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < bits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool any() const {
    for (const std::uint64_t w : words_)
      if (w != 0) return true;
    return false;
  }

  bool none() const { return !any(); }

  BitVec& operator|=(const BitVec& other) {
    assert(bits_ == other.bits_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  BitVec& operator&=(const BitVec& other) {
    assert(bits_ == other.bits_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }

  /// Removes every member of `other` from this set (this \ other).
  BitVec& and_not(const BitVec& other) {
    assert(bits_ == other.bits_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
  }

  friend BitVec operator|(BitVec a, const BitVec& b) {
    a |= b;
    return a;
  }

  friend BitVec operator&(BitVec a, const BitVec& b) {
    a &= b;
    return a;
  }

  bool operator==(const BitVec&) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

  /// Members in ascending order.
  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  static std::size_t intersection_count(const BitVec& a, const BitVec& b) {
    assert(a.bits_ == b.bits_);
    std::size_t total = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w)
      total += static_cast<std::size_t>(std::popcount(a.words_[w] & b.words_[w]));
    return total;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace maxcover
