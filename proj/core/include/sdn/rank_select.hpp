#pragma once

#include "sdn/bits.hpp"

#include <cstdint>

namespace sdn {

/// Two-level rank directory with sampled select over an immutable bit
/// sequence that the index owns.
///
/// Indexing conventions:
///  - rank(j) counts the ones among the first j bits, i.e. bits [0, j) in
///    0-based terms, which equals the 1-based rank over bits 1..j.
///  - select(k) returns the 0-based position of the k-th one (k >= 1);
///    select_one_based(k) returns the same position counted from 1.
///
/// Layout: one 64-bit absolute count per 512-bit superblock, one 16-bit count
/// per word relative to its superblock, and one sample per 512 ones recording
/// the superblock holding that one. At most 0.44 extra bits per input bit.
class RankSelectIndex {
public:
  static constexpr std::uint64_t npos = ~std::uint64_t{0};

  RankSelectIndex() = default;
  explicit RankSelectIndex(BitSequence bits);

  const BitSequence& bits() const noexcept { return bits_; }
  std::uint64_t size() const noexcept { return bits_.size(); }
  std::uint64_t ones() const noexcept { return ones_; }

  /// Ones in [0, j), j in [0, size()].
  std::uint64_t rank(std::uint64_t j) const noexcept {
    if (j >= bits_.size()) {
      return ones_;
    }
    const std::uint64_t w = j >> 6;
    std::uint64_t r = super_[w >> 3] + rel_[w];
    const unsigned off = static_cast<unsigned>(j & 63);
    if (off != 0) {
      r += static_cast<std::uint64_t>(std::popcount(bits_.words()[w] >> (64 - off)));
    }
    return r;
  }

  std::uint64_t rank0(std::uint64_t j) const noexcept { return (j > size() ? size() : j) - rank(j); }

  /// 0-based position of the k-th one, k in [1, ones()]; npos otherwise.
  std::uint64_t select(std::uint64_t k) const noexcept;

  std::uint64_t select_one_based(std::uint64_t k) const noexcept {
    const auto p = select(k);
    return p == npos ? npos : p + 1;
  }

  /// Bits used by the directory, excluding the indexed sequence itself.
  std::uint64_t index_bits() const noexcept;

private:
  BitSequence bits_;
  aux_vector<std::uint64_t> super_;
  aux_vector<std::uint16_t> rel_;
  aux_vector<std::uint32_t> samples_;
  std::uint64_t ones_ = 0;
};

inline RankSelectIndex build_rank_select(BitSequence bits) { return RankSelectIndex(std::move(bits)); }

/// Position (0..63, from the most significant end) of the k-th one in word,
/// k in [1, popcount(word)].
unsigned select_in_word(std::uint64_t word, unsigned k) noexcept;

} // namespace sdn
