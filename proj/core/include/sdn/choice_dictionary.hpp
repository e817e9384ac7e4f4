#pragma once

// Subset of [0, n) supporting add, remove, contains, choice and ordered
// iteration. Stored as a bitmap plus a summary bitmap per level (one bit per
// nonzero word below), about 1.02 n bits in total; every operation touches
// one word per level, i.e. O(log n / log w) words.

#include "sdn/memory.hpp"

#include <array>
#include <cstdint>

namespace sdn {

class ChoiceDictionary {
public:
  static constexpr std::uint64_t npos = ~std::uint64_t{0};

  ChoiceDictionary() = default;
  explicit ChoiceDictionary(std::uint64_t universe);

  std::uint64_t universe() const noexcept { return universe_; }
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(std::uint64_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  /// Returns true if i was not yet a member.
  bool add(std::uint64_t i) noexcept;
  /// Returns true if i was a member.
  bool remove(std::uint64_t i) noexcept;

  /// Some member (the smallest), npos when empty.
  std::uint64_t choice() const noexcept { return size_ == 0 ? npos : next(0); }
  /// Smallest member >= i, npos if none.
  std::uint64_t next(std::uint64_t i) const noexcept;

  /// Removes all members; O(n / w).
  void clear() noexcept;

  std::uint64_t storage_bits() const noexcept { return words_.size() * 64; }

private:
  static constexpr unsigned kMaxLevels = 12;

  std::uint64_t* level(unsigned l) noexcept { return words_.data() + offset_[l]; }
  const std::uint64_t* level(unsigned l) const noexcept { return words_.data() + offset_[l]; }

  std::uint64_t universe_ = 0;
  std::uint64_t size_ = 0;
  unsigned levels_ = 0;
  std::array<std::uint64_t, kMaxLevels + 1> offset_{};
  std::array<std::uint64_t, kMaxLevels> count_{};  // words per level
  aux_vector<std::uint64_t> words_;
};

} // namespace sdn
