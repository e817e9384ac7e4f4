#pragma once

// Bit-sequence container used by every other module.
//
// Bit order: logical bit i lives in word i / 64 at bit position 63 - i % 64,
// i.e. the logically first bit of a word is its most significant bit. A field
// read with read(p, len) therefore returns an integer whose most significant
// of its len bits is logical bit p, and whose least significant bit is bit
// p + len - 1. Codewords, frames, and lookup-table indices all use this one
// convention.

#include "sdn/memory.hpp"

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>

namespace sdn {

inline constexpr std::uint64_t kWordBits = 64;

constexpr std::uint64_t words_for_bits(std::uint64_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Mask of the low `len` bits, len in [0, 64].
constexpr std::uint64_t low_mask(unsigned len) noexcept {
  return len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
}

class BitSequence {
public:
  BitSequence() = default;

  /// All-zero sequence of n_bits bits. O(n_bits / w) word writes.
  explicit BitSequence(std::uint64_t n_bits) : words_(words_for_bits(n_bits), 0), size_(n_bits) {}

  static BitSequence zero_fill(std::uint64_t n_bits) { return BitSequence(n_bits); }

  /// Parses a string of '0'/'1' characters; whitespace is ignored.
  static BitSequence from_string(std::string_view bits);

  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Resizes to n_bits and zeroes the whole sequence, reusing capacity.
  void reset(std::uint64_t n_bits) {
    words_.assign(words_for_bits(n_bits), 0);
    size_ = n_bits;
  }

  /// Grows or shrinks the logical length; new bits are zero.
  void resize(std::uint64_t n_bits);

  bool get(std::uint64_t i) const noexcept {
    assert(i < size_);
    return (words_[i >> 6] >> (63 - (i & 63))) & 1u;
  }
  bool operator[](std::uint64_t i) const noexcept { return get(i); }

  void set(std::uint64_t i, bool v = true) noexcept {
    assert(i < size_);
    const std::uint64_t mask = std::uint64_t{1} << (63 - (i & 63));
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  /// Reads len <= 64 bits starting at p; bit p becomes the most significant.
  std::uint64_t read(std::uint64_t p, unsigned len) const noexcept {
    assert(len <= 64 && p + len <= size_);
    if (len == 0) {
      return 0;
    }
    const std::uint64_t w = p >> 6;
    const unsigned off = static_cast<unsigned>(p & 63);
    std::uint64_t hi = words_[w] << off;
    if (off + len > 64) {
      hi |= words_[w + 1] >> (64 - off);
    }
    return hi >> (64 - len);
  }

  /// Reads up to 64 bits at p, zero-padding past the end of the sequence.
  /// The result is left-aligned: bit p is bit 63 of the returned word.
  std::uint64_t peek_word(std::uint64_t p) const noexcept {
    if (p >= size_) {
      return 0;
    }
    const std::uint64_t w = p >> 6;
    const unsigned off = static_cast<unsigned>(p & 63);
    std::uint64_t v = words_[w] << off;
    if (off != 0 && w + 1 < words_.size()) {
      v |= words_[w + 1] >> (64 - off);
    }
    const std::uint64_t avail = size_ - p;
    if (avail < 64) {
      v &= ~low_mask(static_cast<unsigned>(64 - avail));
    }
    return v;
  }

  /// Writes the low len <= 64 bits of v at p (most significant first).
  void write(std::uint64_t p, unsigned len, std::uint64_t v) noexcept {
    assert(len <= 64 && p + len <= size_);
    if (len == 0) {
      return;
    }
    v &= low_mask(len);
    const std::uint64_t w = p >> 6;
    const unsigned off = static_cast<unsigned>(p & 63);
    const unsigned end = off + len;
    if (end <= 64) {
      const unsigned shift = 64 - end;
      const std::uint64_t mask = low_mask(len) << shift;
      words_[w] = (words_[w] & ~mask) | (v << shift);
    } else {
      const unsigned lo_len = end - 64;          // bits landing in word w + 1
      const unsigned hi_len = len - lo_len;      // bits landing in word w
      const std::uint64_t hi_mask = low_mask(hi_len);
      words_[w] = (words_[w] & ~hi_mask) | (v >> lo_len);
      const unsigned shift = 64 - lo_len;
      const std::uint64_t lo_mask = low_mask(lo_len) << shift;
      words_[w + 1] = (words_[w + 1] & ~lo_mask) | ((v & low_mask(lo_len)) << shift);
    }
  }

  /// Writes `len` copies of bit `v` starting at p.
  void fill(std::uint64_t p, std::uint64_t len, bool v) noexcept;

  /// Number of consecutive one bits starting at p, stopping at `limit`.
  std::uint64_t count_ones_run(std::uint64_t p, std::uint64_t limit) const noexcept;

  /// Number of one bits in [0, size()).
  std::uint64_t popcount() const noexcept;

  const aux_vector<std::uint64_t>& words() const noexcept { return words_; }
  aux_vector<std::uint64_t>& words() noexcept { return words_; }

  /// Bits occupied by the word storage (the figure the memory hook sees).
  std::uint64_t storage_bits() const noexcept { return words_.size() * kWordBits; }

  std::string to_string() const;

  friend bool operator==(const BitSequence& a, const BitSequence& b) noexcept;

private:
  aux_vector<std::uint64_t> words_;
  std::uint64_t size_ = 0;
};

/// Copies len bits from src[src_pos..) to dst[dst_pos..).
void copy_bits(const BitSequence& src, std::uint64_t src_pos, BitSequence& dst,
               std::uint64_t dst_pos, std::uint64_t len) noexcept;

/// True if the len-bit ranges a[a_pos..) and b[b_pos..) hold the same bits.
bool equal_bits(const BitSequence& a, std::uint64_t a_pos, const BitSequence& b,
                std::uint64_t b_pos, std::uint64_t len) noexcept;

/// Lexicographic comparison of two equal-length bit ranges: <0, 0, >0.
int compare_bits(const BitSequence& a, std::uint64_t a_pos, const BitSequence& b,
                 std::uint64_t b_pos, std::uint64_t len) noexcept;

/// Fixed-width unsigned integers packed back to back in a BitSequence.
class PackedArray {
public:
  PackedArray() = default;
  PackedArray(std::uint64_t count, unsigned width)
      : bits_(count * width), count_(count), width_(width) {
    assert(width <= 64);
  }

  void reset(std::uint64_t count, unsigned width) {
    assert(width <= 64);
    bits_.reset(count * width);
    count_ = count;
    width_ = width;
  }

  std::uint64_t size() const noexcept { return count_; }
  unsigned width() const noexcept { return width_; }

  std::uint64_t get(std::uint64_t i) const noexcept {
    assert(i < count_);
    return bits_.read(i * width_, width_);
  }
  std::uint64_t operator[](std::uint64_t i) const noexcept { return get(i); }

  void set(std::uint64_t i, std::uint64_t v) noexcept {
    assert(i < count_);
    assert(width_ == 64 || v <= low_mask(width_));
    bits_.write(i * width_, width_, v);
  }

  const BitSequence& bits() const noexcept { return bits_; }
  std::uint64_t storage_bits() const noexcept { return bits_.storage_bits(); }

private:
  BitSequence bits_;
  std::uint64_t count_ = 0;
  unsigned width_ = 0;
};

/// Bits needed to store any value in [0, v]; at least 1.
constexpr unsigned bits_for(std::uint64_t v) noexcept {
  return v == 0 ? 1u : static_cast<unsigned>(std::bit_width(v));
}

} // namespace sdn
