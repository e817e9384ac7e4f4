#pragma once

// Self-delimiting numbers: 0 is the single bit 0; x > 0 is 1^l 0 bin(x)
// where bin(x) is the l-bit binary representation of x without leading
// zeros. Codewords of one sequence are stored back to back.

#include "sdn/bits.hpp"
#include "sdn/natural.hpp"

#include <bit>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

namespace sdn {

/// Location of one codeword: its first bit and its payload width l (0 for
/// the value 0).
struct Codeword {
  std::uint64_t position = 0;
  std::uint64_t payload_bits = 0;

  std::uint64_t length() const noexcept { return payload_bits == 0 ? 1 : 2 * payload_bits + 1; }
  std::uint64_t end() const noexcept { return position + length(); }
  std::uint64_t payload_position() const noexcept { return position + payload_bits + 1; }
};

constexpr std::uint64_t codeword_length_for_width(std::uint64_t payload_bits) noexcept {
  return payload_bits == 0 ? 1 : 2 * payload_bits + 1;
}

constexpr std::uint64_t encoded_length(std::uint64_t x) noexcept {
  return codeword_length_for_width(static_cast<std::uint64_t>(std::bit_width(x)));
}
std::uint64_t encoded_length(const Natural& x) noexcept;

BitSequence encode(std::uint64_t x);
BitSequence encode(const Natural& x);

/// Writes the codeword of x at pos (the caller guarantees room) and returns
/// the position one past it.
inline std::uint64_t write_codeword(BitSequence& bits, std::uint64_t pos, std::uint64_t x) noexcept {
  const auto ell = static_cast<unsigned>(std::bit_width(x));
  if (ell == 0) {
    bits.set(pos, false);
    return pos + 1;
  }
  if (ell <= 31) {
    // ones, separator and payload fit one 63-bit write
    const std::uint64_t prefix = low_mask(ell) << 1;
    bits.write(pos, 2 * ell + 1, (prefix << ell) | x);
  } else {
    bits.fill(pos, ell, true);
    bits.set(pos + ell, false);
    bits.write(pos + ell + 1, ell, x);
  }
  return pos + 2 * ell + 1;
}
std::uint64_t write_codeword(BitSequence& bits, std::uint64_t pos, const Natural& x);

[[noreturn]] void throw_corrupt(std::uint64_t position, const char* what);

/// Locates the codeword starting at p inside [p, end). Throws CorruptSequence
/// when the unary prefix or the payload runs past end, or when the payload
/// has a leading zero.
inline Codeword scan_codeword(const BitSequence& bits, std::uint64_t p, std::uint64_t end) {
  if (p >= end) {
    throw_corrupt(p, "no codeword starts at or after the end of the sequence");
  }
  std::uint64_t ell = static_cast<std::uint64_t>(std::countl_one(bits.peek_word(p)));
  if (ell == 64) {
    ell = bits.count_ones_run(p, end);
  }
  if (ell == 0) {
    return {p, 0};
  }
  if (p + 2 * ell + 1 > end) {
    throw_corrupt(p, "codeword runs past the end of the sequence");
  }
  if (!bits.get(p + ell + 1)) {
    throw_corrupt(p, "payload has a leading zero");
  }
  return {p, ell};
}

/// Value of a codeword whose payload fits a machine word (l <= 64).
inline std::uint64_t codeword_value_u64(const BitSequence& bits, const Codeword& cw) noexcept {
  return cw.payload_bits == 0 ? 0 : bits.read(cw.payload_position(), static_cast<unsigned>(cw.payload_bits));
}
Natural codeword_value(const BitSequence& bits, const Codeword& cw);

struct Decoded {
  Natural value;
  std::uint64_t next = 0;
};

/// A bit sequence of fixed capacity holding k codewords back to back from bit
/// 0 up to the write cursor. N, the sequence length, is the cursor.
class SdnSequence {
public:
  class const_iterator;

  SdnSequence() = default;
  explicit SdnSequence(std::uint64_t capacity_bits) : bits_(capacity_bits) {}

  static SdnSequence from_values(std::span<const std::uint64_t> values);
  static SdnSequence from_naturals(std::span<const Natural> values);
  /// Validates bits as a concatenation of codewords filling it exactly.
  static SdnSequence from_bits(BitSequence bits);
  /// Takes bits whose first n_bits hold exactly count codewords; not
  /// validated.
  static SdnSequence adopt(BitSequence bits, std::uint64_t count, std::uint64_t n_bits);

  /// Empties the sequence and sets a new capacity, reusing storage.
  void reset(std::uint64_t capacity_bits) {
    bits_.reset(capacity_bits);
    count_ = 0;
    cursor_ = 0;
  }

  std::uint64_t size_bits() const noexcept { return cursor_; }
  std::uint64_t capacity_bits() const noexcept { return bits_.size(); }
  std::uint64_t remaining_bits() const noexcept { return bits_.size() - cursor_; }
  std::uint64_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  /// Appends x and returns the position of its codeword. Throws ContainerFull
  /// if the remaining capacity is too small.
  std::uint64_t append(std::uint64_t x) {
    const std::uint64_t len = encoded_length(x);
    if (len > remaining_bits()) {
      throw_full(len);
    }
    const std::uint64_t p = cursor_;
    cursor_ = write_codeword(bits_, p, x);
    ++count_;
    return p;
  }
  std::uint64_t append(const Natural& x);
  /// Appends a copy of the codeword cw of src.
  std::uint64_t append_codeword(const BitSequence& src, const Codeword& cw);

  Codeword codeword_at(std::uint64_t p) const { return scan_codeword(bits_, p, cursor_); }
  Decoded decode_at(std::uint64_t p) const;

  const BitSequence& bits() const noexcept { return bits_; }

  const_iterator begin() const;
  const_iterator end() const;

  std::vector<Natural> values() const;
  /// Throws PreconditionViolation if some value needs more than 64 bits.
  std::vector<std::uint64_t> values_u64() const;

  friend bool operator==(const SdnSequence& a, const SdnSequence& b) noexcept;

private:
  [[noreturn]] void throw_full(std::uint64_t needed) const;

  BitSequence bits_;
  std::uint64_t count_ = 0;
  std::uint64_t cursor_ = 0;
};

/// Forward iteration over the codewords of a sequence in storage order.
class SdnSequence::const_iterator {
public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = Codeword;
  using difference_type = std::ptrdiff_t;
  using pointer = const Codeword*;
  using reference = const Codeword&;

  const_iterator() = default;
  const_iterator(const SdnSequence* seq, std::uint64_t pos) : seq_(seq), cw_{pos, 0} { load(); }

  reference operator*() const noexcept { return cw_; }
  pointer operator->() const noexcept { return &cw_; }
  const_iterator& operator++() {
    cw_.position = cw_.end();
    load();
    return *this;
  }
  const_iterator operator++(int) {
    auto tmp = *this;
    ++*this;
    return tmp;
  }
  friend bool operator==(const const_iterator& a, const const_iterator& b) noexcept {
    return a.cw_.position == b.cw_.position;
  }

private:
  void load() {
    if (seq_ != nullptr && cw_.position < seq_->size_bits()) {
      cw_ = seq_->codeword_at(cw_.position);
    } else {
      cw_.payload_bits = 0;
    }
  }

  const SdnSequence* seq_ = nullptr;
  Codeword cw_{};
};

inline SdnSequence::const_iterator SdnSequence::begin() const { return {this, 0}; }
inline SdnSequence::const_iterator SdnSequence::end() const { return {this, cursor_}; }

inline Decoded decode_at(const SdnSequence& s, std::uint64_t p) { return s.decode_at(p); }

} // namespace sdn
