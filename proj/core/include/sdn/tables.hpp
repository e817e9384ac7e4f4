#pragma once

// Lookup tables indexed by one half-frame of ceil(tau / 2) bits.

#include "sdn/memory.hpp"

#include <cstdint>

namespace sdn {

/// Largest supported half-frame, so each table has at most 2^16 entries.
inline constexpr unsigned kTableCap = 16;

/// ceil(tau / 2); throws ConfigError unless 2 <= tau <= 2 * kTableCap.
unsigned half_frame_bits(unsigned tau);

/// entries[z] = number of one bits of z.
class PopcountTable {
public:
  explicit PopcountTable(unsigned half_frame_bits);

  unsigned half_frame_bits() const noexcept { return half_bits_; }
  std::uint64_t size() const noexcept { return entries_.size(); }
  std::uint8_t operator[](std::uint64_t z) const noexcept { return entries_[z]; }

private:
  unsigned half_bits_;
  table_vector<std::uint8_t> entries_;
};

/// entries[e] = sum of the values of the complete self-delimiting codewords
/// obtained by decoding the half_frame_bits bits of e from the most
/// significant end; a trailing partial codeword is ignored.
class PrefixSumTable {
public:
  explicit PrefixSumTable(unsigned half_frame_bits);

  unsigned half_frame_bits() const noexcept { return half_bits_; }
  std::uint64_t size() const noexcept { return entries_.size(); }
  std::uint32_t operator[](std::uint64_t e) const noexcept { return entries_[e]; }

private:
  unsigned half_bits_;
  table_vector<std::uint32_t> entries_;
};

PopcountTable build_popcount_table(unsigned tau);
PrefixSumTable build_prefixsum_table(unsigned tau);

/// Process-wide tables, built once per half-frame size on first use.
const PopcountTable& shared_popcount_table(unsigned half_frame_bits);
const PrefixSumTable& shared_prefixsum_table(unsigned half_frame_bits);

} // namespace sdn
