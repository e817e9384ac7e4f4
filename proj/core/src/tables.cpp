#include "sdn/tables.hpp"

#include "sdn/errors.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <string>

namespace sdn {

unsigned half_frame_bits(unsigned tau) {
  if (tau < 2 || tau > 2 * kTableCap) {
    throw ConfigError("tau must lie in [2, " + std::to_string(2 * kTableCap) + "], got " +
                      std::to_string(tau));
  }
  return (tau + 1) / 2;
}

PopcountTable::PopcountTable(unsigned half_bits) : half_bits_(half_bits) {
  if (half_bits == 0 || half_bits > kTableCap) {
    throw ConfigError("half-frame size out of range: " + std::to_string(half_bits));
  }
  const std::uint64_t n = std::uint64_t{1} << half_bits;
  entries_.resize(n);
  for (std::uint64_t z = 0; z < n; ++z) {
    // Recurrence over the lowest bit keeps construction O(2^h).
    entries_[z] = static_cast<std::uint8_t>((z & 1u) + (z == 0 ? 0 : entries_[z >> 1]));
  }
}

PrefixSumTable::PrefixSumTable(unsigned half_bits) : half_bits_(half_bits) {
  if (half_bits == 0 || half_bits > kTableCap) {
    throw ConfigError("half-frame size out of range: " + std::to_string(half_bits));
  }
  const unsigned h = half_bits;
  const std::uint64_t n = std::uint64_t{1} << h;
  entries_.resize(n);
  for (std::uint64_t e = 0; e < n; ++e) {
    auto bit = [&](unsigned i) { return static_cast<unsigned>((e >> (h - 1 - i)) & 1u); };
    std::uint32_t sum = 0;
    unsigned i = 0;
    while (i < h) {
      unsigned ones = 0;
      while (i + ones < h && bit(i + ones) == 1) {
        ++ones;
      }
      if (ones == 0) {
        ++i;  // codeword "0"
        continue;
      }
      if (i + 2 * ones + 1 > h) {
        break;
      }
      std::uint32_t value = 0;
      for (unsigned j = 0; j < ones; ++j) {
        value = (value << 1) | bit(i + ones + 1 + j);
      }
      sum += value;
      i += 2 * ones + 1;
    }
    entries_[e] = sum;
  }
}

PopcountTable build_popcount_table(unsigned tau) { return PopcountTable(half_frame_bits(tau)); }
PrefixSumTable build_prefixsum_table(unsigned tau) { return PrefixSumTable(half_frame_bits(tau)); }

namespace {

template <class Table>
const Table& shared_table(unsigned half_bits) {
  if (half_bits == 0 || half_bits > kTableCap) {
    throw ConfigError("half-frame size out of range: " + std::to_string(half_bits));
  }
  static std::array<std::once_flag, kTableCap + 1> flags;
  static std::array<std::unique_ptr<Table>, kTableCap + 1> tables;
  std::call_once(flags[half_bits], [&] { tables[half_bits] = std::make_unique<Table>(half_bits); });
  return *tables[half_bits];
}

} // namespace

const PopcountTable& shared_popcount_table(unsigned half_bits) {
  return shared_table<PopcountTable>(half_bits);
}

const PrefixSumTable& shared_prefixsum_table(unsigned half_bits) {
  return shared_table<PrefixSumTable>(half_bits);
}

} // namespace sdn
