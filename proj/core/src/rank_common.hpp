#pragma once

// Helpers shared by the two rank structures.

#include "sdn/codec.hpp"
#include "sdn/rank.hpp"
#include "sdn/sort.hpp"

#include <bit>
#include <cstdint>

namespace sdn::detail {

inline unsigned rank_frame_bits(std::uint64_t n_bits, const RankConfig& cfg) {
  return sort_parameters(n_bits, SortConfig{cfg.tau, 0}).half_bits;
}

/// True if the codeword's value exceeds n; n_width = bit_width(n).
inline bool exceeds(const BitSequence& bits, const Codeword& cw, std::uint64_t n, unsigned n_width) noexcept {
  if (cw.payload_bits != n_width) {
    return cw.payload_bits > n_width;
  }
  return codeword_value_u64(bits, cw) > n;
}

inline std::uint64_t round_up(std::uint64_t v, std::uint64_t m) noexcept { return (v + m - 1) / m * m; }

/// Visits the values of s that exceed N = s.size_bits() in ascending order,
/// stably, as visit(position, index, first_index_of_equal_run,
/// distinct_values_before).
template <class Visit>
void for_each_big_sorted(const SdnSequence& s, SdnSorter& sorter, Visit&& visit) {
  const std::uint64_t n = s.size_bits();
  const auto n_width = static_cast<unsigned>(std::bit_width(n));
  const BitSequence& bits = s.bits();
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  for (const Codeword& cw : s) {
    if (exceeds(bits, cw, n, n_width)) {
      ++count;
      total += cw.length();
    }
  }
  if (count == 0) {
    return;
  }
  BitSequence extracted(total);
  PackedArray positions(count, bits_for(n));
  std::uint64_t at = 0;
  std::uint64_t i = 0;
  for (const Codeword& cw : s) {
    if (exceeds(bits, cw, n, n_width)) {
      copy_bits(bits, cw.position, extracted, at, cw.length());
      positions.set(i++, cw.position);
      at += cw.length();
    }
  }
  BitSequence sorted(total);
  sorter.sort_range(extracted, 0, total, sorted, 0, &positions);

  Codeword prev{};
  std::uint64_t run_start = 0;
  std::uint64_t distinct = 0;
  at = 0;
  for (std::uint64_t t = 0; t < count; ++t) {
    const Codeword cw = scan_codeword(sorted, at, total);
    if (t > 0 && compare_codewords(sorted, prev, sorted, cw) != 0) {
      run_start = t;
      ++distinct;
    }
    visit(positions.get(t), t, run_start, distinct);
    prev = cw;
    at = cw.end();
  }
}

} // namespace sdn::detail
