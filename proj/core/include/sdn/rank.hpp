#pragma once

// Dense and competitive rank over the values of a self-delimiting sequence.
//
// Values in [0, N] (N = sequence length in bits) are small and answered from
// frame-level structures of ceil(tau / 2)-bit frames with one table lookup.
// Larger values are at most N / log N in number; their ranks are computed at
// build time and written into an N-bit overlay at the codeword's position,
// which is safe because such a codeword is longer than the rank field.

#include "sdn/bits.hpp"
#include "sdn/codec.hpp"
#include "sdn/rank_select.hpp"
#include "sdn/sort.hpp"
#include "sdn/tables.hpp"

#include <cstdint>

namespace sdn {

struct RankConfig {
  /// Same meaning as SortConfig::tau.
  unsigned tau = 0;
};

/// Optional per-query instrumentation. directory_reads counts region
/// directory slots, frame_reads counts reads of frame-sized fields (bit
/// frames and per-frame prefix entries), table_lookups counts POPCNT and
/// PREFIXSUM accesses.
struct QueryCounters {
  std::uint64_t directory_reads = 0;
  std::uint64_t selects = 0;
  std::uint64_t frame_reads = 0;
  std::uint64_t table_lookups = 0;
};

/// Queries take the position p_x of a codeword of x in the indexed sequence
/// and x itself. Querying a value that does not occur at p_x is outside the
/// contract and returns an unspecified number.
class DenseRankStructure {
public:
  DenseRankStructure() = default;

  std::uint64_t rank(std::uint64_t p_x, std::uint64_t x, QueryCounters* counters = nullptr) const noexcept;
  std::uint64_t rank(std::uint64_t p_x, const Natural& x, QueryCounters* counters = nullptr) const noexcept;
  /// Decodes the codeword at p_x of s (the indexed sequence) and ranks it.
  std::uint64_t rank_at(const SdnSequence& s, std::uint64_t p_x, QueryCounters* counters = nullptr) const;

  std::uint64_t n_bits() const noexcept { return n_; }
  unsigned frame_bits() const noexcept { return h_; }
  /// Number of distinct values in the indexed sequence.
  std::uint64_t distinct() const noexcept { return distinct_; }
  /// Bits held by the structure, excluding the shared tables.
  std::uint64_t space_bits() const noexcept;

private:
  friend DenseRankStructure build_dense_rank(const SdnSequence&, const RankConfig&, SdnSorter*);

  std::uint64_t small_rank(std::uint64_t x, QueryCounters* counters) const noexcept;
  std::uint64_t big_rank(std::uint64_t p_x, QueryCounters* counters) const noexcept;

  std::uint64_t n_ = 0;
  unsigned h_ = 1;
  unsigned overlay_width_ = 1;
  std::uint64_t distinct_ = 0;
  BitSequence present_;   // bit x set iff small value x occurs
  PackedArray prefix_;    // per frame of present_: distinct values before it
  BitSequence overlay_;   // big values: dense rank at the codeword position
  const PopcountTable* popcount_ = nullptr;
};

DenseRankStructure build_dense_rank(const SdnSequence& s, const RankConfig& cfg = {},
                                    SdnSorter* sorter = nullptr);

class CompetitiveRankStructure {
public:
  CompetitiveRankStructure() = default;

  std::uint64_t rank(std::uint64_t p_x, std::uint64_t x, QueryCounters* counters = nullptr) const noexcept;
  std::uint64_t rank(std::uint64_t p_x, const Natural& x, QueryCounters* counters = nullptr) const noexcept;
  std::uint64_t rank_at(const SdnSequence& s, std::uint64_t p_x, QueryCounters* counters = nullptr) const;

  std::uint64_t n_bits() const noexcept { return n_; }
  unsigned frame_bits() const noexcept { return h_; }
  std::uint64_t packets() const noexcept { return packets_; }
  std::uint64_t space_bits() const noexcept;

private:
  friend CompetitiveRankStructure build_rank(const SdnSequence&, const RankConfig&, SdnSorter*);

  std::uint64_t small_rank(std::uint64_t x, QueryCounters* counters) const noexcept;
  std::uint64_t big_rank(std::uint64_t p_x, QueryCounters* counters) const noexcept;

  std::uint64_t n_ = 0;
  unsigned h_ = 1;
  unsigned overlay_width_ = 1;
  std::uint64_t packets_ = 0;
  PackedArray directory_;  // per region of h values: 0 or packet id + 1
  BitSequence counts_;     // occurrence counts, frame-aligned codewords
  RankSelectIndex starts_; // marks the first bit of every count record
  PackedArray prefix_;     // per frame of counts_: occurrences before it
  BitSequence overlay_;
  const PrefixSumTable* prefixsum_ = nullptr;
};

CompetitiveRankStructure build_rank(const SdnSequence& s, const RankConfig& cfg = {},
                                    SdnSorter* sorter = nullptr);

} // namespace sdn
