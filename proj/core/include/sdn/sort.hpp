#pragma once

// Stable sorting of self-delimiting sequences in O(k + N / tau) time with
// O(N) bits of working space plus tables of 2^ceil(tau/2) entries.
//
// Values are split at q = 2^(N / tau). Small values (x <= q) are distributed
// into areas by exact codeword length and each area is radix-sorted. Big
// values are few (O(tau)); they are sorted through (length, position)
// records whose digits are read in place, and each is copied exactly once.

#include "sdn/bits.hpp"
#include "sdn/codec.hpp"
#include "sdn/memory.hpp"

#include <cstdint>

namespace sdn {

struct SortConfig {
  /// Bits per table operand. 0 picks max(2, bit_width(N)); an explicit value
  /// must lie in [2, 32] and is raised to bit_width(N) if smaller (capped
  /// at 32).
  unsigned tau = 0;
  /// Inputs with at most this many codewords are sorted by stable insertion
  /// on the codewords themselves. 0 always uses the radix machinery.
  unsigned insertion_cutoff = 16;
};

inline constexpr unsigned kMaxInsertionCutoff = 64;
inline constexpr unsigned kMaxTau = 32;

/// Parameters derived from a config for an input of n_bits bits.
struct SortParameters {
  unsigned tau = 2;
  unsigned half_bits = 1;            ///< ceil(tau / 2), the widest radix digit
  std::uint64_t small_exponent = 1;  ///< q = 2^small_exponent

  /// True if the codeword's value is at most q.
  bool is_small(const BitSequence& bits, const Codeword& cw) const noexcept;
};

/// Throws ConfigError for an explicit tau outside [2, 32] or a cutoff above
/// kMaxInsertionCutoff.
SortParameters sort_parameters(std::uint64_t n_bits, const SortConfig& cfg);

/// Reusable sorter. Scratch buffers are kept between calls, so sorting many
/// small sequences does not allocate per call.
class SdnSorter {
public:
  explicit SdnSorter(SortConfig cfg = {});

  const SortConfig& config() const noexcept { return cfg_; }

  /// Stably sorts the codewords filling bits[begin, end) into
  /// out[out_pos, out_pos + end - begin); out must not be bits. If satellite
  /// is given it holds one entry per input codeword and is permuted into
  /// output order. Returns the number of codewords.
  std::uint64_t sort_range(const BitSequence& bits, std::uint64_t begin, std::uint64_t end,
                           BitSequence& out, std::uint64_t out_pos, PackedArray* satellite = nullptr);

  SdnSequence sort(const SdnSequence& s, PackedArray* satellite = nullptr);

private:
  struct Range {
    std::uint64_t begin;
    std::uint64_t count;
  };

  void insertion_sort(const BitSequence& bits, std::uint64_t begin, std::uint64_t end,
                      BitSequence& out, std::uint64_t out_pos, PackedArray* satellite);
  void sort_area_direct(BitSequence& out, std::uint64_t area_begin, std::uint64_t count,
                        std::uint64_t ell, std::uint64_t first_item, bool with_satellite);
  void sort_area_indirect(BitSequence& out, std::uint64_t area_begin, std::uint64_t count,
                          std::uint64_t ell, std::uint64_t first_item, bool with_satellite);

  /// Stable LSD radix sort of perm_[r.begin, r.begin + r.count) by a key of
  /// key_bits bits; digit(record, shift, width) returns key bits
  /// [shift, shift + width) counted from the least significant end.
  template <class DigitFn>
  void radix_records(Range r, std::uint64_t key_bits, DigitFn&& digit);

  std::uint64_t* histogram(unsigned digit_bits);

  SortConfig cfg_;
  SortParameters params_;
  table_vector<std::uint64_t> hist_;
  PackedArray counts_;      // per codeword length: number of small codewords
  PackedArray cursors_;     // per codeword length: next output bit, then area end
  PackedArray item_cursor_; // per codeword length: next output item (satellite only)
  PackedArray perm_;
  PackedArray perm_tmp_;
  PackedArray big_pos_;
  PackedArray big_ell_;
  PackedArray big_item_;
  PackedArray sat_out_;
  PackedArray sat_tmp_;
  BitSequence temp_;
};

SdnSequence sort(const SdnSequence& s, const SortConfig& cfg = {});

/// Sorts a sequence whose values are all at most q; PreconditionViolation
/// otherwise.
SdnSequence presort_small(const SdnSequence& s, const SortConfig& cfg = {});

/// Sorts a sequence whose values all exceed q; PreconditionViolation
/// otherwise.
SdnSequence sort_big(const SdnSequence& s, const SortConfig& cfg = {});

/// Numeric comparison of two codewords: longer payload means larger value.
int compare_codewords(const BitSequence& a, const Codeword& x, const BitSequence& b,
                      const Codeword& y) noexcept;

} // namespace sdn
