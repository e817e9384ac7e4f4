#pragma once

// Per-node number storage in O(n) bits. Node u (open position u_() owns the
// bit slot [s * u_(, s * u_)] of one shared bit sequence, s = bits per
// parenthesis position. The slot of u contains the slots of all its
// descendants, so writing u overwrites only numbers of its subtree.
//
// A record is one codeword (write/read) or, for a store of arity 2, two
// codewords (write_pair/read_pair).

#include "sdn/balanced_parens.hpp"
#include "sdn/bits.hpp"
#include "sdn/codec.hpp"

#include <cstdint>
#include <utility>

namespace sdn {

class ClassificationStore {
public:
  static constexpr unsigned kDefaultScale = 6;

  explicit ClassificationStore(const BalancedParens& tree, unsigned scale = kDefaultScale, unsigned arity = 1);

  unsigned scale() const noexcept { return scale_; }
  unsigned arity() const noexcept { return arity_; }

  std::uint64_t slot_begin(std::uint64_t u) const noexcept { return scale_ * u; }
  std::uint64_t slot_bits(std::uint64_t u) const noexcept {
    return scale_ * (tree_->findclose(u) - u) + 1;
  }

  /// Requires 0 <= x <= min(2^(2c desc(u)), n^2) with c = scale / 6;
  /// PreconditionViolation otherwise.
  void write(std::uint64_t u, std::uint64_t x);
  std::uint64_t read(std::uint64_t u) const;

  /// PreconditionViolation if the two codewords do not fit the slot.
  void write_pair(std::uint64_t u, std::uint64_t first, std::uint64_t second);
  std::pair<std::uint64_t, std::uint64_t> read_pair(std::uint64_t u) const;

  /// Length in bits of the record stored for u.
  std::uint64_t record_bits(std::uint64_t u) const;
  /// Copies u's record to out at position at and returns its length.
  std::uint64_t copy_record(std::uint64_t u, BitSequence& out, std::uint64_t at) const;

  /// Concatenation of the children's records, left to right.
  SdnSequence vector(std::uint64_t u) const;

  const BitSequence& bits() const noexcept { return bits_; }
  std::uint64_t storage_bits() const noexcept { return bits_.storage_bits(); }

private:
  Codeword codeword_at(std::uint64_t p) const { return scan_codeword(bits_, p, bits_.size()); }

  const BalancedParens* tree_;
  unsigned scale_;
  unsigned arity_;
  BitSequence bits_;
};

} // namespace sdn
