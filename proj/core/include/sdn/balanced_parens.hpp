#pragma once

// Ordinal tree as a balanced parenthesis sequence (1 = open, 0 = close).
// Node u is identified either by the position u_( of its open parenthesis or
// by its preorder id, which is the number of open parentheses before u_(.
//
// Navigation uses the excess E(j) = opens - closes among bits [0, j).
// findclose, findopen and enclose reduce to searching the nearest position
// with a given excess, answered by byte tables inside 512-bit blocks and a
// min-excess tree over the blocks.

#include "sdn/bits.hpp"
#include "sdn/rank_select.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace sdn {

class BalancedParens {
public:
  static constexpr std::uint64_t npos = ~std::uint64_t{0};

  BalancedParens() = default;
  /// Throws InvalidInput unless bits is a nonempty balanced sequence whose
  /// first parenthesis encloses everything (a single root).
  explicit BalancedParens(BitSequence bits);
  static BalancedParens from_string(std::string_view parens);

  std::uint64_t size() const noexcept { return rs_.size(); }
  std::uint64_t nodes() const noexcept { return rs_.size() / 2; }
  const BitSequence& bits() const noexcept { return rs_.bits(); }
  bool is_open(std::uint64_t i) const noexcept { return rs_.bits().get(i); }

  std::int64_t excess(std::uint64_t j) const noexcept {
    return 2 * static_cast<std::int64_t>(rs_.rank(j)) - static_cast<std::int64_t>(j);
  }

  /// Smallest j > i with excess(j) == target, npos if none. Requires
  /// excess(i + 1) > target.
  std::uint64_t fwd_search(std::uint64_t i, std::int64_t target) const noexcept;
  /// Largest j < start with excess(j) == target, npos if none. Requires
  /// excess(start - 1) > target.
  std::uint64_t bwd_search(std::uint64_t start, std::int64_t target) const noexcept;

  std::uint64_t findclose(std::uint64_t open) const noexcept { return fwd_search(open, excess(open)) - 1; }
  std::uint64_t findopen(std::uint64_t close) const noexcept { return bwd_search(close + 1, excess(close + 1)); }
  /// Open position of the nearest pair strictly enclosing open; npos for the
  /// root.
  std::uint64_t enclose(std::uint64_t open) const noexcept {
    return open == 0 ? npos : bwd_search(open, excess(open) - 1);
  }

  // Node navigation on open positions; npos when the relative is absent.
  std::uint64_t root() const noexcept { return 0; }
  std::uint64_t parent(std::uint64_t u) const noexcept { return enclose(u); }
  std::uint64_t first_child(std::uint64_t u) const noexcept { return is_open(u + 1) ? u + 1 : npos; }
  std::uint64_t right_sibling(std::uint64_t u) const noexcept {
    const std::uint64_t next = findclose(u) + 1;
    return next < size() && is_open(next) ? next : npos;
  }
  std::uint64_t left_sibling(std::uint64_t u) const noexcept {
    return u > 0 && !is_open(u - 1) ? findopen(u - 1) : npos;
  }
  bool is_leaf(std::uint64_t u) const noexcept { return !is_open(u + 1); }
  /// Number of nodes in the subtree of u.
  std::uint64_t subtree_size(std::uint64_t u) const noexcept { return (findclose(u) - u + 1) / 2; }

  std::uint64_t node_id(std::uint64_t open) const noexcept { return rs_.rank(open); }
  std::uint64_t position_of(std::uint64_t id) const noexcept { return rs_.select(id + 1); }

  std::string to_string() const;
  /// Bits of the rank-select and navigation indexes, excluding the sequence.
  std::uint64_t index_bits() const noexcept;

private:
  std::uint64_t first_block_at_most(std::uint64_t from, std::int64_t target) const noexcept;
  std::uint64_t last_block_at_most(std::uint64_t before, std::int64_t target) const noexcept;

  RankSelectIndex rs_;
  aux_vector<std::int32_t> tree_;  // heap-ordered minima; leaves are blocks
  std::uint64_t blocks_ = 0;
  std::uint64_t leaves_ = 1;
};

} // namespace sdn
