#pragma once

// Tree isomorphism in linear time with O(n) bits of working memory (O(n log n)
// bits when colors are used, proportional to the color input itself).
//
// Both trees are processed level by level in order of height. Every node u
// receives a classification number (h, q): h is its height, and q is the
// dense rank of u's sorted vector of child classification numbers (plus its
// color) among all vectors of that height in both trees. Two nodes of the
// same height get equal numbers exactly if their subtrees are isomorphic.

#include "sdn/balanced_parens.hpp"
#include "sdn/tree.hpp"

#include <cstdint>
#include <span>

namespace sdn {

struct IsoOptions {
  /// Stop as soon as one height level holds different multisets of
  /// classification numbers in the two trees.
  bool early_exit = true;
  /// Compare node colors as well; both inputs must then carry colors.
  bool colored = false;
  /// Table parameter for the per-level sorts and rank structures; 0 derives
  /// it from the store size.
  unsigned tau = 0;
};

struct IsoStats {
  std::uint64_t rounds = 0;
  /// Codewords passed to per-node sorts, summed over all nodes.
  std::uint64_t sorted_codewords = 0;
  /// Bits of the per-level vector sequences, summed and maximal.
  std::uint64_t level_bits_total = 0;
  std::uint64_t level_bits_max = 0;
  bool exited_early = false;
};

/// Rooted trees in parenthesis form; colors in preorder, used only when
/// opts.colored is set (InvalidInput if missing or not in [0, n)).
bool rooted_isomorphic(const BalancedParens& a, std::span<const std::uint64_t> colors_a,
                       const BalancedParens& b, std::span<const std::uint64_t> colors_b,
                       const IsoOptions& opts = {}, IsoStats* stats = nullptr);

inline bool rooted_isomorphic(const BalancedParens& a, const BalancedParens& b, const IsoOptions& opts = {},
                              IsoStats* stats = nullptr) {
  return rooted_isomorphic(a, {}, b, {}, opts, stats);
}

inline bool rooted_isomorphic(const RootedTree& a, const RootedTree& b, const IsoOptions& opts = {},
                              IsoStats* stats = nullptr) {
  return rooted_isomorphic(a.parens, a.colors, b.parens, b.colors, opts, stats);
}

/// Both trees need a designated root; PreconditionViolation otherwise.
bool rooted_isomorphic(const Tree& a, const Tree& b, const IsoOptions& opts = {}, IsoStats* stats = nullptr);

/// Ignores designated roots. Roots both trees at their centers.
bool unrooted_isomorphic(const Tree& a, const Tree& b, const IsoOptions& opts = {}, IsoStats* stats = nullptr);

} // namespace sdn
