#pragma once

// Trees as they arrive from files or generators, and conversion to the
// balanced parenthesis representation used by the isomorphism engine.
//
// Text formats:
//   edge list   first line n, then n - 1 lines "u v" (0-based ids), then an
//               optional line "root r", then an optional line of n colors
//               indexed by node id.
//   parentheses one line over "()" of length 2n, then an optional line of n
//               colors in preorder. The root is the first node.
// Colors are integers in [0, n). Blank lines are ignored.

#include "sdn/balanced_parens.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace sdn {

class Tree {
public:
  static constexpr std::uint64_t npos = ~std::uint64_t{0};

  Tree() = default;
  /// Throws InvalidInput unless the edges form a tree on [0, n), n >= 1.
  Tree(std::uint64_t n, std::span<const std::pair<std::uint64_t, std::uint64_t>> edges);

  std::uint64_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<const std::uint32_t> neighbors(std::uint64_t u) const noexcept {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  std::uint64_t degree(std::uint64_t u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

  bool has_root() const noexcept { return root_ != npos; }
  std::uint64_t root() const noexcept { return root_; }
  /// InvalidInput if r is not a node.
  void set_root(std::uint64_t r);

  bool colored() const noexcept { return !colors_.empty(); }
  /// Colors by node id.
  const std::vector<std::uint64_t>& colors() const noexcept { return colors_; }
  /// InvalidInput unless there are n colors, each in [0, n).
  void set_colors(std::vector<std::uint64_t> colors);

private:
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> adjacency_;
  std::uint64_t root_ = npos;
  std::vector<std::uint64_t> colors_;
};

/// A rooted tree in parenthesis form with colors in preorder (empty when
/// uncolored).
struct RootedTree {
  BalancedParens parens;
  std::vector<std::uint64_t> colors;
};

/// One DFS from root in adjacency order; node visited i-th becomes the i-th
/// open parenthesis and receives its color at index i.
RootedTree bp_from_tree(const Tree& tree, std::uint64_t root);
/// Uses the tree's designated root; PreconditionViolation if it has none.
RootedTree bp_from_tree(const Tree& tree);

/// Inverse direction: node ids are preorder numbers, the root is node 0.
/// colors, if nonempty, is in preorder.
Tree tree_from_bp(const BalancedParens& parens, std::span<const std::uint64_t> colors = {});

/// Parses either text format. Diagnostics carry "line L, column C".
Tree parse_tree(std::string_view text);
Tree read_tree_file(const std::filesystem::path& path);

/// Text in edge-list format (root line and colors included when present).
std::string format_edge_list(const Tree& tree);

} // namespace sdn
