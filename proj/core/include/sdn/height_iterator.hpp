#pragma once

// Iteration over the nodes of a tree by increasing height in O(n) time and
// O(n) bits. The first call returns all leaves; every later call processes
// the previously returned level and returns the nodes of the next height.
//
// A node becomes ready once all of its children are processed. Readiness is
// detected by a relay race along each sibling list: a processed child that is
// leftmost, or whose left sibling holds the token, carries the token right
// over processed siblings; the token stops before the first unprocessed one.
// Reaching the rightmost child means the parent is ready.
//
// Nodes are open-parenthesis positions of the BalancedParens.

#include "sdn/balanced_parens.hpp"
#include "sdn/choice_dictionary.hpp"

#include <cstdint>

namespace sdn {

class HeightIterator {
public:
  explicit HeightIterator(const BalancedParens& tree);

  bool has_next() const noexcept { return emitted_ < tree_->nodes(); }

  /// Nodes of the next height. The reference stays valid and unchanged
  /// until the following call. Throws IteratorExhausted when !has_next().
  const ChoiceDictionary& next();

  /// Height of the level returned by the last next().
  std::uint64_t height() const noexcept { return height_; }
  std::uint64_t emitted() const noexcept { return emitted_; }
  /// Elementary steps so far: nodes consumed plus token moves.
  std::uint64_t work() const noexcept { return work_; }

  /// Processed marks and token marks, indexed by open position.
  const BitSequence& processed() const noexcept { return processed_; }
  const BitSequence& tokens() const noexcept { return tokens_; }

private:
  void collect_leaves();
  void run(std::uint64_t u);

  const BalancedParens* tree_;
  ChoiceDictionary current_;
  ChoiceDictionary next_;
  BitSequence processed_;
  BitSequence tokens_;
  std::uint64_t emitted_ = 0;
  std::uint64_t height_ = 0;
  std::uint64_t work_ = 0;
  bool started_ = false;
};

} // namespace sdn
