#include "sdn/height_iterator.hpp"

#include "sdn/errors.hpp"

namespace sdn {

HeightIterator::HeightIterator(const BalancedParens& tree)
    : tree_(&tree),
      current_(tree.size()),
      next_(tree.size()),
      processed_(tree.size()),
      tokens_(tree.size()) {}

void HeightIterator::collect_leaves() {
  // A leaf is an open parenthesis directly followed by a close one.
  const auto& words = tree_->bits().words();
  for (std::uint64_t w = 0; w < words.size(); ++w) {
    const std::uint64_t x = words[w];
    const std::uint64_t following = (x << 1) | (w + 1 < words.size() ? words[w + 1] >> 63 : 0);
    std::uint64_t leaves = x & ~following;
    while (leaves != 0) {
      const auto lead = static_cast<unsigned>(std::countl_zero(leaves));
      const std::uint64_t pos = w * 64 + lead;
      current_.add(pos);
      processed_.set(pos);
      leaves &= ~(std::uint64_t{1} << (63 - lead));
      ++work_;
    }
  }
}

void HeightIterator::run(std::uint64_t u) {
  const BalancedParens& t = *tree_;
  const std::uint64_t left = t.left_sibling(u);
  if (left != BalancedParens::npos) {
    if (!(processed_.get(left) && tokens_.get(left))) {
      return;  // a later race passes over u
    }
    tokens_.set(left, false);
  }
  std::uint64_t at = u;
  while (true) {
    const std::uint64_t right = t.right_sibling(at);
    if (right == BalancedParens::npos) {
      const std::uint64_t parent = t.parent(at);
      if (parent != BalancedParens::npos) {
        next_.add(parent);
      }
      return;
    }
    if (!processed_.get(right)) {
      tokens_.set(at);
      return;
    }
    at = right;
    ++work_;
  }
}

const ChoiceDictionary& HeightIterator::next() {
  if (!has_next()) {
    throw IteratorExhausted("height iterator exhausted");
  }
  if (!started_) {
    started_ = true;
    collect_leaves();
    emitted_ = current_.size();
    height_ = 0;
    return current_;
  }
  while (!current_.empty()) {
    const std::uint64_t u = current_.choice();
    current_.remove(u);
    ++work_;
    run(u);
  }
  std::swap(current_, next_);
  // Mark the new level only now: a node that became ready in this round must
  // not be raced over by a sibling in the same round.
  for (std::uint64_t u = current_.next(0); u != ChoiceDictionary::npos; u = current_.next(u + 1)) {
    processed_.set(u);
    ++work_;
  }
  emitted_ += current_.size();
  ++height_;
  return current_;
}

} // namespace sdn
