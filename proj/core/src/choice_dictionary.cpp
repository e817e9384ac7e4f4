#include "sdn/choice_dictionary.hpp"

#include <algorithm>
#include <bit>

namespace sdn {

ChoiceDictionary::ChoiceDictionary(std::uint64_t universe) : universe_(universe) {
  // Level 0 holds the members; level l + 1 has one bit per word of level l.
  std::uint64_t bits = std::max<std::uint64_t>(universe, 1);
  std::uint64_t total = 0;
  levels_ = 0;
  while (true) {
    const std::uint64_t words = (bits + 63) / 64;
    offset_[levels_] = total;
    count_[levels_] = words;
    total += words;
    ++levels_;
    if (words == 1) {
      break;
    }
    bits = words;
  }
  offset_[levels_] = total;
  words_.assign(total, 0);
}

bool ChoiceDictionary::add(std::uint64_t i) noexcept {
  std::uint64_t idx = i;
  for (unsigned l = 0; l < levels_; ++l) {
    std::uint64_t& w = level(l)[idx >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
    const bool was_empty = w == 0;
    if (w & bit) {
      return l != 0;  // only reachable at level 0 when already present
    }
    w |= bit;
    if (l == 0) {
      ++size_;
    }
    if (!was_empty) {
      break;
    }
    idx >>= 6;
  }
  return true;
}

bool ChoiceDictionary::remove(std::uint64_t i) noexcept {
  if (!contains(i)) {
    return false;
  }
  --size_;
  std::uint64_t idx = i;
  for (unsigned l = 0; l < levels_; ++l) {
    std::uint64_t& w = level(l)[idx >> 6];
    w &= ~(std::uint64_t{1} << (idx & 63));
    if (w != 0) {
      break;
    }
    idx >>= 6;
  }
  return true;
}

std::uint64_t ChoiceDictionary::next(std::uint64_t i) const noexcept {
  if (i >= universe_ || size_ == 0) {
    return npos;
  }
  // Climb until a word holds a set bit at or after the current index.
  std::uint64_t idx = i;
  unsigned l = 0;
  while (true) {
    const std::uint64_t w = idx >> 6;
    if (w >= count_[l]) {
      return npos;
    }
    const std::uint64_t masked = level(l)[w] & (~std::uint64_t{0} << (idx & 63));
    if (masked != 0) {
      idx = (w << 6) | static_cast<std::uint64_t>(std::countr_zero(masked));
      break;
    }
    if (l + 1 == levels_) {
      return npos;
    }
    idx = w + 1;
    ++l;
  }
  // Descend to the smallest member below the found summary bit.
  while (l > 0) {
    --l;
    idx = (idx << 6) | static_cast<std::uint64_t>(std::countr_zero(level(l)[idx]));
  }
  return idx;
}

void ChoiceDictionary::clear() noexcept {
  std::fill(words_.begin(), words_.end(), 0);
  size_ = 0;
}

} // namespace sdn
