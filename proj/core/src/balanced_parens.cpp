#include "sdn/balanced_parens.hpp"

#include "sdn/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace sdn {

namespace {

constexpr std::uint64_t kBlockBits = 512;

// Per byte, read most significant bit first, with +1 for a one and -1 for a
// zero: the total, the minimum prefix over 1..8 steps (forward search) and
// over 0..7 steps (backward search).
struct ByteExcess {
  std::array<std::int8_t, 256> total{};
  std::array<std::int8_t, 256> min_after{};
  std::array<std::int8_t, 256> min_before{};

  constexpr ByteExcess() {
    for (int b = 0; b < 256; ++b) {
      int e = 0;
      int lo_after = 8;
      int lo_before = 0;
      for (int r = 0; r < 8; ++r) {
        lo_before = std::min(lo_before, e);
        e += ((b >> (7 - r)) & 1) != 0 ? 1 : -1;
        lo_after = std::min(lo_after, e);
      }
      total[b] = static_cast<std::int8_t>(e);
      min_after[b] = static_cast<std::int8_t>(lo_after);
      min_before[b] = static_cast<std::int8_t>(lo_before);
    }
  }
};

constexpr ByteExcess kBytes{};

// Scans positions p+1..end (excess after each bit) for the first with
// excess <= target; e is excess(p) on entry.
std::uint64_t scan_forward(const BitSequence& bits, std::uint64_t p, std::uint64_t end, std::int64_t e,
                           std::int64_t target) noexcept {
  while (p < end) {
    if ((p & 7) == 0 && p + 8 <= end) {
      const auto byte = static_cast<unsigned>(bits.read(p, 8));
      if (e + kBytes.min_after[byte] > target) {
        e += kBytes.total[byte];
        p += 8;
        continue;
      }
    }
    e += bits.get(p) ? 1 : -1;
    ++p;
    if (e <= target) {
      return p;
    }
  }
  return BalancedParens::npos;
}

// Scans positions p-1 down to begin for the first with excess <= target; e
// is excess(p) on entry.
std::uint64_t scan_backward(const BitSequence& bits, std::uint64_t p, std::uint64_t begin, std::int64_t e,
                            std::int64_t target) noexcept {
  while (p > begin) {
    if ((p & 7) == 0 && p - 8 >= begin) {
      const auto byte = static_cast<unsigned>(bits.read(p - 8, 8));
      const std::int64_t e0 = e - kBytes.total[byte];
      if (e0 + kBytes.min_before[byte] > target) {
        e = e0;
        p -= 8;
        continue;
      }
    }
    --p;
    e -= bits.get(p) ? 1 : -1;
    if (e <= target) {
      return p;
    }
  }
  return BalancedParens::npos;
}

} // namespace

BalancedParens::BalancedParens(BitSequence bits) {
  const std::uint64_t n = bits.size();
  if (n < 2 || n % 2 != 0) {
    throw InvalidInput("parenthesis sequence must have a positive even length");
  }
  if (n / 2 >= (std::uint64_t{1} << 30)) {
    throw InvalidInput("tree too large");
  }
  std::int64_t e = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    e += bits.get(j) ? 1 : -1;
    if (e < 0 || (e == 0 && j + 1 < n)) {
      throw InvalidInput("parenthesis sequence is not one balanced tree (at position " + std::to_string(j) + ")");
    }
  }
  if (e != 0) {
    throw InvalidInput("parenthesis sequence is unbalanced");
  }

  blocks_ = (n + kBlockBits - 1) / kBlockBits;
  leaves_ = std::bit_ceil(blocks_);
  tree_.assign(2 * leaves_, std::numeric_limits<std::int32_t>::max());
  e = 0;
  for (std::uint64_t b = 0; b < blocks_; ++b) {
    const std::uint64_t end = std::min(n, (b + 1) * kBlockBits);
    std::int64_t lo = e;  // closed range: includes the block's first position
    for (std::uint64_t p = b * kBlockBits; p < end;) {
      if (p + 8 <= end) {
        const auto byte = static_cast<unsigned>(bits.read(p, 8));
        lo = std::min<std::int64_t>(lo, e + kBytes.min_after[byte]);
        e += kBytes.total[byte];
        p += 8;
      } else {
        e += bits.get(p) ? 1 : -1;
        lo = std::min(lo, e);
        ++p;
      }
    }
    tree_[leaves_ + b] = static_cast<std::int32_t>(lo);
  }
  for (std::uint64_t v = leaves_ - 1; v >= 1; --v) {
    tree_[v] = std::min(tree_[2 * v], tree_[2 * v + 1]);
  }
  rs_ = RankSelectIndex(std::move(bits));
}

BalancedParens BalancedParens::from_string(std::string_view parens) {
  BitSequence bits(parens.size());
  for (std::size_t i = 0; i < parens.size(); ++i) {
    if (parens[i] == '(') {
      bits.set(i);
    } else if (parens[i] != ')') {
      throw InvalidInput(std::string("unexpected character '") + parens[i] + "' in parenthesis string");
    }
  }
  return BalancedParens(std::move(bits));
}

std::uint64_t BalancedParens::first_block_at_most(std::uint64_t from, std::int64_t target) const noexcept {
  if (from >= blocks_) {
    return npos;
  }
  std::uint64_t v = leaves_ + from;
  if (tree_[v] > target) {
    while (true) {
      if (v == 1) {
        return npos;
      }
      if ((v & 1) == 0 && tree_[v + 1] <= target) {
        ++v;
        break;
      }
      v >>= 1;
    }
    while (v < leaves_) {
      v = 2 * v;
      if (tree_[v] > target) {
        ++v;
      }
    }
  }
  return v - leaves_;
}

std::uint64_t BalancedParens::last_block_at_most(std::uint64_t before, std::int64_t target) const noexcept {
  if (before == 0) {
    return npos;
  }
  std::uint64_t v = leaves_ + before - 1;
  if (tree_[v] > target) {
    while (true) {
      if (v == 1) {
        return npos;
      }
      if ((v & 1) == 1 && tree_[v - 1] <= target) {
        --v;
        break;
      }
      v >>= 1;
    }
    while (v < leaves_) {
      v = 2 * v + 1;
      if (tree_[v] > target) {
        --v;
      }
    }
  }
  return v - leaves_;
}

std::uint64_t BalancedParens::fwd_search(std::uint64_t i, std::int64_t target) const noexcept {
  const std::uint64_t n = size();
  if (i >= n) {
    return npos;
  }
  const BitSequence& b = bits();
  const std::uint64_t block = i / kBlockBits;
  std::uint64_t j = scan_forward(b, i, std::min(n, (block + 1) * kBlockBits), excess(i), target);
  if (j != npos) {
    return j;
  }
  const std::uint64_t next = first_block_at_most(block + 1, target);
  if (next == npos) {
    return npos;
  }
  const std::uint64_t p = next * kBlockBits;
  return scan_forward(b, p, std::min(n, p + kBlockBits), excess(p), target);
}

std::uint64_t BalancedParens::bwd_search(std::uint64_t start, std::int64_t target) const noexcept {
  if (start == 0) {
    return npos;
  }
  const BitSequence& b = bits();
  const std::uint64_t block = (start - 1) / kBlockBits;
  std::uint64_t j = scan_backward(b, start, block * kBlockBits, excess(start), target);
  if (j != npos) {
    return j;
  }
  const std::uint64_t prev = last_block_at_most(block, target);
  if (prev == npos) {
    return npos;
  }
  const std::uint64_t top = (prev + 1) * kBlockBits;
  return scan_backward(b, top, prev * kBlockBits, excess(top), target);
}

std::string BalancedParens::to_string() const {
  std::string s(size(), ')');
  for (std::uint64_t i = 0; i < size(); ++i) {
    if (is_open(i)) {
      s[i] = '(';
    }
  }
  return s;
}

std::uint64_t BalancedParens::index_bits() const noexcept {
  return rs_.index_bits() + tree_.size() * 32;
}

} // namespace sdn
