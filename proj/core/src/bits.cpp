#include "sdn/bits.hpp"

#include "sdn/errors.hpp"

#include <algorithm>

namespace sdn {

BitSequence BitSequence::from_string(std::string_view bits) {
  std::uint64_t n = 0;
  for (char c : bits) {
    if (c == '0' || c == '1') {
      ++n;
    } else if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
      throw InvalidInput(std::string("bit string contains '") + c + "'");
    }
  }
  BitSequence out(n);
  std::uint64_t i = 0;
  for (char c : bits) {
    if (c == '1') {
      out.set(i++);
    } else if (c == '0') {
      ++i;
    }
  }
  return out;
}

void BitSequence::resize(std::uint64_t n_bits) {
  if (n_bits < size_) {
    // Clear the tail so the "bits past size() read as zero" invariant holds.
    fill(n_bits, size_ - n_bits, false);
  }
  words_.resize(words_for_bits(n_bits), 0);
  size_ = n_bits;
}

void BitSequence::fill(std::uint64_t p, std::uint64_t len, bool v) noexcept {
  const std::uint64_t pattern = v ? ~std::uint64_t{0} : 0;
  while (len > 0 && (p & 63) != 0) {
    const unsigned chunk = static_cast<unsigned>(std::min<std::uint64_t>(len, 64 - (p & 63)));
    write(p, chunk, pattern);
    p += chunk;
    len -= chunk;
  }
  while (len >= 64) {
    words_[p >> 6] = pattern;
    p += 64;
    len -= 64;
  }
  if (len > 0) {
    write(p, static_cast<unsigned>(len), pattern);
  }
}

std::uint64_t BitSequence::count_ones_run(std::uint64_t p, std::uint64_t limit) const noexcept {
  limit = std::min(limit, size_);
  std::uint64_t run = 0;
  while (p < limit) {
    const std::uint64_t word = peek_word(p);
    const auto ones = static_cast<std::uint64_t>(std::countl_one(word));
    const std::uint64_t avail = std::min<std::uint64_t>(64, limit - p);
    if (ones < avail) {
      return run + ones;
    }
    run += avail;
    p += avail;
  }
  return run;
}

std::uint64_t BitSequence::popcount() const noexcept {
  std::uint64_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::uint64_t>(std::popcount(w));
  }
  return total;
}

std::string BitSequence::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) {
    s.push_back(get(i) ? '1' : '0');
  }
  return s;
}

bool operator==(const BitSequence& a, const BitSequence& b) noexcept {
  return a.size_ == b.size_ && equal_bits(a, 0, b, 0, a.size_);
}

void copy_bits(const BitSequence& src, std::uint64_t src_pos, BitSequence& dst,
               std::uint64_t dst_pos, std::uint64_t len) noexcept {
  while (len >= 64) {
    dst.write(dst_pos, 64, src.read(src_pos, 64));
    src_pos += 64;
    dst_pos += 64;
    len -= 64;
  }
  if (len > 0) {
    dst.write(dst_pos, static_cast<unsigned>(len), src.read(src_pos, static_cast<unsigned>(len)));
  }
}

bool equal_bits(const BitSequence& a, std::uint64_t a_pos, const BitSequence& b,
                std::uint64_t b_pos, std::uint64_t len) noexcept {
  return compare_bits(a, a_pos, b, b_pos, len) == 0;
}

int compare_bits(const BitSequence& a, std::uint64_t a_pos, const BitSequence& b,
                 std::uint64_t b_pos, std::uint64_t len) noexcept {
  while (len > 0) {
    const unsigned chunk = static_cast<unsigned>(std::min<std::uint64_t>(len, 64));
    const std::uint64_t x = a.read(a_pos, chunk);
    const std::uint64_t y = b.read(b_pos, chunk);
    if (x != y) {
      return x < y ? -1 : 1;
    }
    a_pos += chunk;
    b_pos += chunk;
    len -= chunk;
  }
  return 0;
}

} // namespace sdn
