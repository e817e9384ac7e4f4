#include "sdn/rank_select.hpp"

#include <algorithm>

namespace sdn {
namespace {

constexpr std::uint64_t kWordsPerSuper = 8;
constexpr std::uint64_t kSampleRate = 512;

} // namespace

unsigned select_in_word(std::uint64_t word, unsigned k) noexcept {
  unsigned base = 0;
  for (unsigned byte = 0; byte < 8; ++byte) {
    const auto b = static_cast<unsigned>((word >> (56 - 8 * byte)) & 0xFF);
    const auto c = static_cast<unsigned>(std::popcount(b));
    if (k <= c) {
      for (unsigned bit = 0; bit < 8; ++bit) {
        if ((b >> (7 - bit)) & 1u) {
          if (--k == 0) {
            return base + bit;
          }
        }
      }
    }
    k -= c;
    base += 8;
  }
  return 64;
}

RankSelectIndex::RankSelectIndex(BitSequence bits) : bits_(std::move(bits)) {
  const auto& words = bits_.words();
  const std::uint64_t n_words = words.size();
  super_.assign(n_words / kWordsPerSuper + 1, 0);
  rel_.assign(n_words + 1, 0);

  std::uint64_t total = 0;
  std::uint64_t next_sample = 1;
  for (std::uint64_t w = 0; w < n_words; ++w) {
    if (w % kWordsPerSuper == 0) {
      super_[w / kWordsPerSuper] = total;
    }
    rel_[w] = static_cast<std::uint16_t>(total - super_[w / kWordsPerSuper]);
    const auto c = static_cast<std::uint64_t>(std::popcount(words[w]));
    while (next_sample <= total + c) {
      samples_.push_back(static_cast<std::uint32_t>(w / kWordsPerSuper));
      next_sample += kSampleRate;
    }
    total += c;
  }
  if (n_words % kWordsPerSuper == 0) {
    super_[n_words / kWordsPerSuper] = total;
  }
  rel_[n_words] = static_cast<std::uint16_t>(total - super_[n_words / kWordsPerSuper]);
  ones_ = total;
}

std::uint64_t RankSelectIndex::select(std::uint64_t k) const noexcept {
  if (k == 0 || k > ones_) {
    return npos;
  }
  const std::uint64_t s = (k - 1) / kSampleRate;
  std::uint64_t lo = samples_[s];
  std::uint64_t hi = s + 1 < samples_.size() ? samples_[s + 1] : super_.size() - 1;
  // Last superblock whose absolute count is < k.
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (super_[mid] < k) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const auto& words = bits_.words();
  std::uint64_t w = lo * kWordsPerSuper;
  std::uint64_t remaining = k - super_[lo];
  const std::uint64_t w_end = std::min<std::uint64_t>(w + kWordsPerSuper, words.size());
  while (w + 1 < w_end && rel_[w + 1] < remaining) {
    ++w;
  }
  remaining -= rel_[w];
  return w * 64 + select_in_word(words[w], static_cast<unsigned>(remaining));
}

std::uint64_t RankSelectIndex::index_bits() const noexcept {
  return super_.size() * 64 + rel_.size() * 16 + samples_.size() * 32;
}

} // namespace sdn
