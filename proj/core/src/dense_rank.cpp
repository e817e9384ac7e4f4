#include "rank_common.hpp"

#include <optional>

namespace sdn {

DenseRankStructure build_dense_rank(const SdnSequence& s, const RankConfig& cfg, SdnSorter* sorter) {
  DenseRankStructure d;
  const std::uint64_t n = s.size_bits();
  const auto n_width = static_cast<unsigned>(std::bit_width(n));
  d.n_ = n;
  d.h_ = detail::rank_frame_bits(n, cfg);
  d.overlay_width_ = bits_for(n);
  d.popcount_ = &shared_popcount_table(d.h_);

  const std::uint64_t frames = (n + d.h_) / d.h_;  // covers values 0..n
  d.present_.reset(frames * d.h_);
  const BitSequence& bits = s.bits();
  std::uint64_t distinct_small = 0;
  bool any_big = false;
  for (const Codeword& cw : s) {
    if (detail::exceeds(bits, cw, n, n_width)) {
      any_big = true;
      continue;
    }
    const std::uint64_t x = codeword_value_u64(bits, cw);
    if (!d.present_.get(x)) {
      d.present_.set(x);
      ++distinct_small;
    }
  }

  d.prefix_.reset(frames, bits_for(distinct_small));
  std::uint64_t running = 0;
  for (std::uint64_t f = 0; f < frames; ++f) {
    d.prefix_.set(f, running);
    running += static_cast<std::uint64_t>(std::popcount(d.present_.read(f * d.h_, d.h_)));
  }
  d.distinct_ = distinct_small;

  if (any_big) {
    std::optional<SdnSorter> local;
    if (sorter == nullptr) {
      sorter = &local.emplace(SortConfig{cfg.tau});
    }
    d.overlay_.reset(n);
    std::uint64_t distinct_big = 0;
    detail::for_each_big_sorted(s, *sorter,
                                [&](std::uint64_t pos, std::uint64_t, std::uint64_t, std::uint64_t before) {
                                  d.overlay_.write(pos, d.overlay_width_, distinct_small + before);
                                  distinct_big = before + 1;
                                });
    d.distinct_ += distinct_big;
  }
  return d;
}

std::uint64_t DenseRankStructure::small_rank(std::uint64_t x, QueryCounters* counters) const noexcept {
  const std::uint64_t f = x / h_;
  const auto o = static_cast<unsigned>(x % h_);
  const std::uint64_t frame = present_.read(f * h_, h_);
  if (counters != nullptr) {
    counters->frame_reads += 2;
    counters->table_lookups += 1;
  }
  return prefix_.get(f) + (*popcount_)[frame >> (h_ - o)];
}

std::uint64_t DenseRankStructure::big_rank(std::uint64_t p_x, QueryCounters* counters) const noexcept {
  if (counters != nullptr) {
    counters->frame_reads += 1;
  }
  return overlay_.read(p_x, overlay_width_);
}

std::uint64_t DenseRankStructure::rank(std::uint64_t p_x, std::uint64_t x, QueryCounters* counters) const noexcept {
  return x > n_ ? big_rank(p_x, counters) : small_rank(x, counters);
}

std::uint64_t DenseRankStructure::rank(std::uint64_t p_x, const Natural& x, QueryCounters* counters) const noexcept {
  if (!x.fits_u64()) {
    return big_rank(p_x, counters);
  }
  return rank(p_x, x.to_u64(), counters);
}

std::uint64_t DenseRankStructure::rank_at(const SdnSequence& s, std::uint64_t p_x, QueryCounters* counters) const {
  const Codeword cw = s.codeword_at(p_x);
  if (detail::exceeds(s.bits(), cw, n_, static_cast<unsigned>(std::bit_width(n_)))) {
    return big_rank(p_x, counters);
  }
  return small_rank(codeword_value_u64(s.bits(), cw), counters);
}

std::uint64_t DenseRankStructure::space_bits() const noexcept {
  return present_.storage_bits() + prefix_.storage_bits() + overlay_.storage_bits();
}

} // namespace sdn
