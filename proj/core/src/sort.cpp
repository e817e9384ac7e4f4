#include "sdn/sort.hpp"

#include "sdn/errors.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

namespace sdn {

namespace {

void copy_codeword(const BitSequence& src, std::uint64_t from, BitSequence& dst, std::uint64_t to,
                   std::uint64_t len) noexcept {
  if (len <= 64) {
    dst.write(to, static_cast<unsigned>(len), src.read(from, static_cast<unsigned>(len)));
  } else {
    copy_bits(src, from, dst, to, len);
  }
}

void fill_identity(PackedArray& perm, std::uint64_t count) {
  perm.reset(count, bits_for(count == 0 ? 0 : count - 1));
  for (std::uint64_t i = 0; i < count; ++i) {
    perm.set(i, i);
  }
}

unsigned digit_bits_for(unsigned half_bits, std::uint64_t count) noexcept {
  return std::clamp(static_cast<unsigned>(std::bit_width(count)), 1u, half_bits);
}

} // namespace

bool SortParameters::is_small(const BitSequence& bits, const Codeword& cw) const noexcept {
  if (cw.payload_bits <= small_exponent) {
    return true;
  }
  if (cw.payload_bits != small_exponent + 1) {
    return false;
  }
  // Exactly q = 2^small_exponent: a one followed by zeros only.
  std::uint64_t p = cw.payload_position() + 1;
  std::uint64_t left = cw.payload_bits - 1;
  while (left > 0) {
    const auto take = static_cast<unsigned>(std::min<std::uint64_t>(64, left));
    if (bits.read(p, take) != 0) {
      return false;
    }
    p += take;
    left -= take;
  }
  return true;
}

SortParameters sort_parameters(std::uint64_t n_bits, const SortConfig& cfg) {
  if (cfg.insertion_cutoff > kMaxInsertionCutoff) {
    throw ConfigError("insertion cutoff " + std::to_string(cfg.insertion_cutoff) + " exceeds " +
                      std::to_string(kMaxInsertionCutoff));
  }
  if (cfg.tau != 0 && (cfg.tau < 2 || cfg.tau > kMaxTau)) {
    throw ConfigError("tau " + std::to_string(cfg.tau) + " outside [2, 32]");
  }
  const auto log_n = static_cast<unsigned>(std::bit_width(n_bits));
  SortParameters p;
  p.tau = std::min(kMaxTau, std::max({2u, cfg.tau, log_n}));
  p.half_bits = (p.tau + 1) / 2;
  p.small_exponent = std::max<std::uint64_t>(1, n_bits / p.tau);
  return p;
}

int compare_codewords(const BitSequence& a, const Codeword& x, const BitSequence& b,
                      const Codeword& y) noexcept {
  if (x.payload_bits != y.payload_bits) {
    return x.payload_bits < y.payload_bits ? -1 : 1;
  }
  return compare_bits(a, x.payload_position(), b, y.payload_position(), x.payload_bits);
}

SdnSorter::SdnSorter(SortConfig cfg) : cfg_(cfg) {
  sort_parameters(0, cfg_);  // validate early
}

std::uint64_t* SdnSorter::histogram(unsigned digit_bits) {
  const std::size_t need = (std::size_t{1} << digit_bits) + 1;
  if (hist_.size() < need) {
    hist_.resize(need);
  }
  return hist_.data();
}

template <class DigitFn>
void SdnSorter::radix_records(Range r, std::uint64_t key_bits, DigitFn&& digit) {
  if (r.count < 2 || key_bits == 0) {
    return;
  }
  const unsigned d = digit_bits_for(params_.half_bits, r.count);
  if (perm_tmp_.size() != perm_.size() || perm_tmp_.width() != perm_.width()) {
    perm_tmp_.reset(perm_.size(), perm_.width());
  }
  PackedArray* src = &perm_;
  PackedArray* dst = &perm_tmp_;
  std::uint64_t* h = histogram(d);
  const std::uint64_t end = r.begin + r.count;
  for (std::uint64_t shift = 0; shift < key_bits; shift += d) {
    const auto w = static_cast<unsigned>(std::min<std::uint64_t>(d, key_bits - shift));
    const std::size_t buckets = std::size_t{1} << w;
    std::fill(h, h + buckets + 1, 0);
    for (std::uint64_t t = r.begin; t < end; ++t) {
      ++h[digit(src->get(t), shift, w) + 1];
    }
    for (std::size_t i = 1; i <= buckets; ++i) {
      h[i] += h[i - 1];
    }
    for (std::uint64_t t = r.begin; t < end; ++t) {
      const std::uint64_t rec = src->get(t);
      dst->set(r.begin + h[digit(rec, shift, w)]++, rec);
    }
    std::swap(src, dst);
  }
  if (src != &perm_) {
    for (std::uint64_t t = r.begin; t < end; ++t) {
      perm_.set(t, perm_tmp_.get(t));
    }
  }
}

std::uint64_t SdnSorter::sort_range(const BitSequence& bits, std::uint64_t begin, std::uint64_t end,
                                    BitSequence& out, std::uint64_t out_pos, PackedArray* satellite) {
  const std::uint64_t n = end - begin;
  if (n == 0) {
    return 0;
  }
  params_ = sort_parameters(n, cfg_);

  std::uint64_t k = 0;
  std::uint64_t n_big = 0;
  std::uint64_t max_small_ell = 0;
  std::uint64_t max_big_ell = 0;
  for (std::uint64_t p = begin; p < end; ++k) {
    const Codeword cw = scan_codeword(bits, p, end);
    if (params_.is_small(bits, cw)) {
      max_small_ell = std::max(max_small_ell, cw.payload_bits);
    } else {
      max_big_ell = std::max(max_big_ell, cw.payload_bits);
      ++n_big;
    }
    p = cw.end();
  }
  if (satellite != nullptr && satellite->size() != k) {
    throw PreconditionViolation("satellite array has " + std::to_string(satellite->size()) +
                                " entries for " + std::to_string(k) + " codewords");
  }
  if (k <= cfg_.insertion_cutoff) {
    insertion_sort(bits, begin, end, out, out_pos, satellite);
    return k;
  }

  const bool with_sat = satellite != nullptr;
  const std::uint64_t k_small = k - n_big;
  if (k_small > 0) {
    counts_.reset(max_small_ell + 1, bits_for(k));
    for (std::uint64_t p = begin; p < end;) {
      const Codeword cw = scan_codeword(bits, p, end);
      if (params_.is_small(bits, cw)) {
        counts_.set(cw.payload_bits, counts_.get(cw.payload_bits) + 1);
      }
      p = cw.end();
    }
    cursors_.reset(max_small_ell + 1, bits_for(out_pos + n));
    std::uint64_t at = out_pos;
    for (std::uint64_t ell = 0; ell <= max_small_ell; ++ell) {
      cursors_.set(ell, at);
      at += counts_.get(ell) * codeword_length_for_width(ell);
    }
    if (with_sat) {
      item_cursor_.reset(max_small_ell + 1, bits_for(k));
      std::uint64_t idx = 0;
      for (std::uint64_t ell = 0; ell <= max_small_ell; ++ell) {
        item_cursor_.set(ell, idx);
        idx += counts_.get(ell);
      }
    }
  }
  if (with_sat) {
    sat_out_.reset(k, satellite->width());
  }
  if (n_big > 0) {
    big_pos_.reset(n_big, bits_for(end));
    big_ell_.reset(n_big, bits_for(max_big_ell));
    if (with_sat) {
      big_item_.reset(n_big, bits_for(k));
    }
  }

  // Stable distribution of small codewords into their areas; big codewords
  // are only recorded.
  std::uint64_t item = 0;
  std::uint64_t b = 0;
  for (std::uint64_t p = begin; p < end; ++item) {
    const Codeword cw = scan_codeword(bits, p, end);
    if (params_.is_small(bits, cw)) {
      const std::uint64_t ell = cw.payload_bits;
      const std::uint64_t dst = cursors_.get(ell);
      copy_codeword(bits, p, out, dst, cw.length());
      cursors_.set(ell, dst + cw.length());
      if (with_sat) {
        const std::uint64_t i = item_cursor_.get(ell);
        sat_out_.set(i, satellite->get(item));
        item_cursor_.set(ell, i + 1);
      }
    } else {
      big_pos_.set(b, p);
      big_ell_.set(b, cw.payload_bits);
      if (with_sat) {
        big_item_.set(b, item);
      }
      ++b;
    }
    p = cw.end();
  }

  std::uint64_t area_begin = out_pos;
  std::uint64_t first_item = 0;
  if (k_small > 0) {
    for (std::uint64_t ell = 0; ell <= max_small_ell; ++ell) {
      const std::uint64_t c = counts_.get(ell);
      if (c >= 2 && ell >= 2) {
        if (ell <= 64) {
          sort_area_direct(out, area_begin, c, ell, first_item, with_sat);
        } else {
          sort_area_indirect(out, area_begin, c, ell, first_item, with_sat);
        }
      }
      area_begin += c * codeword_length_for_width(ell);
      first_item += c;
    }
  }

  if (n_big > 0) {
    fill_identity(perm_, n_big);
    radix_records({0, n_big}, static_cast<std::uint64_t>(std::bit_width(max_big_ell)),
                  [this](std::uint64_t r, std::uint64_t shift, unsigned w) {
                    return (big_ell_.get(r) >> shift) & low_mask(w);
                  });
    for (std::uint64_t g = 0; g < n_big;) {
      const std::uint64_t ell = big_ell_.get(perm_.get(g));
      std::uint64_t g_end = g + 1;
      while (g_end < n_big && big_ell_.get(perm_.get(g_end)) == ell) {
        ++g_end;
      }
      // Digits below the leading one bit, read where the codeword lies.
      radix_records({g, g_end - g}, ell - 1,
                    [this, &bits, ell](std::uint64_t r, std::uint64_t shift, unsigned w) {
                      return bits.read(big_pos_.get(r) + ell + 1 + ell - shift - w, w);
                    });
      g = g_end;
    }
    std::uint64_t at = area_begin;
    for (std::uint64_t t = 0; t < n_big; ++t) {
      const std::uint64_t r = perm_.get(t);
      const std::uint64_t len = codeword_length_for_width(big_ell_.get(r));
      copy_codeword(bits, big_pos_.get(r), out, at, len);
      at += len;
      if (with_sat) {
        sat_out_.set(k_small + t, satellite->get(big_item_.get(r)));
      }
    }
  }

  if (with_sat) {
    std::swap(*satellite, sat_out_);
  }
  return k;
}

void SdnSorter::sort_area_direct(BitSequence& out, std::uint64_t area_begin, std::uint64_t count,
                                 std::uint64_t ell, std::uint64_t first_item, bool with_sat) {
  const std::uint64_t len = codeword_length_for_width(ell);
  const std::uint64_t need = count * len;
  if (temp_.size() < need) {
    temp_.reset(need);
  }
  if (with_sat && (sat_tmp_.size() < count || sat_tmp_.width() != sat_out_.width())) {
    sat_tmp_.reset(count, sat_out_.width());
  }
  const unsigned d = digit_bits_for(params_.half_bits, count);
  std::uint64_t* h = histogram(d);
  const auto payload_width = static_cast<unsigned>(ell);

  BitSequence* src = &out;
  BitSequence* dst = &temp_;
  std::uint64_t src_base = area_begin;
  std::uint64_t dst_base = 0;
  PackedArray* ssrc = &sat_out_;
  PackedArray* sdst = &sat_tmp_;
  std::uint64_t ssrc_base = first_item;
  std::uint64_t sdst_base = 0;

  for (std::uint64_t shift = 0; shift < ell - 1; shift += d) {
    const auto w = static_cast<unsigned>(std::min<std::uint64_t>(d, ell - 1 - shift));
    const std::size_t buckets = std::size_t{1} << w;
    const std::uint64_t mask = low_mask(w);
    std::fill(h, h + buckets + 1, 0);
    for (std::uint64_t t = 0; t < count; ++t) {
      const std::uint64_t v = src->read(src_base + t * len + ell + 1, payload_width);
      ++h[((v >> shift) & mask) + 1];
    }
    for (std::size_t i = 1; i <= buckets; ++i) {
      h[i] += h[i - 1];
    }
    for (std::uint64_t t = 0; t < count; ++t) {
      const std::uint64_t v = src->read(src_base + t * len + ell + 1, payload_width);
      const std::uint64_t slot = h[(v >> shift) & mask]++;
      write_codeword(*dst, dst_base + slot * len, v);
      if (with_sat) {
        sdst->set(sdst_base + slot, ssrc->get(ssrc_base + t));
      }
    }
    std::swap(src, dst);
    std::swap(src_base, dst_base);
    std::swap(ssrc, sdst);
    std::swap(ssrc_base, sdst_base);
  }
  if (src != &out) {
    copy_bits(temp_, 0, out, area_begin, need);
    if (with_sat) {
      for (std::uint64_t t = 0; t < count; ++t) {
        sat_out_.set(first_item + t, sat_tmp_.get(t));
      }
    }
  }
}

void SdnSorter::sort_area_indirect(BitSequence& out, std::uint64_t area_begin, std::uint64_t count,
                                   std::uint64_t ell, std::uint64_t first_item, bool with_sat) {
  const std::uint64_t len = codeword_length_for_width(ell);
  fill_identity(perm_, count);
  radix_records({0, count}, ell - 1,
                [&out, area_begin, len, ell](std::uint64_t r, std::uint64_t shift, unsigned w) {
                  return out.read(area_begin + r * len + ell + 1 + ell - shift - w, w);
                });
  const std::uint64_t need = count * len;
  if (temp_.size() < need) {
    temp_.reset(need);
  }
  if (with_sat && (sat_tmp_.size() < count || sat_tmp_.width() != sat_out_.width())) {
    sat_tmp_.reset(count, sat_out_.width());
  }
  for (std::uint64_t t = 0; t < count; ++t) {
    const std::uint64_t r = perm_.get(t);
    copy_bits(out, area_begin + r * len, temp_, t * len, len);
    if (with_sat) {
      sat_tmp_.set(t, sat_out_.get(first_item + r));
    }
  }
  copy_bits(temp_, 0, out, area_begin, need);
  if (with_sat) {
    for (std::uint64_t t = 0; t < count; ++t) {
      sat_out_.set(first_item + t, sat_tmp_.get(t));
    }
  }
}

void SdnSorter::insertion_sort(const BitSequence& bits, std::uint64_t begin, std::uint64_t end,
                               BitSequence& out, std::uint64_t out_pos, PackedArray* satellite) {
  std::array<Codeword, kMaxInsertionCutoff> items;
  std::array<std::uint64_t, kMaxInsertionCutoff> sats{};
  std::size_t k = 0;
  for (std::uint64_t p = begin; p < end; ++k) {
    items[k] = scan_codeword(bits, p, end);
    if (satellite != nullptr) {
      sats[k] = satellite->get(k);
    }
    p = items[k].end();
  }
  for (std::size_t i = 1; i < k; ++i) {
    const Codeword cw = items[i];
    const std::uint64_t sat = sats[i];
    std::size_t j = i;
    while (j > 0 && compare_codewords(bits, items[j - 1], bits, cw) > 0) {
      items[j] = items[j - 1];
      sats[j] = sats[j - 1];
      --j;
    }
    items[j] = cw;
    sats[j] = sat;
  }
  std::uint64_t at = out_pos;
  for (std::size_t i = 0; i < k; ++i) {
    copy_codeword(bits, items[i].position, out, at, items[i].length());
    at += items[i].length();
    if (satellite != nullptr) {
      satellite->set(i, sats[i]);
    }
  }
}

SdnSequence SdnSorter::sort(const SdnSequence& s, PackedArray* satellite) {
  BitSequence out(s.size_bits());
  const std::uint64_t k = sort_range(s.bits(), 0, s.size_bits(), out, 0, satellite);
  return SdnSequence::adopt(std::move(out), k, s.size_bits());
}

SdnSequence sort(const SdnSequence& s, const SortConfig& cfg) {
  SdnSorter sorter(cfg);
  return sorter.sort(s);
}

namespace {

void require_all(const SdnSequence& s, const SortConfig& cfg, bool small) {
  const SortParameters params = sort_parameters(s.size_bits(), cfg);
  for (const Codeword& cw : s) {
    if (params.is_small(s.bits(), cw) != small) {
      throw PreconditionViolation(std::string("value at bit ") + std::to_string(cw.position) +
                                  (small ? " exceeds" : " does not exceed") + " q = 2^" +
                                  std::to_string(params.small_exponent));
    }
  }
}

} // namespace

SdnSequence presort_small(const SdnSequence& s, const SortConfig& cfg) {
  require_all(s, cfg, true);
  return sort(s, cfg);
}

SdnSequence sort_big(const SdnSequence& s, const SortConfig& cfg) {
  require_all(s, cfg, false);
  return sort(s, cfg);
}

} // namespace sdn
