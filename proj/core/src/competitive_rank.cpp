#include "rank_common.hpp"

#include "sdn/errors.hpp"

#include <optional>
#include <string>

namespace sdn {

namespace {

// Lays out the occurrence counts of one region after another. Each count is
// a codeword that never straddles a frame; a count whose codeword is wider
// than a frame takes a marker frame of all ones followed by two frames with
// the count in binary. Run once to size the arrays and once to fill them.
class CountWriter {
public:
  CountWriter(unsigned h, BitSequence* counts, BitSequence* starts, PackedArray* prefix)
      : h_(h), counts_(counts), starts_(starts), prefix_(prefix) {}

  void emit(std::uint64_t c) {
    const std::uint64_t len = encoded_length(c);
    if (len <= h_) {
      if (cursor_ % h_ + len > h_) {
        cursor_ = detail::round_up(cursor_, h_);
      }
      begin_record();
      if (counts_ != nullptr && c != 0) {
        write_codeword(*counts_, cursor_, c);
      }
      cursor_ += len;
    } else {
      if (c >> (2 * h_) != 0) {
        throw ConfigError("count " + std::to_string(c) + " does not fit two frames of " +
                          std::to_string(h_) + " bits; raise tau");
      }
      cursor_ = detail::round_up(cursor_, h_);
      begin_record();
      if (counts_ != nullptr) {
        counts_->fill(cursor_, h_, true);
        counts_->write(cursor_ + h_, 2 * h_, c);
      }
      cursor_ += 3 * h_;
    }
    occurrences_ += c;
  }

  std::uint64_t bits() const noexcept { return detail::round_up(cursor_, h_); }

private:
  void begin_record() {
    const std::uint64_t f = cursor_ / h_;
    if (prefix_ != nullptr) {
      if (!frame_seen_ || f != last_frame_) {
        prefix_->set(f, occurrences_);
      }
      starts_->set(cursor_);
    }
    frame_seen_ = true;
    last_frame_ = f;
  }

  unsigned h_;
  BitSequence* counts_;
  BitSequence* starts_;
  PackedArray* prefix_;
  std::uint64_t cursor_ = 0;
  std::uint64_t occurrences_ = 0;
  std::uint64_t last_frame_ = 0;
  bool frame_seen_ = false;
};

// Walks the small values of a sorted sequence as (value, multiplicity) runs.
class RunReader {
public:
  RunReader(const BitSequence& sorted, std::uint64_t end, std::uint64_t n)
      : bits_(sorted), end_(end), n_(n), n_width_(static_cast<unsigned>(std::bit_width(n))) {
    advance();
  }

  bool done() const noexcept { return done_; }
  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t count() const noexcept { return count_; }

  void advance() {
    if (pos_ >= end_) {
      done_ = true;
      return;
    }
    Codeword cw = scan_codeword(bits_, pos_, end_);
    if (detail::exceeds(bits_, cw, n_, n_width_)) {
      done_ = true;
      return;
    }
    value_ = codeword_value_u64(bits_, cw);
    count_ = 0;
    while (true) {
      ++count_;
      pos_ = cw.end();
      if (pos_ >= end_) {
        break;
      }
      cw = scan_codeword(bits_, pos_, end_);
      if (cw.payload_bits > 64 || codeword_value_u64(bits_, cw) != value_) {
        break;
      }
    }
  }

private:
  const BitSequence& bits_;
  std::uint64_t end_;
  std::uint64_t n_;
  unsigned n_width_;
  std::uint64_t pos_ = 0;
  std::uint64_t value_ = 0;
  std::uint64_t count_ = 0;
  bool done_ = false;
};

} // namespace

CompetitiveRankStructure build_rank(const SdnSequence& s, const RankConfig& cfg, SdnSorter* sorter) {
  CompetitiveRankStructure r;
  const std::uint64_t n = s.size_bits();
  const unsigned h = detail::rank_frame_bits(n, cfg);
  r.n_ = n;
  r.h_ = h;
  r.overlay_width_ = bits_for(n);
  r.prefixsum_ = &shared_prefixsum_table(h);

  std::optional<SdnSorter> local;
  if (sorter == nullptr) {
    sorter = &local.emplace(SortConfig{cfg.tau});
  }

  const std::uint64_t regions = (n + h) / h;  // covers values 0..n
  std::uint64_t small_count = 0;
  {
    BitSequence sorted(n);
    sorter->sort_range(s.bits(), 0, n, sorted, 0);

    // One walk per pass: region by region, h counts each (zeros for absent
    // values).
    auto walk = [&](CountWriter& writer, PackedArray* directory) {
      RunReader runs(sorted, n, n);
      std::uint64_t packet = 0;
      std::uint64_t occurrences = 0;
      while (!runs.done()) {
        const std::uint64_t region = runs.value() / h;
        if (directory != nullptr) {
          directory->set(region, packet + 1);
        }
        for (std::uint64_t v = region * h; v < (region + 1) * h; ++v) {
          if (!runs.done() && runs.value() == v) {
            writer.emit(runs.count());
            occurrences += runs.count();
            runs.advance();
          } else {
            writer.emit(0);
          }
        }
        ++packet;
      }
      r.packets_ = packet;
      return occurrences;
    };

    CountWriter sizing(h, nullptr, nullptr, nullptr);
    small_count = walk(sizing, nullptr);
    const std::uint64_t total = sizing.bits();

    r.counts_.reset(total);
    BitSequence starts(total);
    r.prefix_.reset(total / h, bits_for(small_count));
    r.directory_.reset(regions, bits_for(r.packets_));
    CountWriter writer(h, &r.counts_, &starts, &r.prefix_);
    walk(writer, &r.directory_);
    r.starts_ = RankSelectIndex(std::move(starts));
  }

  if (small_count < s.count()) {
    r.overlay_.reset(n);
    detail::for_each_big_sorted(s, *sorter,
                                [&](std::uint64_t pos, std::uint64_t, std::uint64_t run_start, std::uint64_t) {
                                  r.overlay_.write(pos, r.overlay_width_, small_count + run_start);
                                });
  }
  return r;
}

std::uint64_t CompetitiveRankStructure::small_rank(std::uint64_t x, QueryCounters* counters) const noexcept {
  const std::uint64_t packet = directory_.get(x / h_);
  if (counters != nullptr) {
    counters->directory_reads += 1;
  }
  if (packet == 0) {
    return 0;  // x does not occur; outside the contract
  }
  const std::uint64_t p = starts_.select((packet - 1) * h_ + x % h_ + 1);
  const std::uint64_t f = p / h_;
  const std::uint64_t frame = counts_.read(f * h_, h_);
  const std::uint64_t before = prefix_.get(f);
  if (counters != nullptr) {
    counters->selects += 1;
    counters->frame_reads += 2;
  }
  if (frame == low_mask(h_)) {
    return before;
  }
  // Keep only the complete codewords in front of x's count.
  const auto o = static_cast<unsigned>(p - f * h_);
  const std::uint64_t head = o == 0 ? 0 : (frame >> (h_ - o)) << (h_ - o);
  if (counters != nullptr) {
    counters->table_lookups += 1;
  }
  return before + (*prefixsum_)[head];
}

std::uint64_t CompetitiveRankStructure::big_rank(std::uint64_t p_x, QueryCounters* counters) const noexcept {
  if (counters != nullptr) {
    counters->frame_reads += 1;
  }
  return overlay_.read(p_x, overlay_width_);
}

std::uint64_t CompetitiveRankStructure::rank(std::uint64_t p_x, std::uint64_t x,
                                             QueryCounters* counters) const noexcept {
  return x > n_ ? big_rank(p_x, counters) : small_rank(x, counters);
}

std::uint64_t CompetitiveRankStructure::rank(std::uint64_t p_x, const Natural& x,
                                             QueryCounters* counters) const noexcept {
  if (!x.fits_u64()) {
    return big_rank(p_x, counters);
  }
  return rank(p_x, x.to_u64(), counters);
}

std::uint64_t CompetitiveRankStructure::rank_at(const SdnSequence& s, std::uint64_t p_x,
                                                QueryCounters* counters) const {
  const Codeword cw = s.codeword_at(p_x);
  if (detail::exceeds(s.bits(), cw, n_, static_cast<unsigned>(std::bit_width(n_)))) {
    return big_rank(p_x, counters);
  }
  return small_rank(codeword_value_u64(s.bits(), cw), counters);
}

std::uint64_t CompetitiveRankStructure::space_bits() const noexcept {
  return directory_.storage_bits() + counts_.storage_bits() + starts_.bits().storage_bits() +
         starts_.index_bits() + prefix_.storage_bits() + overlay_.storage_bits();
}

} // namespace sdn
