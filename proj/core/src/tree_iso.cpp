#include "sdn/tree_iso.hpp"

#include "sdn/classification_store.hpp"
#include "sdn/errors.hpp"
#include "sdn/height_iterator.hpp"
#include "sdn/rank.hpp"
#include "sdn/sort.hpp"
#include "sdn/tree_center.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

namespace sdn {

namespace {

void check_colors(std::span<const std::uint64_t> colors, std::uint64_t n, const char* which) {
  if (colors.size() != n) {
    throw InvalidInput(std::string("colored comparison needs ") + std::to_string(n) + " colors for " + which +
                       ", found " + std::to_string(colors.size()));
  }
  for (std::uint64_t c : colors) {
    if (c >= n) {
      throw InvalidInput(std::string("color ") + std::to_string(c) + " of " + which + " is not below n = " +
                         std::to_string(n));
    }
  }
}

struct Side {
  Side(const BalancedParens& t, std::span<const std::uint64_t> c, unsigned scale)
      : tree(&t), colors(c), store(t, scale, 2), levels(t) {}

  const BalancedParens* tree;
  std::span<const std::uint64_t> colors;
  ClassificationStore store;
  HeightIterator levels;
  const ChoiceDictionary* level = nullptr;
};

template <class Fn>
void for_each_member(const ChoiceDictionary& set, Fn&& fn) {
  for (std::uint64_t u = set.next(0); u != ChoiceDictionary::npos; u = set.next(u + 1)) {
    fn(u);
  }
}

class Engine {
public:
  Engine(const BalancedParens& a, std::span<const std::uint64_t> colors_a, const BalancedParens& b,
         std::span<const std::uint64_t> colors_b, const IsoOptions& opts, IsoStats* stats)
      : opts_(opts),
        stats_(stats),
        scale_(store_scale(a.nodes(), opts.colored)),
        tau_(pick_tau(a.nodes(), scale_, opts.tau)),
        a_(a, colors_a, scale_),
        b_(b, colors_b, scale_),
        sorter_(SortConfig{tau_, SortConfig{}.insertion_cutoff}) {}

  bool run() {
    std::uint64_t height = 0;
    while (a_.levels.has_next() || b_.levels.has_next()) {
      a_.level = a_.levels.has_next() ? &a_.levels.next() : nullptr;
      b_.level = b_.levels.has_next() ? &b_.levels.next() : nullptr;
      if (opts_.early_exit && level_size(a_) != level_size(b_)) {
        return exit_early();
      }
      if (stats_) {
        ++stats_->rounds;
      }
      if (height == 0 && !opts_.colored) {
        for (Side* s : {&a_, &b_}) {
          if (s->level) {
            for_each_member(*s->level, [&](std::uint64_t u) { s->store.write_pair(u, 0, 0); });
          }
        }
      } else if (!classify(height)) {
        return exit_early();
      }
      ++height;
    }
    return a_.store.read_pair(0) == b_.store.read_pair(0);
  }

private:
  static unsigned store_scale(std::uint64_t n, bool colored) {
    // A colored leaf may receive any rank below 2n, which must fit its slot.
    const unsigned base = ClassificationStore::kDefaultScale;
    return colored ? std::max(base, 2 * static_cast<unsigned>(std::bit_width(2 * n)) + 1) : base;
  }

  static unsigned pick_tau(std::uint64_t n, unsigned scale, unsigned tau) {
    if (tau != 0) {
      return tau;
    }
    const auto width = static_cast<unsigned>(std::bit_width(scale * (2 * n - 1) + 1));
    return std::clamp(width, 2u, kMaxTau);
  }

  static std::uint64_t level_size(const Side& s) { return s.level ? s.level->size() : 0; }

  bool exit_early() {
    if (stats_) {
      stats_->exited_early = true;
    }
    return false;
  }

  std::uint64_t color_bits(const Side& s, std::uint64_t u) const {
    return opts_.colored ? encoded_length(s.colors[s.tree->node_id(u)]) : 0;
  }

  /// Payload length of u's entry: a leading 1, the child records, the color.
  std::uint64_t payload_bits(const Side& s, std::uint64_t u) const {
    std::uint64_t bits = 1 + color_bits(s, u);
    for (std::uint64_t c = s.tree->first_child(u); c != BalancedParens::npos; c = s.tree->right_sibling(c)) {
      bits += s.store.record_bits(c);
    }
    return bits;
  }

  /// Writes u's entry at z[p..) and returns its end.
  std::uint64_t write_entry(const Side& s, std::uint64_t u, std::uint64_t payload, BitSequence& z, std::uint64_t p) {
    z.fill(p, payload, true);
    p += payload + 1;
    z.set(p++);
    const BalancedParens& t = *s.tree;
    std::uint64_t children = 0;
    std::uint64_t wrapped = 0;
    for (std::uint64_t c = t.first_child(u); c != BalancedParens::npos; c = t.right_sibling(c)) {
      ++children;
      wrapped += codeword_length_for_width(1 + s.store.record_bits(c));
    }
    if (children == 1) {
      p += s.store.copy_record(t.first_child(u), z, p);
    } else if (children > 1) {
      // Wrap each record as one codeword with payload "1" + record, so a
      // numeric sort puts equal records next to each other in a canonical
      // order, then unwrap in sorted order.
      unsorted_.reset(wrapped);
      std::uint64_t q = 0;
      for (std::uint64_t c = t.first_child(u); c != BalancedParens::npos; c = t.right_sibling(c)) {
        const std::uint64_t len = s.store.record_bits(c);
        unsorted_.fill(q, len + 1, true);
        q += len + 2;
        unsorted_.set(q++);
        q += s.store.copy_record(c, unsorted_, q);
      }
      sorted_.reset(wrapped);
      sorter_.sort_range(unsorted_, 0, wrapped, sorted_, 0);
      for (q = 0; q < wrapped;) {
        const Codeword cw = scan_codeword(sorted_, q, wrapped);
        copy_bits(sorted_, cw.payload_position() + 1, z, p, cw.payload_bits - 1);
        p += cw.payload_bits - 1;
        q = cw.end();
      }
      if (stats_) {
        stats_->sorted_codewords += children;
      }
    }
    if (opts_.colored) {
      p = write_codeword(z, p, s.colors[t.node_id(u)]);
    }
    return p;
  }

  bool classify(std::uint64_t height) {
    std::uint64_t total = 0;
    std::uint64_t count = 0;
    std::uint64_t a_bits = 0;
    for (Side* s : {&a_, &b_}) {
      if (s->level) {
        for_each_member(*s->level, [&](std::uint64_t u) {
          total += codeword_length_for_width(payload_bits(*s, u));
          ++count;
        });
      }
      if (s == &a_) {
        a_bits = total;
      }
    }
    if (stats_) {
      stats_->level_bits_total += total;
      stats_->level_bits_max = std::max(stats_->level_bits_max, total);
    }

    BitSequence z(total);
    std::uint64_t p = 0;
    for (Side* s : {&a_, &b_}) {
      if (s->level) {
        for_each_member(*s->level, [&](std::uint64_t u) { p = write_entry(*s, u, payload_bits(*s, u), z, p); });
      }
    }

    if (opts_.early_exit && !same_multiset(z, a_bits, total)) {
      return false;
    }

    const SdnSequence entries = SdnSequence::adopt(std::move(z), count, total);
    const DenseRankStructure ranks = build_dense_rank(entries, RankConfig{tau_}, &sorter_);
    p = 0;
    for (Side* s : {&a_, &b_}) {
      if (s->level) {
        for_each_member(*s->level, [&](std::uint64_t u) {
          s->store.write_pair(u, height, ranks.rank_at(entries, p));
          p = entries.codeword_at(p).end();
        });
      }
    }
    return true;
  }

  /// True if z[0, split) and z[split, end) hold the same multiset of
  /// codewords.
  bool same_multiset(const BitSequence& z, std::uint64_t split, std::uint64_t end) {
    if (split != end - split) {
      return false;
    }
    unsorted_.reset(split);
    sorted_.reset(split);
    sorter_.sort_range(z, 0, split, unsorted_, 0);
    sorter_.sort_range(z, split, end, sorted_, 0);
    return equal_bits(unsorted_, 0, sorted_, 0, split);
  }

  IsoOptions opts_;
  IsoStats* stats_;
  unsigned scale_;
  unsigned tau_;
  Side a_;
  Side b_;
  SdnSorter sorter_;
  BitSequence unsorted_;
  BitSequence sorted_;
};

} // namespace

bool rooted_isomorphic(const BalancedParens& a, std::span<const std::uint64_t> colors_a, const BalancedParens& b,
                       std::span<const std::uint64_t> colors_b, const IsoOptions& opts, IsoStats* stats) {
  if (opts.colored) {
    check_colors(colors_a, a.nodes(), "the first tree");
    check_colors(colors_b, b.nodes(), "the second tree");
  }
  if (a.nodes() != b.nodes()) {
    return false;
  }
  Engine engine(a, colors_a, b, colors_b, opts, stats);
  return engine.run();
}

bool rooted_isomorphic(const Tree& a, const Tree& b, const IsoOptions& opts, IsoStats* stats) {
  if (!a.has_root() || !b.has_root()) {
    throw PreconditionViolation("rooted comparison needs a designated root in both trees");
  }
  if (opts.colored && (!a.colored() || !b.colored())) {
    throw InvalidInput("colored comparison needs colors for both trees");
  }
  if (a.size() != b.size()) {
    return false;
  }
  return rooted_isomorphic(bp_from_tree(a), bp_from_tree(b), opts, stats);
}

bool unrooted_isomorphic(const Tree& a, const Tree& b, const IsoOptions& opts, IsoStats* stats) {
  if (opts.colored && (!a.colored() || !b.colored())) {
    throw InvalidInput("colored comparison needs colors for both trees");
  }
  if (a.size() != b.size()) {
    return false;
  }
  const auto center_a = tree_center(a);
  const auto center_b = tree_center(b);
  if (center_a.size() != center_b.size()) {
    return false;
  }
  // Every isomorphism maps centers to centers, so fixing the root of the
  // first tree and trying each center of the second covers all pairings.
  const RootedTree rooted_a = bp_from_tree(a, center_a.front());
  for (std::uint64_t r : center_b) {
    if (rooted_isomorphic(rooted_a, bp_from_tree(b, r), opts, stats)) {
      return true;
    }
  }
  return false;
}

} // namespace sdn
