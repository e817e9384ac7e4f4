// Acceptance suite: prints one PASS/FAIL line per criterion and exits with
// status 0 only if every criterion passes. Tolerances are the constants
// below; sizes and seeds are fixed so runs are reproducible.

#include "sdn/balanced_parens.hpp"
#include "sdn/codec.hpp"
#include "sdn/container.hpp"
#include "sdn/height_iterator.hpp"
#include "sdn/memory.hpp"
#include "sdn/rank.hpp"
#include "sdn/sort.hpp"
#include "sdn/tree.hpp"
#include "sdn/tree_center.hpp"
#include "sdn/tree_iso.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace sdn;
using oracle::cpp_int;
using Clock = std::chrono::steady_clock;

namespace {

// ---------------------------------------------------------------- limits

constexpr double kCodecSeconds = 5;
constexpr double kSortSeconds = 60;
constexpr double kRankSeconds = 120;
constexpr double kIsoSeconds = 300;
constexpr std::uint64_t kMaxDirectoryReads = 1;
constexpr std::uint64_t kMaxSelects = 1;
constexpr std::uint64_t kMaxFrameReads = 3;
constexpr std::uint64_t kMaxTableLookups = 2;
constexpr double kIteratorWorkPerNode = 4;
constexpr double kSortBitsPerInputBit = 8;
constexpr double kRankBitsPerInputBit = 16;
/// Isomorphism budget is 32 * n * kIsoSpaceConstant bits: two stores of
/// 12n bits, two height iterators of 8n bits, and the per-level vector
/// sequence with its rank structure and sort scratch.
constexpr double kIsoSpaceConstant = 2.5;
constexpr double kFlatRatio = 1.25;
constexpr double kDoublingRatio = 2.8;
constexpr int kTimingRuns = 5;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

/// Value with exactly `bits` significant bits as limbs plus its cpp_int.
struct WideValue {
  Natural natural;
  cpp_int big;
};

WideValue random_wide(oracle::Rng& rng, unsigned bits) {
  if (bits == 0) {
    return {Natural(), 0};
  }
  std::vector<std::uint64_t> limbs((bits + 63) / 64);
  for (auto& l : limbs) {
    l = rng();
  }
  const unsigned top = bits - 64 * static_cast<unsigned>(limbs.size() - 1);
  limbs.back() &= low_mask(top);
  limbs.back() |= std::uint64_t{1} << (top - 1);
  cpp_int big;
  for (auto it = limbs.rbegin(); it != limbs.rend(); ++it) {
    big = (big << 64) | *it;
  }
  return {Natural::from_limbs(std::move(limbs)), std::move(big)};
}

// ---------------------------------------------------------------- 1

Outcome codec_exactness() {
  Outcome out;
  const auto t0 = Clock::now();
  const std::array<const char*, 5> want{"0", "101", "11010", "11011", "1110100"};
  for (std::uint64_t x = 0; x <= 4; ++x) {
    if (encode(x).to_string() != want[x]) {
      out.pass = false;
      out.detail += "encode(" + std::to_string(x) + ") wrong; ";
    }
  }
  const auto bytes = to_container_bytes(SdnSequence::from_values(std::vector<std::uint64_t>{1, 2, 3, 4}));
  const std::vector<std::uint8_t> payload(bytes.begin() + kContainerHeaderBytes, bytes.end());
  if (payload != std::vector<std::uint8_t>{0b10111010, 0b11011111, 0b01000000}) {
    out.pass = false;
    out.detail += "container payload of 1 2 3 4 wrong; ";
  }
  const auto zero = to_container_bytes(SdnSequence::from_values(std::vector<std::uint64_t>{0}));
  if (zero.size() != kContainerHeaderBytes + 1 || zero.back() != 0) {
    out.pass = false;
    out.detail += "container of 0 wrong; ";
  }

  constexpr std::uint64_t kLimit = std::uint64_t{1} << 20;
  std::uint64_t failures = 0;
  BitSequence one(64);
  for (std::uint64_t x = 0; x < kLimit; ++x) {
    const std::uint64_t end = write_codeword(one, 0, x);
    const Codeword cw = scan_codeword(one, 0, end);
    if (end != encoded_length(x) || cw.end() != end || codeword_value_u64(one, cw) != x) {
      ++failures;
    }
  }
  std::vector<std::uint64_t> all(kLimit);
  std::iota(all.begin(), all.end(), 0);
  const auto seq = SdnSequence::from_values(all);
  const auto back = from_container_bytes(to_container_bytes(seq));
  if (back.values_u64() != all) {
    ++failures;
  }
  const double secs = seconds_since(t0);
  out.pass = out.pass && failures == 0 && secs < kCodecSeconds;
  out.detail += "round trip x < 2^20: " + std::to_string(failures) + " failures; " + fmt("%.2f s", secs) +
                " (limit " + fmt("%.0f s", kCodecSeconds) + ")";
  return out;
}

// ---------------------------------------------------------------- 2

Outcome sort_oracle() {
  Outcome out;
  const auto t0 = Clock::now();
  oracle::Rng rng(2002);
  SdnSorter sorter;
  std::uint64_t mismatches = 0;
  std::uint64_t total_values = 0;
  std::uint64_t big_values = 0;
  constexpr int kInstances = 10000;
  for (int inst = 0; inst < kInstances; ++inst) {
    const std::size_t k = oracle::uniform(rng, 0, 1000);
    std::vector<WideValue> values;
    values.reserve(k);
    const unsigned small_width = static_cast<unsigned>(oracle::uniform(rng, 1, 12));
    for (std::size_t i = 0; i < k; ++i) {
      const auto mode = oracle::uniform(rng, 0, 9);
      if (mode < 6) {
        values.push_back(random_wide(rng, static_cast<unsigned>(oracle::uniform(rng, 0, small_width))));
      } else if (mode < 7 && !values.empty()) {
        values.push_back(values[oracle::uniform(rng, 0, values.size() - 1)]);
      } else {
        values.push_back(random_wide(rng, static_cast<unsigned>(oracle::uniform(rng, 0, 512))));
      }
    }
    std::vector<Natural> nat;
    nat.reserve(k);
    for (const auto& v : values) {
      nat.push_back(v.natural);
    }
    const SdnSequence s = SdnSequence::from_naturals(nat);
    const SortParameters params = sort_parameters(s.size_bits(), sorter.config());
    for (const Codeword& cw : s) {
      big_values += params.is_small(s.bits(), cw) ? 0 : 1;
    }
    PackedArray index(k, bits_for(k));
    for (std::uint64_t i = 0; i < k; ++i) {
      index.set(i, i);
    }
    const SdnSequence sorted = sorter.sort(s, &index);

    std::vector<std::uint64_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a].big < values[b].big; });
    const auto got = sorted.values();
    bool ok = got.size() == k && sorted.size_bits() == s.size_bits();
    for (std::uint64_t i = 0; ok && i < k; ++i) {
      ok = got[i] == values[order[i]].natural && index.get(i) == order[i];
    }
    mismatches += ok ? 0 : 1;
    total_values += k;
  }
  const double secs = seconds_since(t0);
  out.pass = mismatches == 0 && secs < kSortSeconds;
  out.detail = std::to_string(kInstances) + " instances, " + std::to_string(total_values) + " values (" +
               std::to_string(big_values) + " above q): " + std::to_string(mismatches) + " mismatches; " +
               fmt("%.1f s", secs) + " (limit " + fmt("%.0f s", kSortSeconds) + ")";
  return out;
}

// ---------------------------------------------------------------- 3 and 4

struct CounterMax {
  QueryCounters max;
  std::uint64_t queries = 0;

  void add(const QueryCounters& c) {
    max.directory_reads = std::max(max.directory_reads, c.directory_reads);
    max.selects = std::max(max.selects, c.selects);
    max.frame_reads = std::max(max.frame_reads, c.frame_reads);
    max.table_lookups = std::max(max.table_lookups, c.table_lookups);
    ++queries;
  }
};

CounterMax g_counters;

Outcome rank_exactness() {
  Outcome out;
  const auto t0 = Clock::now();
  std::uint64_t mismatches = 0;
  std::uint64_t sequences = 0;
  SdnSorter sorter;
  const RankConfig cfg{};

  // Worked example.
  {
    const auto s = SdnSequence::from_values(std::vector<std::uint64_t>{6, 9, 2, 2, 0});
    const auto dense = build_dense_rank(s, cfg, &sorter);
    const auto comp = build_rank(s, cfg, &sorter);
    std::vector<std::uint64_t> d, r;
    for (const Codeword& cw : s) {
      d.push_back(dense.rank_at(s, cw.position));
      r.push_back(comp.rank_at(s, cw.position));
    }
    if (d != std::vector<std::uint64_t>{2, 3, 1, 1, 0} || r != std::vector<std::uint64_t>{3, 4, 1, 1, 0}) {
      out.pass = false;
      out.detail += "6 9 2 2 0 example wrong; ";
    }
  }

  // Exhaustive: every sequence of length k <= 6 over [0, 16).
  std::array<std::uint64_t, 6> value{};
  std::array<std::uint64_t, 6> pos{};
  SdnSequence s(6 * 9);
  for (unsigned k = 0; k <= 6; ++k) {
    value.fill(0);
    while (true) {
      s.reset(6 * 9);
      unsigned present = 0;
      for (unsigned i = 0; i < k; ++i) {
        pos[i] = s.size_bits();
        s.append(value[i]);
        present |= 1u << value[i];
      }
      const auto dense = build_dense_rank(s, cfg, &sorter);
      const auto comp = build_rank(s, cfg, &sorter);
      for (unsigned i = 0; i < k; ++i) {
        const std::uint64_t x = value[i];
        std::uint64_t less = 0;
        for (unsigned j = 0; j < k; ++j) {
          less += value[j] < x ? 1 : 0;
        }
        const auto distinct_less = static_cast<std::uint64_t>(std::popcount(present & ((1u << x) - 1)));
        QueryCounters dc, cc;
        if (dense.rank(pos[i], x, &dc) != distinct_less || comp.rank(pos[i], x, &cc) != less) {
          ++mismatches;
        }
        g_counters.add(dc);
        g_counters.add(cc);
      }
      ++sequences;
      unsigned i = 0;
      while (i < k && ++value[i] == 16) {
        value[i++] = 0;
      }
      if (i == k) {
        break;
      }
    }
  }
  const double exhaustive_secs = seconds_since(t0);

  // Random instances with values above N.
  oracle::Rng rng(3003);
  constexpr int kRandom = 10000;
  std::uint64_t above_n = 0;
  for (int inst = 0; inst < kRandom; ++inst) {
    const std::size_t k = oracle::uniform(rng, 1, 300);
    std::vector<WideValue> values;
    const unsigned small_width = static_cast<unsigned>(oracle::uniform(rng, 1, 11));
    for (std::size_t i = 0; i < k; ++i) {
      const auto mode = oracle::uniform(rng, 0, 9);
      if (mode < 6) {
        values.push_back(random_wide(rng, static_cast<unsigned>(oracle::uniform(rng, 0, small_width))));
      } else if (mode < 8 && !values.empty()) {
        values.push_back(values[oracle::uniform(rng, 0, values.size() - 1)]);
      } else {
        values.push_back(random_wide(rng, static_cast<unsigned>(oracle::uniform(rng, 0, 160))));
      }
    }
    std::vector<Natural> nat;
    std::vector<cpp_int> big;
    for (const auto& v : values) {
      nat.push_back(v.natural);
      big.push_back(v.big);
    }
    const auto seq = SdnSequence::from_naturals(nat);
    const auto dense = build_dense_rank(seq, cfg, &sorter);
    const auto comp = build_rank(seq, cfg, &sorter);
    const auto want_dense = oracle::dense_ranks(big);
    const auto want_comp = oracle::competitive_ranks(big);
    std::size_t i = 0;
    for (const Codeword& cw : seq) {
      QueryCounters dc, cc;
      if (dense.rank(cw.position, nat[i], &dc) != want_dense[i] || comp.rank(cw.position, nat[i], &cc) != want_comp[i]) {
        ++mismatches;
      }
      above_n += big[i] > seq.size_bits() ? 1 : 0;
      g_counters.add(dc);
      g_counters.add(cc);
      ++i;
    }
  }
  const double secs = seconds_since(t0);
  out.pass = out.pass && mismatches == 0 && secs < kRankSeconds;
  out.detail += std::to_string(sequences) + " exhaustive sequences (" + fmt("%.1f s", exhaustive_secs) + ") + " +
                std::to_string(kRandom) + " random (" + std::to_string(above_n) + " values above N): " +
                std::to_string(mismatches) + " mismatches; " + fmt("%.1f s", secs) + " (limit " +
                fmt("%.0f s", kRankSeconds) + ")";
  return out;
}

Outcome rank_locality() {
  const auto& m = g_counters.max;
  Outcome out;
  out.pass = g_counters.queries > 0 && m.directory_reads <= kMaxDirectoryReads && m.selects <= kMaxSelects &&
             m.frame_reads <= kMaxFrameReads && m.table_lookups <= kMaxTableLookups;
  out.detail = "max per query over " + std::to_string(g_counters.queries) + " queries: directory " +
               std::to_string(m.directory_reads) + ", select " + std::to_string(m.selects) + ", frames " +
               std::to_string(m.frame_reads) + ", table lookups " + std::to_string(m.table_lookups);
  return out;
}

// ---------------------------------------------------------------- 5

Outcome height_iterator_correctness() {
  Outcome out;
  oracle::Rng rng(5005);
  std::uint64_t wrong = 0;
  double worst = 0;
  constexpr int kTrees = 1000;
  for (int t = 0; t < kTrees; ++t) {
    const std::uint64_t n = oracle::uniform(rng, 1, 10000);
    const auto bp = bp_from_tree(oracle::to_tree(oracle::random_tree(rng, n, oracle::random_shape(rng)))).parens;
    const auto height = oracle::heights(oracle::pointer_tree(bp));
    std::vector<std::uint8_t> seen(bp.size(), 0);
    HeightIterator it(bp);
    std::uint64_t h = 0;
    while (it.has_next()) {
      const auto& level = it.next();
      for (auto u = level.next(0); u != ChoiceDictionary::npos; u = level.next(u + 1)) {
        if (!bp.is_open(u) || seen[u]++ || height[u] != h) {
          ++wrong;
        }
      }
      ++h;
    }
    for (std::uint64_t i = 0; i < bp.size(); ++i) {
      if (bp.is_open(i) && seen[i] != 1) {
        ++wrong;
      }
    }
    worst = std::max(worst, double(it.work()) / double(n));
  }
  out.pass = wrong == 0 && worst <= kIteratorWorkPerNode;
  out.detail = std::to_string(kTrees) + " trees, " + std::to_string(wrong) + " misplaced nodes; max work/n " +
               fmt("%.2f", worst) + " (C = " + fmt("%.0f", kIteratorWorkPerNode) + ")";
  return out;
}

// ---------------------------------------------------------------- 6

Outcome tree_center_check() {
  Outcome out;
  oracle::Rng rng(6006);
  std::uint64_t wrong = 0;
  std::uint64_t two = 0;
  constexpr int kTrees = 500;
  for (int t = 0; t < kTrees; ++t) {
    const auto n = oracle::uniform(rng, 1, 500);
    const Tree tree = oracle::relabeled(rng, oracle::to_tree(oracle::random_tree(rng, n, oracle::random_shape(rng))));
    const auto c = tree_center(tree);
    bool ok = c == oracle::bfs_center(oracle::adjacency(tree)) && (c.size() == 1 || c.size() == 2);
    if (ok && c.size() == 2) {
      const auto adj = tree.neighbors(c[0]);
      ok = std::find(adj.begin(), adj.end(), c[1]) != adj.end();
      ++two;
    }
    wrong += ok ? 0 : 1;
  }
  out.pass = wrong == 0;
  out.detail = std::to_string(kTrees) + " trees (" + std::to_string(two) + " with two centers): " +
               std::to_string(wrong) + " mismatches against all-pairs BFS";
  return out;
}

// ---------------------------------------------------------------- 7

Outcome isomorphism_check() {
  Outcome out;
  const auto t0 = Clock::now();
  oracle::Rng rng(7007);
  std::uint64_t a_fail = 0, b_fail = 0, c_fail = 0, d_fail = 0, b_iso = 0, d_pairs = 0;
  constexpr int kPairs = 500;
  for (int t = 0; t < kPairs; ++t) {
    const auto n = oracle::uniform(rng, 1, 2000);
    const Tree tree = oracle::to_tree(oracle::random_tree(rng, n, oracle::random_shape(rng)));
    const Tree copy = oracle::relabeled(rng, tree);
    if (!rooted_isomorphic(tree, copy) || !unrooted_isomorphic(tree, copy)) {
      ++a_fail;
    }
  }
  for (int t = 0; t < kPairs; ++t) {
    const auto n = oracle::uniform(rng, 3, 2000);
    const Tree tree = oracle::to_tree(oracle::random_tree(rng, n, oracle::random_shape(rng)));
    const Tree mutant = oracle::relabeled(rng, oracle::move_one_edge(rng, tree));
    const bool rooted = rooted_isomorphic(tree, mutant);
    const bool unrooted = unrooted_isomorphic(tree, mutant);
    b_iso += unrooted ? 1 : 0;
    if (rooted != oracle::ahu_rooted(tree, mutant, false) || unrooted != oracle::ahu_unrooted(tree, mutant, false)) {
      ++b_fail;
    }
  }
  IsoOptions colored;
  colored.colored = true;
  for (int t = 0; t < kPairs; ++t) {
    auto pt = oracle::random_tree(rng, oracle::uniform(rng, 1, 2000), oracle::random_shape(rng));
    oracle::random_colors(rng, pt, oracle::uniform(rng, 1, 6));
    const Tree tree = oracle::to_tree(pt);
    auto changed = pt;
    const auto u = oracle::uniform(rng, 0, pt.size() - 1);
    if (pt.size() == 1) {
      continue;  // the only color 0 < n = 1 admits no recoloring
    }
    changed.colors[u] = (pt.colors[u] + oracle::uniform(rng, 1, pt.size() - 1)) % pt.size();
    const Tree recolored = oracle::relabeled(rng, oracle::to_tree(changed));
    const Tree same = oracle::relabeled(rng, tree);
    if (!rooted_isomorphic(tree, same, colored) || !unrooted_isomorphic(tree, same, colored) ||
        rooted_isomorphic(tree, recolored, colored) || unrooted_isomorphic(tree, recolored, colored)) {
      ++c_fail;
    }
  }
  for (std::uint64_t n = 1; n <= 8; ++n) {
    const auto trees = oracle::all_free_trees(n);
    for (const auto& x : trees) {
      for (const auto& y0 : trees) {
        const Tree y = oracle::relabeled(rng, y0);
        ++d_pairs;
        if (unrooted_isomorphic(x, y) != oracle::ahu_unrooted(x, y, false)) {
          ++d_fail;
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  out.pass = a_fail + b_fail + c_fail + d_fail == 0 && secs < kIsoSeconds;
  out.detail = "(a) " + std::to_string(a_fail) + " failures, (b) " + std::to_string(b_fail) + " disagreements (" +
               std::to_string(b_iso) + " mutants isomorphic), (c) " + std::to_string(c_fail) + " failures, (d) " +
               std::to_string(d_fail) + " of " + std::to_string(d_pairs) + " pairs wrong; " + fmt("%.1f s", secs) +
               " (limit " + fmt("%.0f s", kIsoSeconds) + ")";
  return out;
}

// ---------------------------------------------------------------- inputs for 8 and 9

/// Random values filling n_bits bits. Widths are uniform in
/// [0, bit_width(n_bits) + 1], so the share of values above N stays about
/// the same at every size.
SdnSequence sequence_of_bits(oracle::Rng& rng, std::uint64_t n_bits) {
  std::vector<std::uint64_t> v;
  std::uint64_t bits = 0;
  const auto max_width = static_cast<unsigned>(std::bit_width(n_bits)) + 1;
  while (true) {
    const auto w = static_cast<unsigned>(oracle::uniform(rng, 0, max_width));
    const std::uint64_t x = w == 0 ? 0 : (std::uint64_t{1} << (w - 1)) | (rng() & low_mask(w - 1));
    if (bits + encoded_length(x) > n_bits) {
      break;
    }
    bits += encoded_length(x);
    v.push_back(x);
  }
  while (bits < n_bits) {
    v.push_back(0);
    ++bits;
  }
  return SdnSequence::from_values(v);
}

struct IsoInput {
  RootedTree a;
  RootedTree b;
};

IsoInput iso_input(oracle::Rng& rng, std::uint64_t n) {
  const Tree t = oracle::to_tree(oracle::random_tree(rng, n, oracle::Shape::Recursive));
  const Tree copy = oracle::relabeled(rng, t);
  return {bp_from_tree(t), bp_from_tree(copy)};
}

// ---------------------------------------------------------------- 8

Outcome space_bounds() {
  Outcome out;
  oracle::Rng rng(8008);
  std::ostringstream detail;
  bool ok = true;
  auto report = [&](const char* what, const std::vector<double>& per_unit, double limit) {
    const auto [lo, hi] = std::minmax_element(per_unit.begin(), per_unit.end());
    const bool flat = *hi / *lo <= kFlatRatio;
    const bool under = *hi <= limit;
    ok = ok && flat && under;
    detail << what << " peak/size " << fmt("%.2f", *lo) << ".." << fmt("%.2f", *hi) << " (limit "
           << fmt("%.0f", limit) << ", flat " << fmt("%.3f", *hi / *lo) << "); ";
  };
  const std::array<std::uint64_t, 3> sizes{1u << 16, 1u << 18, 1u << 20};

  std::vector<double> sort_ratio, rank_ratio, iso_ratio;
  for (auto size : sizes) {
    const SdnSequence s = sequence_of_bits(rng, size);
    {
      memory::PeakScope scope;
      const SdnSequence sorted = sort(s);
      sort_ratio.push_back(double(scope.peak_bits()) / double(s.size_bits()));
    }
    {
      memory::PeakScope scope;
      {
        const auto dense = build_dense_rank(s);
      }
      {
        const auto comp = build_rank(s);
      }
      rank_ratio.push_back(double(scope.peak_bits()) / double(s.size_bits()));
    }
    const IsoInput in = iso_input(rng, size);
    {
      memory::PeakScope scope;
      if (!rooted_isomorphic(in.a, in.b)) {
        ok = false;
        detail << "iso input not recognized; ";
      }
      iso_ratio.push_back(double(scope.peak_bits()) / double(size));
    }
  }
  report("sort", sort_ratio, kSortBitsPerInputBit);
  report("rank build", rank_ratio, kRankBitsPerInputBit);
  report("isomorphism", iso_ratio, 32 * kIsoSpaceConstant);
  out.pass = ok;
  out.detail = detail.str() + "sizes 2^16, 2^18, 2^20";
  return out;
}

// ---------------------------------------------------------------- 9

double median_seconds(const std::function<void()>& fn) {
  std::vector<double> t;
  for (int r = 0; r < kTimingRuns; ++r) {
    const auto t0 = Clock::now();
    fn();
    t.push_back(seconds_since(t0));
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

Outcome linear_scaling() {
  Outcome out;
  oracle::Rng rng(9009);
  std::ostringstream detail;
  bool ok = true;
  auto report = [&](const char* what, const std::vector<double>& times) {
    double worst = 0;
    for (std::size_t i = 1; i < times.size(); ++i) {
      worst = std::max(worst, times[i] / times[i - 1]);
    }
    ok = ok && worst <= kDoublingRatio;
    detail << what << " max doubling ratio " << fmt("%.2f", worst) << "; ";
  };
  std::vector<double> sort_t, rank_t, iso_t;
  for (unsigned e = 16; e <= 22; ++e) {
    const std::uint64_t size = std::uint64_t{1} << e;
    const SdnSequence s = sequence_of_bits(rng, size);
    SdnSorter sorter;
    sort_t.push_back(median_seconds([&] { (void)sorter.sort(s); }));
    rank_t.push_back(median_seconds([&] {
      (void)build_dense_rank(s, {}, &sorter);
      (void)build_rank(s, {}, &sorter);
    }));
    const IsoInput in = iso_input(rng, size);
    iso_t.push_back(median_seconds([&] {
      if (!rooted_isomorphic(in.a, in.b)) {
        ok = false;
      }
    }));
  }
  report("sort", sort_t);
  report("rank build", rank_t);
  report("isomorphism", iso_t);
  out.pass = ok;
  out.detail = detail.str() + "sizes 2^16..2^22, median of " + std::to_string(kTimingRuns) + " (limit " +
               fmt("%.1f", kDoublingRatio) + ")";
  return out;
}

} // namespace

int main(int argc, char** argv) {
  // Optional arguments select criteria by number; the default runs all.
  std::vector<bool> selected(10, argc == 1);
  for (int i = 1; i < argc; ++i) {
    const int c = std::atoi(argv[i]);
    if (c >= 1 && c <= 9) {
      selected[c] = true;
    }
  }
  struct Entry {
    const char* name;
    Outcome (*run)();
  };
  const Entry criteria[] = {
      {"codec exactness", codec_exactness},
      {"sort oracle equivalence", sort_oracle},
      {"dense/competitive rank exactness", rank_exactness},
      {"rank query locality", rank_locality},
      {"height iterator correctness", height_iterator_correctness},
      {"tree center", tree_center_check},
      {"isomorphism soundness/completeness", isomorphism_check},
      {"space bounds", space_bounds},
      {"linear-time scaling", linear_scaling},
  };
  int failed = 0;
  int index = 1;
  for (const auto& c : criteria) {
    if (!selected[index]) {
      ++index;
      continue;
    }
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
