// Microbenchmarks for sorting, rank construction and queries, and rooted
// isomorphism. Sizes are bits for sequences and nodes for trees; the
// aux_bits_per_unit counter is peak auxiliary bits divided by that size.

#include "sdn/codec.hpp"
#include "sdn/memory.hpp"
#include "sdn/rank.hpp"
#include "sdn/sort.hpp"
#include "sdn/tree.hpp"
#include "sdn/tree_iso.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <vector>

namespace {

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Widths uniform in [0, bit_width(N) + 1], padded with zeros to exactly N bits.
sdn::SdnSequence make_sequence(std::uint64_t n_bits, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint64_t> v;
  std::uint64_t bits = 0;
  const auto max_width = static_cast<unsigned>(std::bit_width(n_bits)) + 1;
  while (true) {
    const auto w = static_cast<unsigned>(uniform(rng, 0, max_width));
    const std::uint64_t x = w == 0 ? 0 : (std::uint64_t{1} << (w - 1)) | (rng() & sdn::low_mask(w - 1));
    if (bits + sdn::encoded_length(x) > n_bits) {
      break;
    }
    bits += sdn::encoded_length(x);
    v.push_back(x);
  }
  v.resize(v.size() + (n_bits - bits), 0);
  return sdn::SdnSequence::from_values(v);
}

std::pair<sdn::RootedTree, sdn::RootedTree> make_trees(std::uint64_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> a, b;
  for (std::uint64_t i = 1; i < n; ++i) {
    const std::uint64_t p = uniform(rng, 0, i - 1);
    a.emplace_back(p, i);
    b.emplace_back(perm[p], perm[i]);
  }
  std::shuffle(b.begin(), b.end(), rng);
  return {sdn::bp_from_tree(sdn::Tree(n, a), 0), sdn::bp_from_tree(sdn::Tree(n, b), perm[0])};
}

void report_peak(benchmark::State& state, std::int64_t peak_bits, std::uint64_t size) {
  state.counters["aux_bits_per_unit"] = double(peak_bits) / double(size);
  state.SetComplexityN(static_cast<std::int64_t>(size));
}

void BM_Sort(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const sdn::SdnSequence s = make_sequence(n, 1);
  sdn::SdnSorter sorter;
  std::int64_t peak = 0;
  for (auto _ : state) {
    sdn::memory::PeakScope scope;
    auto out = sorter.sort(s);
    benchmark::DoNotOptimize(out);
    peak = std::max(peak, scope.peak_bits());
  }
  report_peak(state, peak, n);
}

void BM_DenseRankBuild(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const sdn::SdnSequence s = make_sequence(n, 2);
  std::int64_t peak = 0;
  for (auto _ : state) {
    sdn::memory::PeakScope scope;
    auto r = sdn::build_dense_rank(s);
    benchmark::DoNotOptimize(r);
    peak = std::max(peak, scope.peak_bits());
  }
  report_peak(state, peak, n);
}

void BM_RankBuild(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const sdn::SdnSequence s = make_sequence(n, 3);
  std::int64_t peak = 0;
  for (auto _ : state) {
    sdn::memory::PeakScope scope;
    auto r = sdn::build_rank(s);
    benchmark::DoNotOptimize(r);
    peak = std::max(peak, scope.peak_bits());
  }
  report_peak(state, peak, n);
}

void BM_RankQuery(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const sdn::SdnSequence s = make_sequence(n, 4);
  const auto r = sdn::build_rank(s);
  std::vector<std::uint64_t> positions;
  for (const auto& cw : s) {
    positions.push_back(cw.position);
  }
  Rng rng(5);
  std::shuffle(positions.begin(), positions.end(), rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(r.rank_at(s, positions[i]));
    i = i + 1 == positions.size() ? 0 : i + 1;
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_RootedIso(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto [a, b] = make_trees(n, 6);
  std::int64_t peak = 0;
  for (auto _ : state) {
    sdn::memory::PeakScope scope;
    benchmark::DoNotOptimize(sdn::rooted_isomorphic(a, b));
    peak = std::max(peak, scope.peak_bits());
  }
  report_peak(state, peak, n);
}

} // namespace

BENCHMARK(BM_Sort)->RangeMultiplier(4)->Range(1 << 14, 1 << 22)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK(BM_DenseRankBuild)->RangeMultiplier(4)->Range(1 << 14, 1 << 22)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK(BM_RankBuild)->RangeMultiplier(4)->Range(1 << 14, 1 << 22)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK(BM_RankQuery)->RangeMultiplier(16)->Range(1 << 14, 1 << 22);
BENCHMARK(BM_RootedIso)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK_MAIN();
