#include "sdn/errors.hpp"
#include "sdn/sort.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace sdn;
using oracle::cpp_int;

namespace {

/// Sorts with an index satellite and checks value order and stability
/// against std::stable_sort on cpp_int.
void expect_stable_sorted(const std::vector<cpp_int>& values, SdnSorter& sorter) {
  const SdnSequence s = oracle::make_sequence(values);
  PackedArray index(values.size(), bits_for(values.size()));
  for (std::uint64_t i = 0; i < values.size(); ++i) {
    index.set(i, i);
  }
  const SdnSequence sorted = sorter.sort(s, &index);

  std::vector<std::uint64_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });

  ASSERT_EQ(sorted.size_bits(), s.size_bits());
  ASSERT_EQ(sorted.count(), s.count());
  const auto got = oracle::decode_all(sorted);
  for (std::uint64_t i = 0; i < values.size(); ++i) {
    ASSERT_EQ(got[i], values[order[i]]) << "position " << i;
    ASSERT_EQ(index.get(i), order[i]) << "stability at " << i;
  }
}

} // namespace

TEST(Sort, SmallExample) {
  const auto s = SdnSequence::from_values(std::vector<std::uint64_t>{6, 9, 2, 2, 0});
  EXPECT_EQ(sort(s).values_u64(), (std::vector<std::uint64_t>{0, 2, 2, 6, 9}));
  EXPECT_EQ(sort(SdnSequence{}).count(), 0u);
}

TEST(Sort, RandomInstancesMatchStableSort) {
  oracle::Rng rng(20);
  for (unsigned cutoff : {0u, 16u}) {
    SdnSorter sorter(SortConfig{0, cutoff});
    for (int i = 0; i < 300; ++i) {
      const auto values = oracle::random_values(rng, oracle::uniform(rng, 0, 400), 512);
      expect_stable_sorted(values, sorter);
    }
  }
}

TEST(Sort, ExplicitTauValues) {
  oracle::Rng rng(21);
  for (unsigned tau : {2u, 3u, 8u, 17u, 32u}) {
    SdnSorter sorter(SortConfig{tau, 0});
    for (int i = 0; i < 40; ++i) {
      const auto values = oracle::random_values(rng, oracle::uniform(rng, 1, 300), 130);
      expect_stable_sorted(values, sorter);
    }
  }
}

TEST(Sort, ManyDuplicatesAndAllZero) {
  SdnSorter sorter(SortConfig{0, 0});
  expect_stable_sorted(std::vector<cpp_int>(1000, 0), sorter);
  std::vector<cpp_int> v;
  for (int i = 0; i < 3000; ++i) {
    v.push_back(cpp_int(i % 7) << (i % 3 == 0 ? 100 : 0));
  }
  expect_stable_sorted(v, sorter);
}

TEST(Sort, LargeSmallValueInput) {
  oracle::Rng rng(22);
  std::vector<cpp_int> v;
  for (int i = 0; i < 50000; ++i) {
    v.push_back(oracle::uniform(rng, 0, 1u << 14));
  }
  SdnSorter sorter;
  expect_stable_sorted(v, sorter);
}

TEST(Sort, ParametersFollowConfig) {
  const auto p = sort_parameters(1000, SortConfig{});
  EXPECT_EQ(p.tau, 10u);
  EXPECT_EQ(p.half_bits, 5u);
  EXPECT_EQ(p.small_exponent, 100u);
  EXPECT_EQ(sort_parameters(1000, SortConfig{4, 16}).tau, 10u);  // raised to bit_width(N)
  EXPECT_EQ(sort_parameters(1000, SortConfig{20, 16}).tau, 20u);
  EXPECT_THROW(sort_parameters(1000, SortConfig{1, 16}), ConfigError);
  EXPECT_THROW(sort_parameters(1000, SortConfig{33, 16}), ConfigError);
  EXPECT_THROW(sort_parameters(1000, SortConfig{0, kMaxInsertionCutoff + 1}), ConfigError);
}

TEST(Sort, SmallAndBigEntryPoints) {
  // N = 3 * 9 = 27 bits, tau = 5, q = 2^5.
  const auto small = SdnSequence::from_values(std::vector<std::uint64_t>{17, 3, 30});
  EXPECT_EQ(presort_small(small).values_u64(), (std::vector<std::uint64_t>{3, 17, 30}));
  const auto mixed = SdnSequence::from_values(std::vector<std::uint64_t>{1u << 20, 3});
  EXPECT_THROW(presort_small(mixed), PreconditionViolation);
  EXPECT_THROW(sort_big(mixed), PreconditionViolation);
  const auto big = SdnSequence::from_values(std::vector<std::uint64_t>{1u << 20, (1u << 20) + 5, 1u << 19});
  EXPECT_EQ(sort_big(big).values_u64(), (std::vector<std::uint64_t>{1u << 19, 1u << 20, (1u << 20) + 5}));
}

TEST(Sort, CompareCodewords) {
  const auto s = SdnSequence::from_values(std::vector<std::uint64_t>{5, 12, 5, 0});
  const auto cw = [&](std::uint64_t p) { return s.codeword_at(p); };
  EXPECT_LT(compare_codewords(s.bits(), cw(0), s.bits(), cw(7)), 0);
  EXPECT_EQ(compare_codewords(s.bits(), cw(0), s.bits(), cw(16)), 0);
  EXPECT_GT(compare_codewords(s.bits(), cw(0), s.bits(), cw(23)), 0);
}

TEST(Sort, SortRangeIntoOffset) {
  const auto s = SdnSequence::from_values(std::vector<std::uint64_t>{9, 1, 4, 1});
  BitSequence out(100);
  SdnSorter sorter;
  EXPECT_EQ(sorter.sort_range(s.bits(), 0, s.size_bits(), out, 10), 4u);
  const auto expected = SdnSequence::from_values(std::vector<std::uint64_t>{1, 1, 4, 9});
  EXPECT_TRUE(equal_bits(out, 10, expected.bits(), 0, expected.size_bits()));
}
