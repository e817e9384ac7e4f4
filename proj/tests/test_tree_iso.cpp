#include "sdn/errors.hpp"
#include "sdn/tree_iso.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace sdn;

namespace {

Tree rooted(const std::vector<std::uint64_t>& parent) {
  return oracle::to_tree(oracle::ParentTree{parent, {}});
}

Tree path(std::uint64_t n) {
  std::vector<std::uint64_t> p(n);
  for (std::uint64_t i = 1; i < n; ++i) {
    p[i] = i - 1;
  }
  return rooted(p);
}

} // namespace

TEST(RootedIso, SmallCases) {
  EXPECT_TRUE(rooted_isomorphic(rooted({0}), rooted({0})));
  Tree end_rooted = path(3);
  Tree mid_rooted = path(3);
  mid_rooted.set_root(1);
  EXPECT_FALSE(rooted_isomorphic(end_rooted, mid_rooted));
  EXPECT_TRUE(unrooted_isomorphic(end_rooted, mid_rooted));
  EXPECT_FALSE(rooted_isomorphic(path(3), path(4)));
  const auto a = BalancedParens::from_string("((())())");
  const auto b = BalancedParens::from_string("(()(()))");
  const auto c = BalancedParens::from_string("(()()())");
  EXPECT_TRUE(rooted_isomorphic(a, b));
  EXPECT_FALSE(rooted_isomorphic(a, c));
}

TEST(RootedIso, NeedsRoots) {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> e{{0, 1}};
  const Tree unrooted(2, e);
  EXPECT_THROW(rooted_isomorphic(unrooted, unrooted), PreconditionViolation);
}

TEST(RootedIso, ShuffledCopiesAndMutantsAgreeWithAhu) {
  oracle::Rng rng(50);
  for (int round = 0; round < 300; ++round) {
    const auto n = oracle::uniform(rng, 1, 400);
    const Tree t = oracle::to_tree(oracle::random_tree(rng, n, oracle::random_shape(rng)));
    const Tree copy = oracle::relabeled(rng, t);
    for (bool early : {true, false}) {
      IsoOptions opts;
      opts.early_exit = early;
      ASSERT_TRUE(rooted_isomorphic(t, copy, opts));
      if (n >= 3) {
        const Tree mutant = oracle::move_one_edge(rng, t);
        ASSERT_EQ(rooted_isomorphic(t, mutant, opts), oracle::ahu_rooted(t, mutant, false)) << "n=" << n;
        ASSERT_EQ(rooted_isomorphic(mutant, t, opts), rooted_isomorphic(t, mutant, opts));
      }
    }
  }
}

TEST(RootedIso, StatsAreLinear) {
  oracle::Rng rng(51);
  for (std::uint64_t n : {1000u, 8000u}) {
    const Tree t = oracle::to_tree(oracle::random_tree(rng, n, oracle::Shape::Recursive));
    IsoStats stats;
    ASSERT_TRUE(rooted_isomorphic(t, oracle::relabeled(rng, t), {}, &stats));
    EXPECT_LE(stats.sorted_codewords, 2 * n);
    EXPECT_LE(stats.level_bits_max, 64 * n);
    EXPECT_FALSE(stats.exited_early);
  }
}

TEST(RootedIso, DeepTrees) {
  oracle::Rng rng(52);
  const Tree p = path(5000);
  EXPECT_TRUE(rooted_isomorphic(p, oracle::relabeled(rng, p)));
  const Tree deep = oracle::to_tree(oracle::random_tree(rng, 5000, oracle::Shape::Deep));
  EXPECT_TRUE(rooted_isomorphic(deep, oracle::relabeled(rng, deep)));
}

TEST(UnrootedIso, PathVersusStar) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> p{{0, 1}, {1, 2}, {2, 3}};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> s{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_FALSE(unrooted_isomorphic(Tree(4, p), Tree(4, s)));
}

TEST(UnrootedIso, EqualDegreeSequencesCanDiffer) {
  // Both trees have degree sequence 3,3,2,1,1,1,1,... on 8 nodes; in the
  // first the two degree-3 nodes are adjacent, in the second they are not.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> a{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {3, 6}, {6, 7}};
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> b{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}, {6, 7}};
  const Tree ta(8, a), tb(8, b);
  EXPECT_EQ(unrooted_isomorphic(ta, tb), oracle::ahu_unrooted(ta, tb, false));
  EXPECT_FALSE(unrooted_isomorphic(ta, tb));
}

TEST(UnrootedIso, RelabeledAndMutated) {
  oracle::Rng rng(53);
  for (int round = 0; round < 300; ++round) {
    const auto n = oracle::uniform(rng, 1, 300);
    const Tree t = oracle::to_tree(oracle::random_tree(rng, n, oracle::random_shape(rng)));
    ASSERT_TRUE(unrooted_isomorphic(t, oracle::relabeled(rng, t)));
    if (n >= 3) {
      const Tree m = oracle::move_one_edge(rng, t);
      ASSERT_EQ(unrooted_isomorphic(t, m), oracle::ahu_unrooted(t, m, false));
    }
  }
}

TEST(UnrootedIso, ExhaustiveSmallFreeTrees) {
  for (std::uint64_t n = 1; n <= 7; ++n) {
    const auto trees = oracle::all_free_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = 0; j < trees.size(); ++j) {
        ASSERT_EQ(unrooted_isomorphic(trees[i], trees[j]), i == j) << "n=" << n;
      }
    }
  }
  EXPECT_EQ(oracle::all_free_trees(7).size(), 11u);
}

TEST(ColoredIso, RecoloringFlipsVerdict) {
  oracle::Rng rng(54);
  IsoOptions colored;
  colored.colored = true;
  for (int round = 0; round < 200; ++round) {
    auto pt = oracle::random_tree(rng, oracle::uniform(rng, 2, 200), oracle::random_shape(rng));
    oracle::random_colors(rng, pt, oracle::uniform(rng, 1, 5));
    const Tree t = oracle::to_tree(pt);
    const Tree copy = oracle::relabeled(rng, t);
    ASSERT_TRUE(rooted_isomorphic(t, copy, colored));
    ASSERT_TRUE(unrooted_isomorphic(t, copy, colored));
    auto recolored = pt;
    const auto u = oracle::uniform(rng, 0, pt.size() - 1);
    // A color absent from the tree cannot be matched by any isomorphism.
    recolored.colors[u] = pt.size() - 1;
    const bool absent = std::count(pt.colors.begin(), pt.colors.end(), pt.size() - 1) == 0;
    const Tree t2 = oracle::to_tree(recolored);
    if (absent) {
      ASSERT_FALSE(rooted_isomorphic(t, t2, colored));
      ASSERT_FALSE(unrooted_isomorphic(t, t2, colored));
    }
    ASSERT_EQ(rooted_isomorphic(t, t2, colored), oracle::ahu_rooted(t, t2, true));
    ASSERT_EQ(unrooted_isomorphic(t, t2, colored), oracle::ahu_unrooted(t, t2, true));
  }
}

TEST(ColoredIso, UniformColorsEqualUncolored) {
  oracle::Rng rng(55);
  IsoOptions colored;
  colored.colored = true;
  for (int round = 0; round < 100; ++round) {
    auto pa = oracle::random_tree(rng, oracle::uniform(rng, 3, 100), oracle::random_shape(rng));
    oracle::random_colors(rng, pa, 1);
    const Tree a = oracle::to_tree(pa);
    const Tree b = oracle::move_one_edge(rng, a);
    ASSERT_EQ(unrooted_isomorphic(a, b, colored), unrooted_isomorphic(a, b));
    ASSERT_EQ(rooted_isomorphic(a, b, colored), rooted_isomorphic(a, b));
  }
}

TEST(ColoredIso, RequiresValidColors) {
  const auto bp = BalancedParens::from_string("(())");
  IsoOptions colored;
  colored.colored = true;
  const std::vector<std::uint64_t> ok{0, 1};
  const std::vector<std::uint64_t> bad{0, 2};
  EXPECT_NO_THROW(rooted_isomorphic(bp, ok, bp, ok, colored));
  EXPECT_THROW(rooted_isomorphic(bp, ok, bp, bad, colored), InvalidInput);
  EXPECT_THROW(rooted_isomorphic(bp, {}, bp, ok, colored), InvalidInput);
  EXPECT_THROW(unrooted_isomorphic(path(2), path(2), colored), InvalidInput);
}
