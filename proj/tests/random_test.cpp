#include <gtest/gtest.h>

#include <set>

#include "support/helpers.hpp"

using namespace bmpp;

TEST(SplitMix, KnownStreamAndBounds) {
  // reference values of SplitMix64 seeded with 0
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  SplitMix64 b(5);
  for (int k = 0; k < 1000; ++k) EXPECT_LT(b.below(7), 7u);
  EXPECT_THROW(b.below(0), BadSpec);
}

TEST(DeriveSeed, DistinguishesCells) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 4; ++s)
    for (std::uint64_t n = 0; n < 4; ++n)
      for (std::uint64_t r = 0; r < 4; ++r) seen.insert(derive_seed({s, n, r}));
  EXPECT_EQ(seen.size(), 64u);
  EXPECT_EQ(derive_seed({1, 2, 3}), derive_seed({1, 2, 3}));
}

TEST(SampleDistinct, FullUniverseIsAPermutation) {
  SplitMix64 rng(9);
  auto all = sample_distinct(50, 50, rng);
  std::sort(all.begin(), all.end());
  for (std::uint64_t k = 0; k < 50; ++k) EXPECT_EQ(all[k], k);
  EXPECT_THROW(sample_distinct(3, 4, rng), BadSpec);
  EXPECT_TRUE(sample_distinct(3, 0, rng).empty());
}

TEST(RandomPoints, PrimeFieldDeterministicAndDistinct) {
  PrimeField f(23);
  auto a = random_points(f, 500, 1), b = random_points(f, 500, 1), c = random_points(f, 500, 2);
  ASSERT_EQ(a.size(), 500u);
  bool same = true, differs = false;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t k = 0; k < a.size(); ++k) {
    same = same && a[k].x == b[k].x && a[k].y == b[k].y;
    differs = differs || !(a[k].x == c[k].x && a[k].y == c[k].y);
    EXPECT_LT(a[k].x.value, 23u);
    EXPECT_LT(a[k].y.value, 23u);
    seen.insert({a[k].x.value, a[k].y.value});
  }
  EXPECT_TRUE(same);
  EXPECT_TRUE(differs);
  EXPECT_EQ(seen.size(), 500u);
  EXPECT_EQ(random_points(f, 529, 3).size(), 529u);
  EXPECT_THROW(random_points(f, 530, 3), BadSpec);
}

TEST(RandomPoints, LargePrimeDoesNotAllocateTheUniverse) {
  PrimeField f(2147483647);
  auto a = random_points(f, 1000, 4);
  EXPECT_EQ(a.size(), 1000u);
}

TEST(RandomPoints, RationalDeterministicAndBounded) {
  RationalField q;
  auto a = random_points(q, 200, 7), b = random_points(q, 200, 7);
  ASSERT_EQ(a.size(), 200u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].x, b[k].x);
    EXPECT_EQ(a[k].y, b[k].y);
    for (const auto& v : {a[k].x, a[k].y}) {
      EXPECT_LE(abs(v.get_num()), 100);
      EXPECT_LE(v.get_den(), 100);
    }
  }
}
