#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "ternlcd/code.hpp"

using namespace ternlcd;

namespace {

LinearCode random_code(std::size_t k, std::size_t n, std::mt19937_64& rng) {
  return LinearCode(oracle::to_trits(oracle::random_full_rank(k, n, rng)));
}

}  // namespace

TEST(LinearCode, RejectsDependentRows) {
  EXPECT_THROW(LinearCode(TritMatrix::from_strings({"110", "220"})), std::invalid_argument);
  EXPECT_THROW(LinearCode{TritMatrix{}}, std::invalid_argument);
}

TEST(LinearCode, EnumeratorAndDistanceMatchOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 14, k = 1 + rng() % std::min<std::size_t>(n, 7);
    const LinearCode c = random_code(k, n, rng);
    const auto g = oracle::from_trits(c.generator());
    EXPECT_EQ(weight_enumerator(c).counts(), oracle::enumerator(g));
    EXPECT_EQ(min_distance(c), oracle::min_distance(g));
  }
}

TEST(LinearCode, DistanceThroughDualMatchesDirect) {
  std::mt19937_64 rng(29);
  Budget small;
  small.max_codewords = pow3(6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 12 + rng() % 4, k = n - 3 - rng() % 3;
    const LinearCode c = random_code(k, n, rng);
    EXPECT_EQ(min_distance(c, small), min_distance(c));
  }
  EXPECT_THROW((void)min_distance(random_code(8, 16, rng), small), BudgetExceeded);
}

TEST(LinearCode, MinDistanceAtLeastAgreesWithDistance) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const LinearCode c = random_code(1 + rng() % 5, 6 + rng() % 8, rng);
    const std::size_t d = min_distance(c);
    EXPECT_TRUE(min_distance_at_least(c, d));
    EXPECT_FALSE(min_distance_at_least(c, d + 1));
  }
}

TEST(LinearCode, MacWilliamsMatchesDirectDualEnumeration) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 12, k = 1 + rng() % (n - 1);
    const LinearCode c = random_code(k, n, rng);
    const WeightEnumerator w = weight_enumerator(c);
    EXPECT_EQ(macwilliams_dual_enumerator(w, n, k), weight_enumerator(dual(c)));
    EXPECT_TRUE(w.is_consistent(k));
  }
}

// LCD iff the Gram matrix is nonsingular iff the hull is trivial, with the
// hull computed from its definition.
TEST(LinearCode, GramRankCharacterizesHull) {
  std::mt19937_64 rng(41);
  int lcd = 0, not_lcd = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 9, k = 1 + rng() % std::min<std::size_t>(n, 5);
    const LinearCode c = random_code(k, n, rng);
    const GramReport g = gram_report(c);
    const std::size_t hull = oracle::hull_dim(oracle::from_trits(c.generator()));
    EXPECT_EQ(g.hull_dim, hull);
    EXPECT_EQ(g.is_lcd, hull == 0);
    (g.is_lcd ? lcd : not_lcd)++;
  }
  EXPECT_GT(lcd, 20);
  EXPECT_GT(not_lcd, 20);
}

// A code is LCD exactly when its dual is, and then C + C^perp is the whole
// space: stacking both generators gives rank n.
TEST(LinearCode, DualOfLcdIsLcdAndDirectSumIsFull) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 10, k = 1 + rng() % (n - 1);
    const LinearCode c = random_code(k, n, rng);
    const LinearCode d = dual(c);
    EXPECT_EQ(d.k(), n - k);
    EXPECT_TRUE(mat_mul(c.generator(), d.generator().transpose()).is_zero());
    EXPECT_EQ(is_lcd(c), is_lcd(d));
    EXPECT_EQ(rank(vstack(c.generator(), d.generator())) == n, is_lcd(c));
  }
}

TEST(WeightEnumerator, TextAndConsistency) {
  const auto w = WeightEnumerator::from_terms(4, {{3, 8}});
  EXPECT_EQ(w.to_string(), "1 + 8z^3");
  EXPECT_EQ(w.min_distance(), 3u);
  EXPECT_TRUE(w.is_consistent(2));
  EXPECT_FALSE(WeightEnumerator::from_terms(4, {{3, 7}}).is_consistent(2));
  EXPECT_THROW(WeightEnumerator::from_terms(2, {{3, 1}}), std::invalid_argument);
}

TEST(WeightEnumerator, LargeDualTransformIsExact) {
  // The [13,3] simplex code from its columns, one per projective point:
  // every nonzero word has weight 9 and the dual has 3^10 words.
  std::vector<std::vector<int>> cols;
  for (int x = 1; x < 27; ++x) {
    const std::vector<int> v = {x % 3, x / 3 % 3, x / 9};
    const int lead = v[0] ? v[0] : v[1] ? v[1] : v[2];
    if (lead == 1) cols.push_back(v);
  }
  oracle::Mat g(3, std::vector<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < 3; ++r) g[r][c] = cols[c][r];
  const LinearCode s(oracle::to_trits(g));
  const WeightEnumerator w = weight_enumerator(s);
  EXPECT_EQ(w.to_string(), "1 + 26z^9");
  const WeightEnumerator d = macwilliams_dual_enumerator(w, 13, 3);
  EXPECT_EQ(d.total(), pow3(10));
  EXPECT_EQ(d.min_distance(), 3u);
  EXPECT_EQ(d, weight_enumerator(dual(s)));
}

TEST(Enumeration, ThreadCountDoesNotChangeResults) {
  std::mt19937_64 rng(47);
  const LinearCode c = random_code(9, 20, rng);
  Budget one, many;
  one.threads = 1;
  many.threads = 4;
  EXPECT_EQ(weight_enumerator(c, one), weight_enumerator(c, many));
}
