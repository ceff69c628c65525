#include <gtest/gtest.h>

#include "oracle.hpp"
#include "ternlcd/search.hpp"
#include "ternlcd/standins.hpp"

using namespace ternlcd;

namespace {

// Number of k-dimensional subspaces of GF(3)^n.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k) {
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= pow3(static_cast<unsigned>(n - i)) - 1;
    den *= pow3(static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

}  // namespace

TEST(Oracle, RrefSweepVisitsEverySubspaceOnce) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      if (k * (n - k) > 6) continue;
      std::uint64_t visited = 0;
      (void)oracle::best_lcd_full_sweep(n, k, &visited);
      EXPECT_EQ(visited, gaussian_binomial(n, k)) << n << "," << k;
    }
}

// The systematic sweep only sees codes with an information set in the
// first k coordinates; monomial invariance of the LCD property makes that
// enough. The oracle sweeps every subspace.
TEST(Exhaustive, SystematicSweepAgreesWithFullSweep) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      if (k * (n - k) > 6) continue;
      const SearchResult r = exhaustive_best_lcd(n, k);
      EXPECT_EQ(r.best_d, oracle::best_lcd_full_sweep(n, k)) << n << "," << k;
      ASSERT_TRUE(r.witness.has_value());
      const LinearCode w(*r.witness);
      EXPECT_TRUE(is_lcd(w));
      EXPECT_EQ(min_distance(w), r.best_d);
      EXPECT_TRUE(r.exhaustive);
    }
}

TEST(Exhaustive, SmallCellsOfTheBoundsTable) {
  EXPECT_EQ(exhaustive_best_lcd(4, 2).best_d, 2u);
  EXPECT_EQ(exhaustive_best_lcd(7, 2).best_d, 4u);
  EXPECT_EQ(exhaustive_best_lcd(5, 3).best_d, 2u);
  EXPECT_EQ(exhaustive_best_lcd(6, 3).best_d, 3u);
}

TEST(Exhaustive, ResultDoesNotDependOnThreadCount) {
  SearchBudget one, many;
  one.threads = 1;
  many.threads = 4;
  one.max_exponent = many.max_exponent = 14;
  for (const auto& [n, k] : {std::pair<std::size_t, std::size_t>{9, 2}, {7, 3}, {6, 4}}) {
    const SearchResult a = exhaustive_best_lcd(n, k, one);
    const SearchResult b = exhaustive_best_lcd(n, k, many);
    EXPECT_EQ(a, b) << n << "," << k;
  }
}

TEST(Exhaustive, BudgetAndArgumentErrors) {
  EXPECT_THROW((void)exhaustive_best_lcd(20, 10), BudgetExceeded);
  EXPECT_THROW((void)exhaustive_best_lcd(5, 0), std::invalid_argument);
  EXPECT_THROW((void)exhaustive_best_lcd(5, 6), std::invalid_argument);
}

TEST(Exists, NonexistenceOfDimensionTwoCodes) {
  EXPECT_FALSE(exists_lcd(4, 2, 3).exists);
  EXPECT_FALSE(exists_lcd(7, 2, 5).exists);
  const ExistsResult e = exists_lcd(7, 2, 4);
  ASSERT_TRUE(e.exists);
  EXPECT_TRUE(is_lcd(LinearCode(*e.witness)));
  EXPECT_GE(min_distance(LinearCode(*e.witness)), 4u);
}

TEST(Parity, AgreesWithSystematicSweep) {
  SearchBudget b;
  b.max_exponent = 14;
  for (std::size_t n = 3; n <= 10; ++n)
    for (std::size_t k = 1; k < n && k <= 4; ++k) {
      if (k * (n - k) > 14) continue;
      const std::size_t best = exhaustive_best_lcd(n, k, b).best_d;
      const ExistsResult yes = exists_lcd_parity(n, k, best);
      ASSERT_TRUE(yes.exists) << n << "," << k;
      const LinearCode w(*yes.witness);
      EXPECT_TRUE(is_lcd(w));
      EXPECT_GE(min_distance(w), best);
      EXPECT_FALSE(exists_lcd_parity(n, k, best + 1).exists) << n << "," << k;
    }
}

TEST(Parity, KnownCells) {
  EXPECT_TRUE(exists_lcd_parity(11, 4, 6).exists);
  EXPECT_TRUE(exists_lcd_parity(12, 5, 5).exists);
  EXPECT_FALSE(exists_lcd_parity(8, 3, 5).exists);
  EXPECT_THROW((void)exists_lcd_parity(30, 4, 5), BudgetExceeded);
}

TEST(Randomized, SameSeedSameWitness) {
  SearchBudget b;
  b.max_iters = 20000;
  const SearchResult a = randomized_search(12, 4, 6, b);
  const SearchResult c = randomized_search(12, 4, 6, b);
  EXPECT_EQ(a, c);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_TRUE(is_lcd(LinearCode(*a.witness)));
  EXPECT_EQ(min_distance(LinearCode(*a.witness)), a.best_d);
}

// Frozen: the default seed reproduces the stored [13,6,6] witness.
TEST(Randomized, DefaultSeedReproducesStoredWitness) {
  const SearchResult r = randomized_search(13, 6, 6, SearchBudget{}, 5);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->to_strings(), standin("C_13_6_6").rows);
  EXPECT_EQ(r.best_d, 6u);
}
