#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "ternlcd/constructions.hpp"
#include "ternlcd/transforms.hpp"

using namespace ternlcd;

namespace {

LinearCode random_code(std::size_t k, std::size_t n, std::mt19937_64& rng) {
  return LinearCode(oracle::to_trits(oracle::random_full_rank(k, n, rng)));
}

CoordSet random_coords(std::size_t n, std::size_t size, std::mt19937_64& rng) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  return CoordSet(all);
}

std::set<std::vector<int>> word_set(const LinearCode& c) {
  const auto words = oracle::codewords(oracle::from_trits(c.generator()));
  return {words.begin(), words.end()};
}

// Codewords of c restricted to the complement of s, optionally only those
// vanishing on s.
std::set<std::vector<int>> restricted_words(const LinearCode& c, const CoordSet& s, bool zero_on_s) {
  std::set<std::vector<int>> out;
  for (const auto& w : oracle::codewords(oracle::from_trits(c.generator()))) {
    bool zero = true;
    std::vector<int> rest;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (s.contains(i + 1))
        zero = zero && w[i] == 0;
      else
        rest.push_back(w[i]);
    }
    if (!zero_on_s || zero) out.insert(rest);
  }
  return out;
}

}  // namespace

TEST(CoordSet, ParsesOneBasedLists) {
  EXPECT_EQ(CoordSet::parse("7,1,2").coords(), (std::vector<std::size_t>{1, 2, 7}));
  EXPECT_EQ(CoordSet::parse("3").to_string(), "3");
  EXPECT_THROW(CoordSet::parse("0,1"), std::invalid_argument);
  EXPECT_THROW(CoordSet::parse("1,1"), std::invalid_argument);
  EXPECT_THROW(CoordSet::parse("1,,2"), std::invalid_argument);
  EXPECT_THROW(CoordSet::parse("1,x"), std::invalid_argument);
}

TEST(Puncture, DeletesCoordinatesFromEveryCodeword) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 6 + rng() % 8, k = 1 + rng() % 4;
    const LinearCode c = random_code(k, n, rng);
    const std::size_t d = min_distance(c);
    const std::size_t t = 1 + rng() % 3;
    if (t >= d) continue;
    const CoordSet s = random_coords(n, t, rng);
    const LinearCode p = puncture(c, s);
    EXPECT_EQ(p.n(), n - t);
    EXPECT_EQ(p.k(), k);
    EXPECT_GE(min_distance(p), d - t);
    EXPECT_LE(min_distance(p), d);
    EXPECT_EQ(word_set(p), restricted_words(c, s, false));
  }
}

TEST(Shorten, KeepsCodewordsVanishingOnTheSet) {
  std::mt19937_64 rng(59);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 60; ++trial) {
    const std::size_t n = 6 + rng() % 8, k = 2 + rng() % 4;
    const LinearCode c = random_code(k, n, rng);
    const std::size_t t = 1 + rng() % (k - 1);
    const CoordSet s = random_coords(n, t, rng);
    const TritMatrix cols = c.generator().select_columns(s.zero_based());
    if (rank(cols) < t) {
      EXPECT_THROW((void)shorten(c, s), TransformError);
      continue;
    }
    const LinearCode r = shorten(c, s);
    EXPECT_EQ(r.n(), n - t);
    EXPECT_EQ(r.k(), k - t);
    EXPECT_GE(min_distance(r), min_distance(c));
    EXPECT_EQ(word_set(r), restricted_words(c, s, true));
    ++done;
  }
  EXPECT_GE(done, 30);
}

TEST(Shorten, RejectsBadSets) {
  const LinearCode c(TritMatrix::from_strings({"1012", "0111"}));
  EXPECT_THROW((void)shorten(c, CoordSet{1, 2}), std::invalid_argument);
  EXPECT_THROW((void)shorten(c, CoordSet{5}), std::invalid_argument);
  EXPECT_THROW((void)puncture(c, CoordSet{}), std::invalid_argument);
}

// S_k S_k^T = 0 and 2 * 2 = 1, so appending simplex blocks and scaling
// columns by 2 leave G G^T unchanged.
TEST(Juxtapose, SimplexBlocksAndScalingKeepTheGramMatrix) {
  std::mt19937_64 rng(61);
  for (std::size_t k = 2; k <= 4; ++k) {
    const TritMatrix s = simplex(k).matrix;
    for (int trial = 0; trial < 20; ++trial) {
      const LinearCode c = random_code(k, k + 2 + rng() % 6, rng);
      const TritMatrix g = gram(c.generator());
      for (std::size_t copies = 1; copies <= 2; ++copies) {
        const LinearCode j = juxtapose(c, s, copies);
        EXPECT_EQ(j.n(), c.n() + copies * s.cols());
        EXPECT_EQ(gram(j.generator()), g);
        EXPECT_EQ(is_lcd(j), is_lcd(c));
      }
      const CoordSet cols = random_coords(c.n(), 1 + rng() % c.n(), rng);
      const LinearCode scaled = scale_columns(c, cols, Trit(2));
      EXPECT_EQ(gram(scaled.generator()), g);
      EXPECT_EQ(weight_enumerator(scaled), weight_enumerator(c));
    }
  }
  EXPECT_THROW((void)juxtapose(random_code(2, 5, rng), simplex(3).matrix, 1), std::invalid_argument);
}

TEST(Juxtapose, SimplexBlockAddsItsWeightToEveryNonzeroWord) {
  std::mt19937_64 rng(67);
  const LinearCode c = random_code(3, 9, rng);
  const LinearCode j = juxtapose(c, simplex(3).matrix, 1);
  EXPECT_EQ(min_distance(j), min_distance(c) + 9);
}

TEST(Permute, PreservesEnumeratorAndLcd) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const LinearCode c = random_code(3, 8, rng);
    std::vector<std::size_t> order = {1, 2, 3, 4, 5, 6, 7, 8};
    std::shuffle(order.begin(), order.end(), rng);
    const LinearCode p = permute_columns(c, order);
    EXPECT_EQ(weight_enumerator(p), weight_enumerator(c));
    EXPECT_EQ(is_lcd(p), is_lcd(c));
  }
  EXPECT_THROW((void)permute_columns(random_code(2, 3, rng), {1, 1, 2}), std::invalid_argument);
}
