#pragma once

// Ground truth for small parameters: an exhaustive sweep over systematic
// generators [I_k | A], an early-exit existence test, and a seeded
// hill-climb for parameters out of exhaustive reach.
//
// The sweep is complete for LCD codes: every [n,k] code is a column
// permutation of a systematic one, and permuting (or negating) columns
// leaves rank(G G^T) unchanged because 2^2 = 1 in GF(3).

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ternlcd/code.hpp"
#include "ternlcd/parallel.hpp"

namespace ternlcd {

inline constexpr std::uint64_t kDefaultSeed = 20190817;

struct SearchBudget {
  unsigned max_exponent = 16;       // exhaustive only when k(n-k) <= this
  std::uint64_t max_iters = 400000; // randomized moves, across restarts
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t plateau = 200;      // moves without improvement before a restart
  unsigned threads = default_threads();
};

struct SearchResult {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t best_d = 0;
  std::optional<TritMatrix> witness;
  bool exhaustive = false;
  std::uint64_t evaluated = 0;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

struct ExistsResult {
  bool exists = false;
  std::optional<TritMatrix> witness;
};

struct SearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr std::size_t kSearchMaxLength = 40;

// A systematic generator [I_k | A] held as one word per row and plane.
struct SystematicCandidate {
  std::size_t n = 0;
  std::size_t k = 0;
  std::array<std::uint64_t, 64> ones{};
  std::array<std::uint64_t, 64> twos{};

  SystematicCandidate(std::size_t n_, std::size_t k_) : n(n_), k(k_) {
    if (n > kSearchMaxLength) throw std::invalid_argument("search supports n <= 40");
    for (std::size_t i = 0; i < k; ++i) ones[i] = std::uint64_t{1} << i;
  }

  [[nodiscard]] std::size_t redundancy() const { return n - k; }

  // Entry (i, j) of A is digit i*(n-k)+j of `index` read with the last
  // entry least significant, so increasing indices walk A in row-major
  // lexicographic order.
  void load(std::uint64_t index) {
    const std::size_t m = redundancy();
    for (std::size_t i = 0; i < k; ++i) {
      ones[i] = std::uint64_t{1} << i;
      twos[i] = 0;
    }
    for (std::size_t p = k * m; p-- > 0;) {
      const auto d = index % 3;
      index /= 3;
      const std::uint64_t bit = std::uint64_t{1} << (k + p % m);
      if (d == 1) ones[p / m] |= bit;
      if (d == 2) twos[p / m] |= bit;
    }
  }

  // Moves to index+1: bumps the last entry of A and carries leftwards.
  void advance() {
    const std::size_t m = redundancy();
    for (std::size_t p = k * m; p-- > 0;) {
      const std::size_t i = p / m;
      const std::uint64_t bit = std::uint64_t{1} << (k + p % m);
      if (ones[i] & bit) {
        ones[i] &= ~bit;
        twos[i] |= bit;
        return;
      }
      if (twos[i] & bit) {
        twos[i] &= ~bit;
        continue;
      }
      ones[i] |= bit;
      return;
    }
  }

  [[nodiscard]] int entry(std::size_t i, std::size_t j) const {
    const std::uint64_t bit = std::uint64_t{1} << (k + j);
    return (ones[i] & bit) ? 1 : (twos[i] & bit) ? 2 : 0;
  }

  void set_entry(std::size_t i, std::size_t j, int v) {
    const std::uint64_t bit = std::uint64_t{1} << (k + j);
    ones[i] &= ~bit;
    twos[i] &= ~bit;
    if (v == 1) ones[i] |= bit;
    if (v == 2) twos[i] |= bit;
  }

  [[nodiscard]] bool is_lcd() const {
    std::array<std::uint64_t, 64> g1{}, g2{};
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        const int v = dot_words(ones[i], twos[i], ones[j], twos[j]) % 3;
        if (v == 1) {
          g1[i] |= std::uint64_t{1} << j;
          g1[j] |= std::uint64_t{1} << i;
        } else if (v == 2) {
          g2[i] |= std::uint64_t{1} << j;
          g2[j] |= std::uint64_t{1} << i;
        }
      }
    return small_rank(g1.data(), g2.data(), k, k) == k;
  }

  // Minimum distance if it exceeds `floor`, otherwise 0. The primal walk
  // stops at the first codeword of weight <= floor; when the dual is
  // smaller it is enumerated instead and transformed.
  [[nodiscard]] std::size_t distance_above(std::size_t floor) const {
    if (k > redundancy()) {
      const auto dual_counts = dual_rows().enumerate();
      const auto a = macwilliams_small(dual_counts.data(), n, redundancy());
      for (std::size_t w = 1; w <= n; ++w)
        if (a[w]) return w > floor ? w : 0;
      return 0;
    }
    std::size_t best = n;
    bool first = true;
    const bool complete = gray_walk(ones.data(), twos.data(), k, 1, 0, pow3(static_cast<unsigned>(k)),
                                    [&](std::size_t w) {
                                      if (first) {
                                        first = false;
                                        return true;
                                      }
                                      if (w <= floor) return false;
                                      best = std::min(best, w);
                                      return true;
                                    });
    return complete ? best : 0;
  }

  // First row (from the top) whose weight is at most `floor`, or k.
  [[nodiscard]] std::size_t first_light_row(std::size_t floor) const {
    for (std::size_t i = 0; i < k; ++i)
      if (static_cast<std::size_t>(std::popcount(ones[i] | twos[i])) <= floor) return i;
    return k;
  }

  // Generator [-A^T | I_{n-k}] of the dual, with the identity block last.
  [[nodiscard]] SystematicCandidate dual_rows() const {
    const std::size_t m = redundancy();
    SystematicCandidate d(n, m);
    for (std::size_t r = 0; r < m; ++r) {
      d.ones[r] = 0;
      d.twos[r] = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const int v = entry(i, r);
        if (v == 1) d.twos[r] |= std::uint64_t{1} << i;
        if (v == 2) d.ones[r] |= std::uint64_t{1} << i;
      }
      d.ones[r] |= std::uint64_t{1} << (k + r);
    }
    return d;
  }

  [[nodiscard]] std::vector<std::uint64_t> enumerate() const {
    std::vector<std::uint64_t> counts(n + 1, 0);
    gray_walk(ones.data(), twos.data(), k, 1, 0, pow3(static_cast<unsigned>(k)), [&](std::size_t w) {
      ++counts[w];
      return true;
    });
    return counts;
  }

  [[nodiscard]] TritMatrix to_matrix() const {
    std::vector<TritVector> rows;
    for (std::size_t i = 0; i < k; ++i) {
      TritVector v(n);
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (ones[i] & bit) v.set(c, Trit(1));
        if (twos[i] & bit) v.set(c, Trit(2));
      }
      rows.push_back(std::move(v));
    }
    return TritMatrix(std::move(rows), n);
  }
};

inline void check_exhaustive(std::size_t n, std::size_t k, const SearchBudget& budget) {
  if (k == 0 || k > n) throw std::invalid_argument("search needs 1 <= k <= n");
  if (k * (n - k) > budget.max_exponent)
    throw BudgetExceeded("too large: exhaustive search over 3^" + std::to_string(k * (n - k)) +
                         " candidates exceeds the budget of 3^" + std::to_string(budget.max_exponent));
}

// Soundness gate: every witness handed out is re-checked by the code layer.
inline void reverify(const TritMatrix& g, std::size_t n, std::size_t k, std::size_t d) {
  const LinearCode c(g);
  if (c.n() != n || c.k() != k || !gram_report(c).is_lcd || min_distance(c) != d)
    throw std::logic_error("search witness failed re-verification for [" + std::to_string(n) + "," +
                           std::to_string(k) + "," + std::to_string(d) + "]");
}

// Visits candidates in [begin, end) in counter order. While `floor` is
// positive, any candidate with a row of weight <= floor is skipped together
// with every later candidate sharing that row and the rows above it.
template <class Floor, class Visit>
void sweep_candidates(std::size_t n, std::size_t k, std::uint64_t begin, std::uint64_t end, Floor&& floor,
                      Visit&& visit) {
  SystematicCandidate cand(n, k);
  const std::size_t m = n - k;
  std::uint64_t idx = begin;
  if (idx < end) cand.load(idx);
  while (idx < end) {
    const std::size_t f = floor();
    if (f) {
      const std::size_t light = cand.first_light_row(f);
      if (light < k) {
        const std::uint64_t block = pow3(static_cast<unsigned>(m * (k - 1 - light)));
        idx = (idx / block + 1) * block;
        if (idx < end) cand.load(idx);
        continue;
      }
    }
    if (!visit(cand, idx)) return;
    if (++idx < end) cand.advance();
  }
}

}  // namespace detail

// Best minimum distance over all systematic LCD [n,k] codes. The kept
// witness is the first candidate (in counter order) that reaches the final
// maximum, whatever the thread count.
inline SearchResult exhaustive_best_lcd(std::size_t n, std::size_t k, const SearchBudget& budget = {}) {
  detail::check_exhaustive(n, k, budget);
  const std::uint64_t total = pow3(static_cast<unsigned>(k * (n - k)));
  struct Local {
    std::size_t best = 0;
    std::uint64_t index = 0;
  };
  const unsigned parts = detail::kEnumerationChunks;
  std::vector<Local> local(parts);
  for_each_chunk(total, parts, budget.threads, [&](unsigned part, std::uint64_t begin, std::uint64_t end) {
    Local& out = local[part];
    detail::sweep_candidates(
        n, k, begin, end, [&] { return out.best; },
        [&](const detail::SystematicCandidate& cand, std::uint64_t idx) {
          if (!cand.is_lcd()) return true;
          const std::size_t d = cand.distance_above(out.best);
          if (d > out.best) {
            out.best = d;
            out.index = idx;
          }
          return true;
        });
  });
  Local merged;
  for (const auto& l : local)
    if (l.best > merged.best) merged = l;

  SearchResult r{n, k, merged.best, std::nullopt, true, total};
  if (merged.best) {
    detail::SystematicCandidate cand(n, k);
    cand.load(merged.index);
    r.witness = cand.to_matrix();
    detail::reverify(*r.witness, n, k, r.best_d);
  }
  return r;
}

// Early-exit variant: the first systematic LCD [n,k] code with distance >= d.
inline ExistsResult exists_lcd(std::size_t n, std::size_t k, std::size_t d, const SearchBudget& budget = {}) {
  detail::check_exhaustive(n, k, budget);
  const std::uint64_t total = pow3(static_cast<unsigned>(k * (n - k)));
  const std::size_t floor = d ? d - 1 : 0;
  const unsigned parts = detail::kEnumerationChunks;
  std::vector<std::optional<std::uint64_t>> found(parts);
  for_each_chunk(total, parts, budget.threads, [&](unsigned part, std::uint64_t begin, std::uint64_t end) {
    detail::sweep_candidates(
        n, k, begin, end, [&] { return floor; },
        [&](const detail::SystematicCandidate& cand, std::uint64_t idx) {
          if (!cand.is_lcd() || cand.distance_above(floor) <= floor) return true;
          found[part] = idx;
          return false;
        });
  });
  for (const auto& f : found) {
    if (!f) continue;
    detail::SystematicCandidate cand(n, k);
    cand.load(*f);
    ExistsResult r{true, cand.to_matrix()};
    const LinearCode c(*r.witness);
    if (!gram_report(c).is_lcd || min_distance(c) < d) throw std::logic_error("exists_lcd witness failed re-verification");
    return r;
  }
  return {};
}

inline constexpr std::size_t kParityMaxRedundancy = 10;

// Existence of an LCD [n,k,>=d] code, decided over parity-check matrices
// [A | I_r], r = n - k, up to monomial equivalence. A codeword with message
// support s has weight s + wt(combination of s columns of A), so d >= t
// holds iff every combination of s columns weighs at least t - s. Scaling
// and permuting coordinates keep both d and the LCD property, so the first
// column of A can be taken as 1..10..0 and the others as an increasing
// sequence of columns with leading entry 1, strictly increasing once d >= 3
// rules out repeated columns. Practical for r <= 10 and k up to about 5 or 6.
inline ExistsResult exists_lcd_parity(std::size_t n, std::size_t k, std::size_t d) {
  if (k == 0 || k >= n) throw std::invalid_argument("exists_lcd_parity needs 1 <= k < n");
  const std::size_t r = n - k;
  if (r > kParityMaxRedundancy) throw BudgetExceeded("exists_lcd_parity: n - k must be at most 10");
  if (k > 8) throw BudgetExceeded("exists_lcd_parity: k must be at most 8");
  if (d <= 1) {
    std::vector<std::string> rows(k, std::string(n, '0'));
    for (std::size_t i = 0; i < k; ++i) rows[i][i] = '1';
    return {true, TritMatrix::from_strings(rows)};
  }
  struct Col {
    std::uint32_t ones, twos;
  };
  const auto weight = [](Col c) { return static_cast<std::size_t>(std::popcount(c.ones | c.twos)); };
  const auto negate = [](Col c) { return Col{c.twos, c.ones}; };
  const auto add = [](Col a, Col b) {
    std::uint64_t o = 0, t = 0;
    detail::add_words(a.ones, a.twos, b.ones, b.twos, o, t);
    return Col{static_cast<std::uint32_t>(o), static_cast<std::uint32_t>(t)};
  };
  const std::size_t need_col = d > 1 ? d - 1 : 0;
  std::vector<Col> cols;
  for (std::uint64_t x = 0; x < pow3(static_cast<unsigned>(r)); ++x) {
    Col c{0, 0};
    std::uint64_t y = x;
    int lead = 0;
    for (std::size_t i = 0; i < r; ++i, y /= 3) {
      const int digit = static_cast<int>(y % 3);
      if (digit == 1) c.ones |= 1u << i;
      if (digit == 2) c.twos |= 1u << i;
      if (digit && !lead) lead = digit;
    }
    if (lead == 1 && weight(c) >= need_col) cols.push_back(c);
  }
  const auto gram_full_rank = [&](const std::vector<std::size_t>& pick) {
    std::array<std::uint64_t, 8> ones{}, twos{};
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const Col a = cols[pick[i]], b = cols[pick[j]];
        const int p1 = std::popcount((a.ones & b.ones) | (a.twos & b.twos));
        const int p2 = std::popcount((a.ones & b.twos) | (a.twos & b.ones));
        const int v = (p1 + 2 * p2 + (i == j ? 1 : 0)) % 3;
        if (v == 1) ones[i] |= std::uint64_t{1} << j;
        if (v == 2) twos[i] |= std::uint64_t{1} << j;
      }
    return detail::small_rank(ones.data(), twos.data(), k, k) == k;
  };
  struct Combo {
    Col v;
    std::size_t support;
  };
  std::vector<std::size_t> pick(k);
  std::vector<std::vector<Combo>> combos(k + 1);
  std::optional<std::vector<std::size_t>> found;
  const auto extend = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (found) return;
    if (depth == k) {
      if (gram_full_rank(pick)) found = pick;
      return;
    }
    for (std::size_t c = start; c < cols.size() && !found; ++c) {
      auto& next = combos[depth + 1];
      next = combos[depth];
      bool ok = true;
      for (const Col a : {cols[c], negate(cols[c])}) {
        if (weight(a) + 1 < d) ok = false;
        next.push_back({a, 1});
        for (const auto& cb : combos[depth]) {
          const Col s = add(cb.v, a);
          if (weight(s) + cb.support + 1 < d) {
            ok = false;
            break;
          }
          next.push_back({s, cb.support + 1});
        }
        if (!ok) break;
      }
      if (!ok) continue;
      pick[depth] = c;
      self(self, depth + 1, d >= 3 ? c + 1 : c);
    }
  };
  for (std::size_t w = need_col; w <= r && !found; ++w) {
    const Col first{static_cast<std::uint32_t>((1u << w) - 1), 0};
    if (w == 0) continue;
    std::size_t idx = cols.size();
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (cols[i].ones == first.ones && cols[i].twos == 0) idx = i;
    if (idx == cols.size()) continue;
    if (w + 1 < d) continue;
    pick[0] = idx;
    combos[1] = {{first, 1}, {negate(first), 1}};
    extend(extend, 1, 0);
  }
  if (!found) return {};
  // Generator [I_k | -A^T].
  std::vector<std::string> rows(k);
  for (std::size_t i = 0; i < k; ++i) {
    rows[i] = std::string(k, '0');
    rows[i][i] = '1';
    const Col a = cols[(*found)[i]];
    for (std::size_t j = 0; j < r; ++j) rows[i] += (a.ones >> j & 1) ? '2' : (a.twos >> j & 1) ? '1' : '0';
  }
  ExistsResult res{true, TritMatrix::from_strings(rows)};
  const LinearCode c(*res.witness);
  if (!gram_report(c).is_lcd || min_distance(c) < d) throw std::logic_error("exists_lcd_parity witness failed re-verification");
  return res;
}

namespace detail {

// Lexicographic hill-climb objective: LCD first, then the number of
// codewords lighter than the targets (primal and dual together), then
// distance, then fewest minimum-weight codewords, then dual distance.
struct ClimbScore {
  bool lcd = false;
  unsigned __int128 light_words = 0;  // weighted count, lighter words weigh more
  std::size_t d = 0;
  std::uint64_t min_weight_words = 0;
  std::size_t dual_d = 0;

  [[nodiscard]] bool better_than(const ClimbScore& o) const {
    if (lcd != o.lcd) return lcd;
    if (light_words != o.light_words) return light_words < o.light_words;
    if (d != o.d) return d > o.d;
    if (min_weight_words != o.min_weight_words) return min_weight_words < o.min_weight_words;
    return dual_d > o.dual_d;
  }
};

// Enumerates whichever of the code and its dual is smaller and obtains the
// other through the MacWilliams transform.
inline void both_enumerators(const SystematicCandidate& c, std::vector<std::uint64_t>& primal,
                             std::vector<std::uint64_t>& dual_counts) {
  if (c.k <= c.redundancy()) {
    primal = c.enumerate();
    dual_counts = macwilliams_small(primal.data(), c.n, c.k);
  } else {
    dual_counts = c.dual_rows().enumerate();
    primal = macwilliams_small(dual_counts.data(), c.n, c.redundancy());
  }
}

inline constexpr unsigned kLightShift = 2;
inline ClimbScore score_candidate(const SystematicCandidate& c, std::size_t target_d, std::size_t dual_target) {
  ClimbScore s;
  s.lcd = c.is_lcd();
  if (!s.lcd) return s;
  std::vector<std::uint64_t> a, b;
  both_enumerators(c, a, b);
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i]) {
      s.d = i;
      s.min_weight_words = a[i];
      break;
    }
  for (std::size_t i = 1; i < std::min(target_d, a.size()); ++i) s.light_words += static_cast<unsigned __int128>(a[i]) << (kLightShift * (target_d - i));
  if (c.k < c.n) {
    for (std::size_t i = 1; i < b.size(); ++i)
      if (b[i]) {
        s.dual_d = i;
        break;
      }
    for (std::size_t i = 1; i < std::min(dual_target, b.size()); ++i) s.light_words += static_cast<unsigned __int128>(b[i]) << (kLightShift * (dual_target - i));
  }
  return s;
}


// Random r x n matrix whose every t columns are linearly independent, built
// one column at a time: each new column avoids the span of every t-1
// earlier ones. Columns are base-3 integers. Returns nothing when the
// greedy choice gets stuck.
inline std::optional<TritMatrix> greedy_independent_columns(std::size_t r, std::size_t n, std::size_t t,
                                                            std::mt19937_64& rng) {
  const std::uint64_t space = pow3(static_cast<unsigned>(r));
  std::vector<std::uint32_t> digit_pow(r);
  for (std::size_t i = 0; i < r; ++i) digit_pow[i] = static_cast<std::uint32_t>(pow3(static_cast<unsigned>(i)));
  const auto add = [&](std::uint32_t a, std::uint32_t b, int times) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < r; ++i) {
      out += ((a % 3 + times * (b % 3)) % 3) * digit_pow[i];
      a /= 3;
      b /= 3;
    }
    return out;
  };
  std::vector<std::uint8_t> covered(space, 0);
  covered[0] = 1;
  std::vector<std::vector<std::uint32_t>> spans(t);
  spans[0] = {0};
  std::vector<std::uint32_t> cols;
  for (std::size_t c = 0; c < n; ++c) {
    std::uint32_t v = 0;
    for (int attempt = 0; attempt < 256 && !v; ++attempt) {
      const auto x = static_cast<std::uint32_t>(rng() % space);
      if (!covered[x]) v = x;
    }
    if (!v) {
      const std::uint64_t start = rng() % space;
      for (std::uint64_t off = 0; off < space && !v; ++off) {
        const auto x = static_cast<std::uint32_t>((start + off) % space);
        if (!covered[x]) v = x;
      }
    }
    if (!v) return std::nullopt;
    cols.push_back(v);
    for (std::size_t j = std::min(c + 1, t - 1); j-- > 0;)
      for (std::size_t idx = 0, end = spans[j].size(); idx < end; ++idx)
        for (int a = 1; a <= 2; ++a) {
          const std::uint32_t y = add(spans[j][idx], v, a);
          spans[j + 1].push_back(y);
          covered[y] = 1;
        }
  }
  TritMatrix m(r, n);
  std::vector<TritVector> rows(r, TritVector(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::uint32_t x = cols[c];
    for (std::size_t i = 0; i < r; ++i, x /= 3) rows[i].set(c, Trit(static_cast<int>(x % 3)));
  }
  return TritMatrix(std::move(rows), n);
}

// Work estimate for greedy_independent_columns: spans of up to t-1 columns.
inline double greedy_cost(std::size_t n, std::size_t t) {
  double total = 0, term = 1;
  for (std::size_t j = 0; j < t; ++j) {
    total += term;
    term = term * static_cast<double>(n - j) / static_cast<double>(j + 1) * 2;
  }
  return total;
}

inline constexpr std::size_t kGreedyMaxRows = 13;
inline constexpr double kGreedyMaxCost = 4e6;

// Loads the code generated by g into cand as [I_k | A], after moving the
// pivot columns to the front.
inline bool load_systematic(const TritMatrix& g, SystematicCandidate& cand) {
  const auto red = rref(g);
  if (red.pivots.size() != cand.k) return false;
  std::vector<std::size_t> order = red.pivots;
  for (std::size_t c = 0; c < g.cols(); ++c)
    if (std::find(red.pivots.begin(), red.pivots.end(), c) == red.pivots.end()) order.push_back(c);
  const TritMatrix sys = rref(red.matrix.select_columns(order)).matrix;
  for (std::size_t i = 0; i < cand.k; ++i)
    for (std::size_t j = 0; j < cand.redundancy(); ++j) cand.set_entry(i, j, sys.at(i, cand.k + j).value());
  return true;
}

}  // namespace detail

// Seeded hill-climb over the entries of A in [I_k | A]. Moves change one
// entry; a move is kept unless it makes the score worse, and the chain
// restarts from a fresh start after `plateau` moves without strict
// improvement. Stops once an LCD code meets target_d (and dual_target_d on
// its dual, when nonzero) or after max_iters moves. Identical budgets give
// identical results.
inline SearchResult randomized_search(std::size_t n, std::size_t k, std::size_t target_d, const SearchBudget& budget = {},
                                      std::size_t dual_target_d = 0) {
  if (k == 0 || k > n) throw std::invalid_argument("search needs 1 <= k <= n");
  detail::SystematicCandidate cur(n, k);
  const std::size_t m = n - k;
  SearchResult result{n, k, 0, std::nullopt, false, 0};
  if (m == 0) {
    result.best_d = 1;
    result.witness = cur.to_matrix();
    return result;
  }
  std::mt19937_64 rng(budget.seed);

  // Restarts seed the climb from a greedy matrix whose columns are t-wise
  // independent: on the generator side this forces dual distance > t, on
  // the parity-check side distance > t. The cheaper feasible side is used.
  bool greedy_on_generator = false;
  std::size_t greedy_t = 0;
  {
    double best_cost = detail::kGreedyMaxCost;
    const auto consider = [&](bool generator_side, std::size_t rows, std::size_t target) {
      if (target < 3 || rows > detail::kGreedyMaxRows || target - 1 > rows) return;
      const double cost = detail::greedy_cost(n, target - 1);
      if (cost <= best_cost) {
        best_cost = cost;
        greedy_on_generator = generator_side;
        greedy_t = target - 1;
      }
    };
    consider(false, m, target_d);
    consider(true, k, dual_target_d);
  }
  const auto randomize = [&] {
    if (greedy_t) {
      const std::size_t rows = greedy_on_generator ? k : m;
      if (auto cols = detail::greedy_independent_columns(rows, n, greedy_t, rng)) {
        if (rank(*cols) == rows) {
          const TritMatrix g = greedy_on_generator ? *cols : nullspace_basis(*cols);
          if (detail::load_systematic(g, cur)) return;
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j) cur.set_entry(i, j, static_cast<int>(rng() % 3));
  };
  const auto done = [&](const detail::ClimbScore& s) { return s.lcd && s.light_words == 0 && s.d >= target_d && (k == n || s.dual_d >= dual_target_d); };

  randomize();
  detail::ClimbScore score = detail::score_candidate(cur, target_d, dual_target_d);
  detail::ClimbScore best_score = score;
  detail::SystematicCandidate best = cur;
  std::uint64_t stale = 0;
  std::uint64_t iters = 0;
  while (!done(best_score) && iters < budget.max_iters) {
    ++iters;
    const std::size_t i = rng() % k;
    const std::size_t j = rng() % m;
    const int old = cur.entry(i, j);
    const int nv = (old + 1 + static_cast<int>(rng() % 2)) % 3;
    cur.set_entry(i, j, nv);
    const detail::ClimbScore s = detail::score_candidate(cur, target_d, dual_target_d);
    if (score.better_than(s)) {
      cur.set_entry(i, j, old);
      ++stale;
    } else {
      stale = s.better_than(score) ? 0 : stale + 1;
      score = s;
      if (score.better_than(best_score)) {
        best_score = score;
        best = cur;
      }
    }
    if (stale >= budget.plateau) {
      randomize();
      score = detail::score_candidate(cur, target_d, dual_target_d);
      stale = 0;
      if (score.better_than(best_score)) {
        best_score = score;
        best = cur;
      }
    }
  }
  result.evaluated = iters;
  if (best_score.lcd) {
    result.best_d = best_score.d;
    result.witness = best.to_matrix();
    detail::reverify(*result.witness, n, k, result.best_d);
  }
  return result;
}

}  // namespace ternlcd
