#pragma once

// Linear codes over GF(3): validation, duality, the LCD (Gram) test,
// weight enumeration and minimum distance.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ternlcd/gf3.hpp"
#include "ternlcd/parallel.hpp"

namespace ternlcd {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t pow3(unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 3;
  return r;
}

// 3^e if it does not exceed `cap`, otherwise cap + 1.
constexpr std::uint64_t pow3_capped(std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / 3) return cap + 1;
    r *= 3;
  }
  return r;
}

struct Budget {
  std::uint64_t max_codewords = pow3(16);
  unsigned threads = default_threads();
};

class LinearCode {
 public:
  explicit LinearCode(TritMatrix generator) : g_(std::move(generator)) {
    if (g_.rows() == 0 || g_.cols() == 0) throw std::invalid_argument("generator matrix is empty");
    const std::size_t r = rank(g_);
    if (r < g_.rows())
      throw std::invalid_argument("generator rows are not a basis: rank " + std::to_string(r) + " < " +
                                  std::to_string(g_.rows()) + " rows");
  }

  [[nodiscard]] std::size_t n() const { return g_.cols(); }
  [[nodiscard]] std::size_t k() const { return g_.rows(); }
  [[nodiscard]] const TritMatrix& generator() const { return g_; }

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  TritMatrix g_;
};

inline LinearCode make_code(TritMatrix g) { return LinearCode(std::move(g)); }

// True when both generators span the same space.
inline bool same_row_space(const TritMatrix& a, const TritMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return rref(a).matrix == rref(b).matrix;
}

class WeightEnumerator {
 public:
  WeightEnumerator() = default;
  explicit WeightEnumerator(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

  // Sparse constructor: {{weight, count}, ...}; A_0 = 1 is implied unless given.
  static WeightEnumerator from_terms(std::size_t n, std::initializer_list<std::pair<std::size_t, std::uint64_t>> terms) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (const auto& [w, a] : terms) {
      if (w > n) throw std::invalid_argument("enumerator term exceeds length");
      c[w] += a;
    }
    return WeightEnumerator(std::move(c));
  }

  [[nodiscard]] std::size_t length() const { return counts_.empty() ? 0 : counts_.size() - 1; }
  [[nodiscard]] const std::vector<std::uint64_t>& counts() const { return counts_; }
  [[nodiscard]] std::uint64_t operator[](std::size_t i) const { return i < counts_.size() ? counts_[i] : 0; }

  [[nodiscard]] std::uint64_t total() const { return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0}); }

  // Smallest nonzero weight, or 0 for the zero code.
  [[nodiscard]] std::size_t min_distance() const {
    for (std::size_t i = 1; i < counts_.size(); ++i)
      if (counts_[i]) return i;
    return 0;
  }

  // A_0 = 1, sum = 3^k, nonzero weights pair up with their negatives.
  [[nodiscard]] bool is_consistent(std::size_t k) const {
    if (counts_.empty() || counts_[0] != 1) return false;
    if (total() != pow3(static_cast<unsigned>(k))) return false;
    for (std::size_t i = 1; i < counts_.size(); ++i)
      if (counts_[i] % 2) return false;
    return true;
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (!counts_[i]) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << counts_[i];
      } else {
        if (counts_[i] != 1) os << counts_[i];
        os << "z";
        if (i != 1) os << '^' << i;
      }
    }
    return os.str();
  }

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

struct GramReport {
  TritMatrix gram;
  std::size_t gram_rank = 0;
  std::size_t hull_dim = 0;
  bool is_lcd = false;
};

inline GramReport gram_report(const LinearCode& c) {
  GramReport r;
  r.gram = gram(c.generator());
  r.gram_rank = rank(r.gram);
  r.hull_dim = c.k() - r.gram_rank;
  r.is_lcd = r.gram_rank == c.k();
  return r;
}

inline bool is_lcd(const LinearCode& c) { return gram_report(c).is_lcd; }

inline LinearCode dual(const LinearCode& c) {
  if (c.k() >= c.n()) throw std::invalid_argument("dual of the full space is the zero code");
  return LinearCode(nullspace_basis(c.generator()));
}

namespace detail {

// Generator rows flattened into word planes for the enumeration kernels.
struct PackedRows {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> ones;
  std::vector<std::uint64_t> twos;

  explicit PackedRows(const TritMatrix& g) : k(g.rows()), n(g.cols()), words(words_for(g.cols())) {
    ones.reserve(k * words);
    twos.reserve(k * words);
    for (std::size_t r = 0; r < k; ++r) {
      const auto& row = g.row(r);
      ones.insert(ones.end(), row.ones().begin(), row.ones().end());
      twos.insert(twos.end(), row.twos().begin(), row.twos().end());
    }
  }
};

// Walks codewords m·G for message indices t in [begin, end) of the modular
// base-3 Gray code: message digit i is (t_i - t_{i+1}) mod 3, where t_i are
// the base-3 digits of t. Going from t to t+1 raises exactly one message
// digit by one, the one at the number of trailing 2s of t, so each step is
// a single row addition. Row r occupies words [r*W, (r+1)*W) of each plane.
// visit(weight) returns false to stop early; the walk returns false iff it
// was stopped.
inline constexpr std::size_t kMaxWalkRows = 48;

template <std::size_t FixedWords, class Visit>
bool gray_walk_impl(const std::uint64_t* ones, const std::uint64_t* twos, std::size_t k, std::size_t words,
                    std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return true;
  if (k >= kMaxWalkRows) throw BudgetExceeded("too large: dimension exceeds the enumeration kernel");
  constexpr std::size_t kStack = FixedWords ? FixedWords : 1;
  const std::size_t W = FixedWords ? FixedWords : words;
  std::array<std::uint64_t, kStack> s1{}, s2{};
  std::vector<std::uint64_t> h1, h2;
  if constexpr (!FixedWords) {
    h1.assign(W, 0);
    h2.assign(W, 0);
  }
  std::uint64_t* c1 = FixedWords ? s1.data() : h1.data();
  std::uint64_t* c2 = FixedWords ? s2.data() : h2.data();

  std::array<std::uint8_t, kMaxWalkRows + 1> digits{};
  {
    std::uint64_t t = begin;
    for (std::size_t i = 0; i < k; ++i) {
      digits[i] = static_cast<std::uint8_t>(t % 3);
      t /= 3;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const int m = (digits[i] - digits[i + 1] + 3) % 3;
      for (int rep = 0; rep < m; ++rep)
        for (std::size_t w = 0; w < W; ++w) add_words(c1[w], c2[w], ones[i * W + w], twos[i * W + w], c1[w], c2[w]);
    }
  }
  const auto weight = [&] {
    std::size_t s = 0;
    for (std::size_t w = 0; w < W; ++w) s += std::popcount(c1[w] | c2[w]);
    return s;
  };
  if (!visit(weight())) return false;
  for (std::uint64_t t = begin; t + 1 < end; ++t) {
    std::size_t j = 0;
    while (digits[j] == 2) digits[j++] = 0;
    ++digits[j];
    const std::uint64_t* r1 = ones + j * W;
    const std::uint64_t* r2 = twos + j * W;
    for (std::size_t w = 0; w < W; ++w) add_words(c1[w], c2[w], r1[w], r2[w], c1[w], c2[w]);
    if (!visit(weight())) return false;
  }
  return true;
}

template <class Visit>
bool gray_walk(const std::uint64_t* ones, const std::uint64_t* twos, std::size_t k, std::size_t words,
               std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  switch (words) {
    case 1: return gray_walk_impl<1>(ones, twos, k, words, begin, end, visit);
    case 2: return gray_walk_impl<2>(ones, twos, k, words, begin, end, visit);
    default: return gray_walk_impl<0>(ones, twos, k, words, begin, end, visit);
  }
}

template <class Visit>
bool gray_walk(const PackedRows& g, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  return gray_walk(g.ones.data(), g.twos.data(), g.k, g.words, begin, end, visit);
}

inline constexpr unsigned kEnumerationChunks = 64;

inline std::uint64_t codeword_count(const LinearCode& c, const Budget& budget) {
  const std::uint64_t total = pow3_capped(c.k(), budget.max_codewords);
  if (total > budget.max_codewords)
    throw BudgetExceeded("too large: 3^" + std::to_string(c.k()) + " codewords exceed the enumeration budget of " +
                         std::to_string(budget.max_codewords));
  return total;
}

using BigInt = boost::multiprecision::cpp_int;

// MacWilliams transform over GF(3):
//   B_j = 3^{-k} sum_i A_i K_j(i),  K_j(i) = sum_s (-1)^s 2^{j-s} C(i,s) C(n-i,j-s).
inline std::vector<BigInt> macwilliams_big(const std::vector<BigInt>& a, std::size_t n, std::size_t k) {
  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : BigInt(0));
  }
  std::vector<BigInt> pow2(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) pow2[i] = pow2[i - 1] * 2;
  BigInt size = 1;
  for (std::size_t i = 0; i < k; ++i) size *= 3;

  std::vector<BigInt> b(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (a[i] == 0) continue;
      BigInt kraw = 0;
      for (std::size_t s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        BigInt term = pow2[j - s] * binom[i][s] * binom[n - i][j - s];
        if (s % 2) kraw -= term;
        else kraw += term;
      }
      acc += a[i] * kraw;
    }
    if (acc % size != 0) throw std::logic_error("MacWilliams transform is not integral: input is not an enumerator");
    b[j] = acc / size;
  }
  return b;
}

// Same transform with 128-bit arithmetic; exact for n <= 40, where every
// partial sum is bounded by 3^(2n) < 2^127.
inline std::vector<std::uint64_t> macwilliams_small(const std::uint64_t* a, std::size_t n, std::size_t k) {
  if (n > 40) throw std::invalid_argument("macwilliams_small: n > 40");
  std::array<std::array<__int128, 41>, 41> binom{};
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
  }
  __int128 size = 1;
  for (std::size_t i = 0; i < k; ++i) size *= 3;
  std::vector<std::uint64_t> b(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    __int128 acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (!a[i]) continue;
      __int128 kraw = 0;
      for (std::size_t s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        const __int128 term = (__int128{1} << (j - s)) * binom[i][s] * binom[n - i][j - s];
        kraw += (s % 2) ? -term : term;
      }
      acc += static_cast<__int128>(a[i]) * kraw;
    }
    if (acc % size != 0 || acc < 0) throw std::logic_error("MacWilliams transform is not integral: input is not an enumerator");
    b[j] = static_cast<std::uint64_t>(acc / size);
  }
  return b;
}

}  // namespace detail

inline WeightEnumerator weight_enumerator(const LinearCode& c, const Budget& budget = {}) {
  const std::uint64_t total = detail::codeword_count(c, budget);
  const detail::PackedRows g(c.generator());
  std::vector<std::vector<std::uint64_t>> partial(detail::kEnumerationChunks, std::vector<std::uint64_t>(c.n() + 1, 0));
  for_each_chunk(total, detail::kEnumerationChunks, budget.threads,
                 [&](unsigned part, std::uint64_t b, std::uint64_t e) {
                   auto& counts = partial[part];
                   detail::gray_walk(g, b, e, [&](std::size_t w) {
                     ++counts[w];
                     return true;
                   });
                 });
  std::vector<std::uint64_t> counts(c.n() + 1, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i <= c.n(); ++i) counts[i] += p[i];
  return WeightEnumerator(std::move(counts));
}

// Enumerator of the dual of an [n,k] code with enumerator w. k = n is
// accepted here and yields the zero code's enumerator.
inline WeightEnumerator macwilliams_dual_enumerator(const WeightEnumerator& w, std::size_t n, std::size_t k) {
  if (w.length() != n) throw std::invalid_argument("enumerator length differs from n");
  if (!w.is_consistent(k)) throw std::invalid_argument("input is not a valid enumerator of an [n,k] code");
  std::vector<detail::BigInt> a(w.counts().begin(), w.counts().end());
  const auto b = detail::macwilliams_big(a, n, k);
  std::vector<std::uint64_t> out;
  out.reserve(b.size());
  for (const auto& x : b) {
    if (x < 0 || x > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("dual enumerator coefficient out of range");
    out.push_back(static_cast<std::uint64_t>(x));
  }
  return WeightEnumerator(std::move(out));
}

// Direct enumeration when 3^k fits the budget, otherwise enumeration of the
// dual followed by the MacWilliams transform when 3^(n-k) fits.
inline std::size_t min_distance(const LinearCode& c, const Budget& budget = {}) {
  if (c.k() == c.n()) return 1;
  if (pow3_capped(c.k(), budget.max_codewords) <= budget.max_codewords) return weight_enumerator(c, budget).min_distance();
  if (c.k() < c.n() && pow3_capped(c.n() - c.k(), budget.max_codewords) <= budget.max_codewords) {
    const WeightEnumerator d = weight_enumerator(dual(c), budget);
    std::vector<detail::BigInt> a(d.counts().begin(), d.counts().end());
    const auto b = detail::macwilliams_big(a, c.n(), c.n() - c.k());
    for (std::size_t i = 1; i < b.size(); ++i)
      if (b[i] != 0) return i;
    throw std::logic_error("code has no nonzero codeword");
  }
  throw BudgetExceeded("too large: neither 3^" + std::to_string(c.k()) + " nor 3^" + std::to_string(c.n() - c.k()) +
                       " codewords fit the enumeration budget");
}

// True iff every nonzero codeword has weight >= d. Stops at the first
// lighter codeword.
inline bool min_distance_at_least(const LinearCode& c, std::size_t d, const Budget& budget = {}) {
  const std::uint64_t total = detail::codeword_count(c, budget);
  const detail::PackedRows g(c.generator());
  bool first = true;
  return detail::gray_walk(g, 0, total, [&](std::size_t w) {
    if (first) {
      first = false;
      return true;
    }
    return w >= d;
  });
}

}  // namespace ternlcd
