#pragma once

// Arithmetic and dense linear algebra over GF(3).
//
// Vectors are bit-sliced: every trit occupies one bit in each of two
// planes, `ones` (trit == 1) and `twos` (trit == 2). A position with both
// bits clear is zero; both bits set never occurs. Bits past the logical
// length are always zero.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ternlcd {

class Trit {
 public:
  constexpr Trit() = default;
  constexpr explicit Trit(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

  [[nodiscard]] constexpr int value() const { return v_; }
  [[nodiscard]] constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr Trit operator+(Trit a, Trit b) { return Trit(a.v_ + b.v_); }
  friend constexpr Trit operator-(Trit a, Trit b) { return Trit(a.v_ + 3 - b.v_); }
  friend constexpr Trit operator*(Trit a, Trit b) { return Trit(a.v_ * b.v_); }
  friend constexpr Trit operator-(Trit a) { return Trit(3 - a.v_); }
  friend constexpr bool operator==(Trit, Trit) = default;

 private:
  std::uint8_t v_ = 0;
};

namespace detail {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }

// Sum of two bit-sliced words: r = a + b (mod 3) lane-wise.
constexpr void add_words(std::uint64_t a1, std::uint64_t a2, std::uint64_t b1, std::uint64_t b2,
                         std::uint64_t& r1, std::uint64_t& r2) {
  const std::uint64_t za = ~(a1 | a2);
  const std::uint64_t zb = ~(b1 | b2);
  r1 = (a1 & zb) | (b1 & za) | (a2 & b2);
  r2 = (a2 & zb) | (b2 & za) | (a1 & b1);
}

// Lane-wise products summed, mod 3.
constexpr int dot_words(std::uint64_t a1, std::uint64_t a2, std::uint64_t b1, std::uint64_t b2) {
  const int same = std::popcount(a1 & b1) + std::popcount(a2 & b2);
  const int cross = std::popcount(a1 & b2) + std::popcount(a2 & b1);
  return same + 2 * cross;
}

}  // namespace detail

class TritVector {
 public:
  TritVector() = default;
  explicit TritVector(std::size_t len)
      : len_(len), ones_(detail::words_for(len), 0), twos_(detail::words_for(len), 0) {}

  static TritVector from_values(std::span<const int> values) {
    TritVector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) v.set(i, Trit(values[i]));
    return v;
  }
  static TritVector from_values(std::initializer_list<int> values) {
    return from_values(std::span<const int>(values.begin(), values.size()));
  }

  // Characters must be '0', '1' or '2'.
  static TritVector from_string(std::string_view s) {
    TritVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char ch = s[i];
      if (ch < '0' || ch > '2') throw std::invalid_argument("trit string contains '" + std::string(1, ch) + "'");
      v.set(i, Trit(ch - '0'));
    }
    return v;
  }

  [[nodiscard]] std::size_t size() const { return len_; }
  [[nodiscard]] std::size_t word_count() const { return ones_.size(); }
  [[nodiscard]] std::span<const std::uint64_t> ones() const { return ones_; }
  [[nodiscard]] std::span<const std::uint64_t> twos() const { return twos_; }

  [[nodiscard]] Trit at(std::size_t i) const {
    check_index(i);
    const std::uint64_t bit = std::uint64_t{1} << (i % detail::kWordBits);
    const std::size_t w = i / detail::kWordBits;
    if (ones_[w] & bit) return Trit(1);
    if (twos_[w] & bit) return Trit(2);
    return Trit(0);
  }

  void set(std::size_t i, Trit t) {
    check_index(i);
    const std::uint64_t bit = std::uint64_t{1} << (i % detail::kWordBits);
    const std::size_t w = i / detail::kWordBits;
    ones_[w] &= ~bit;
    twos_[w] &= ~bit;
    if (t.value() == 1) ones_[w] |= bit;
    if (t.value() == 2) twos_[w] |= bit;
  }

  [[nodiscard]] std::size_t weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < ones_.size(); ++i) w += std::popcount(ones_[i] | twos_[i]);
    return w;
  }

  [[nodiscard]] bool is_zero() const { return weight() == 0; }

  TritVector& operator+=(const TritVector& o) {
    check_len(o);
    for (std::size_t i = 0; i < ones_.size(); ++i)
      detail::add_words(ones_[i], twos_[i], o.ones_[i], o.twos_[i], ones_[i], twos_[i]);
    return *this;
  }

  TritVector& operator-=(const TritVector& o) {
    check_len(o);
    for (std::size_t i = 0; i < ones_.size(); ++i)
      detail::add_words(ones_[i], twos_[i], o.twos_[i], o.ones_[i], ones_[i], twos_[i]);
    return *this;
  }

  // Multiplying by 2 swaps the planes.
  TritVector& operator*=(Trit t) {
    if (t.is_zero()) {
      std::fill(ones_.begin(), ones_.end(), 0);
      std::fill(twos_.begin(), twos_.end(), 0);
    } else if (t.value() == 2) {
      ones_.swap(twos_);
    }
    return *this;
  }

  // this += t * o
  void add_scaled(const TritVector& o, Trit t) {
    if (t.value() == 1) *this += o;
    if (t.value() == 2) *this -= o;
  }

  friend TritVector operator+(TritVector a, const TritVector& b) { return a += b; }
  friend TritVector operator-(TritVector a, const TritVector& b) { return a -= b; }
  friend TritVector operator*(Trit t, TritVector v) { return v *= t; }

  friend Trit dot(const TritVector& a, const TritVector& b) {
    a.check_len(b);
    int acc = 0;
    for (std::size_t i = 0; i < a.ones_.size(); ++i)
      acc += detail::dot_words(a.ones_[i], a.twos_[i], b.ones_[i], b.twos_[i]);
    return Trit(acc);
  }

  friend bool operator==(const TritVector&, const TritVector&) = default;

  [[nodiscard]] std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) s[i] = static_cast<char>('0' + at(i).value());
    return s;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("trit index " + std::to_string(i) + " out of range");
  }
  void check_len(const TritVector& o) const {
    if (o.len_ != len_) throw std::invalid_argument("trit vector length mismatch");
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> ones_;
  std::vector<std::uint64_t> twos_;
};

class TritMatrix {
 public:
  TritMatrix() = default;
  TritMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, TritVector(cols)) {}

  TritMatrix(std::vector<TritVector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() != cols_) throw std::invalid_argument("matrix rows have unequal lengths");
  }

  static TritMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<TritVector> data;
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) data.push_back(TritVector::from_values(std::span<const int>(r.begin(), r.size())));
    return TritMatrix(std::move(data), cols);
  }

  static TritMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<TritVector> data;
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) data.push_back(TritVector::from_values(r));
    return TritMatrix(std::move(data), cols);
  }

  static TritMatrix from_strings(const std::vector<std::string>& rows) {
    std::vector<TritVector> data;
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) data.push_back(TritVector::from_string(r));
    return TritMatrix(std::move(data), cols);
  }

  static TritMatrix identity(std::size_t n) {
    TritMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i, Trit(1));
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_.empty() || cols_ == 0; }
  [[nodiscard]] Trit at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
  [[nodiscard]] const TritVector& row(std::size_t r) const { return rows_.at(r); }
  [[nodiscard]] const std::vector<TritVector>& row_vectors() const { return rows_; }

  [[nodiscard]] TritMatrix with_entry(std::size_t r, std::size_t c, Trit t) const {
    TritMatrix m = *this;
    m.rows_.at(r).set(c, t);
    return m;
  }

  [[nodiscard]] TritMatrix transpose() const {
    TritMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const Trit v = rows_[r].at(c);
        if (!v.is_zero()) t.rows_[c].set(r, v);
      }
    return t;
  }

  // Columns are 0-based here; the 1-based coordinate convention lives in transforms.
  [[nodiscard]] TritMatrix select_columns(std::span<const std::size_t> cols) const {
    TritMatrix out(rows(), cols.size());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const Trit v = rows_[r].at(cols[j]);
        if (!v.is_zero()) out.rows_[r].set(j, v);
      }
    return out;
  }

  [[nodiscard]] TritMatrix select_rows(std::span<const std::size_t> rows) const {
    std::vector<TritVector> data;
    data.reserve(rows.size());
    for (std::size_t r : rows) data.push_back(rows_.at(r));
    return TritMatrix(std::move(data), cols_);
  }

  friend TritMatrix hstack(const TritMatrix& a, const TritMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
    TritMatrix out(a.rows(), a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols_; ++c) out.rows_[r].set(c, a.rows_[r].at(c));
      for (std::size_t c = 0; c < b.cols_; ++c) out.rows_[r].set(a.cols_ + c, b.rows_[r].at(c));
    }
    return out;
  }

  friend TritMatrix vstack(const TritMatrix& a, const TritMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column count mismatch");
    std::vector<TritVector> data = a.rows_;
    data.insert(data.end(), b.rows_.begin(), b.rows_.end());
    return TritMatrix(std::move(data), a.cols_);
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const TritVector& v) { return v.is_zero(); });
  }

  [[nodiscard]] std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
  }

  friend bool operator==(const TritMatrix&, const TritMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const TritMatrix& m) {
    for (const auto& r : m.rows_) os << r.to_string() << '\n';
    return os;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<TritVector> rows_;
};

inline TritMatrix mat_mul(const TritMatrix& a, const TritMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const TritMatrix bt = b.transpose();
  std::vector<TritVector> out(a.rows(), TritVector(b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out[i].set(j, dot(a.row(i), bt.row(j)));
  return TritMatrix(std::move(out), b.cols());
}

// G * G^T without materialising the transpose.
inline TritMatrix gram(const TritMatrix& g) {
  std::vector<TritVector> out(g.rows(), TritVector(g.rows()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i; j < g.rows(); ++j) {
      const Trit v = dot(g.row(i), g.row(j));
      out[i].set(j, v);
      out[j].set(i, v);
    }
  return TritMatrix(std::move(out), g.rows());
}

struct RrefResult {
  TritMatrix matrix;
  std::vector<std::size_t> pivots;  // 0-based, strictly increasing
};

// Reduced row-echelon form. The pivot in each column is the first row at or
// below the current echelon row with a nonzero entry there. Zero rows are
// kept at the bottom so the shape is unchanged.
inline RrefResult rref(const TritMatrix& m) {
  std::vector<TritVector> rows = m.row_vectors();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < rows.size(); ++c) {
    std::size_t p = lead;
    while (p < rows.size() && rows[p].at(c).is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[lead], rows[p]);
    if (rows[lead].at(c).value() == 2) rows[lead] *= Trit(2);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead) continue;
      const Trit f = rows[r].at(c);
      if (!f.is_zero()) rows[r].add_scaled(rows[lead], -f);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {TritMatrix(std::move(rows), m.cols()), std::move(pivots)};
}

inline std::size_t rank(const TritMatrix& m) {
  std::vector<TritVector> rows = m.row_vectors();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < rows.size(); ++c) {
    std::size_t p = lead;
    while (p < rows.size() && rows[p].at(c).is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[lead], rows[p]);
    const Trit inv = rows[lead].at(c);  // 1 and 2 are their own inverses
    for (std::size_t r = lead + 1; r < rows.size(); ++r) {
      const Trit f = rows[r].at(c);
      if (!f.is_zero()) rows[r].add_scaled(rows[lead], -(f * inv));
    }
    ++lead;
  }
  return lead;
}

// Rows form a basis of { x : m x^T = 0 }, one row per non-pivot column in
// increasing column order.
inline TritMatrix nullspace_basis(const TritMatrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<TritVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    TritVector x(m.cols());
    x.set(f, Trit(1));
    for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], -r.at(i, f));
    basis.push_back(std::move(x));
  }
  return TritMatrix(std::move(basis), m.cols());
}

namespace detail {

// Rank of a small matrix whose rows fit in a single word per plane. Used by
// the search loops where allocating TritVectors per candidate would dominate.
inline std::size_t small_rank(std::uint64_t* ones, std::uint64_t* twos, std::size_t rows, std::size_t cols) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t p = lead;
    while (p < rows && !((ones[p] | twos[p]) & bit)) ++p;
    if (p == rows) continue;
    std::swap(ones[lead], ones[p]);
    std::swap(twos[lead], twos[p]);
    if (twos[lead] & bit) std::swap(ones[lead], twos[lead]);
    for (std::size_t r = lead + 1; r < rows; ++r) {
      if (ones[r] & bit) {
        add_words(ones[r], twos[r], twos[lead], ones[lead], ones[r], twos[r]);
      } else if (twos[r] & bit) {
        add_words(ones[r], twos[r], ones[lead], twos[lead], ones[r], twos[r]);
      }
    }
    ++lead;
  }
  return lead;
}

}  // namespace detail

}  // namespace ternlcd
