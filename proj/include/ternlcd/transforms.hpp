#pragma once

// Puncturing, shortening, juxtaposition and column scaling. Coordinates are
// 1-based throughout this header.

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ternlcd/code.hpp"

namespace ternlcd {

struct TransformError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CoordSet {
 public:
  CoordSet() = default;
  CoordSet(std::initializer_list<std::size_t> coords) : CoordSet(std::vector<std::size_t>(coords)) {}
  explicit CoordSet(std::vector<std::size_t> coords) : coords_(std::move(coords)) {
    std::sort(coords_.begin(), coords_.end());
    if (!coords_.empty() && coords_.front() == 0) throw std::invalid_argument("coordinates are 1-based");
    if (std::adjacent_find(coords_.begin(), coords_.end()) != coords_.end())
      throw std::invalid_argument("duplicate coordinate in set");
  }

  // "1,2,7" -> {1,2,7}
  static CoordSet parse(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty coordinate in '" + text + "'");
      std::size_t pos = 0;
      const unsigned long v = std::stoul(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("bad coordinate '" + item + "'");
      out.push_back(v);
    }
    return CoordSet(std::move(out));
  }

  static CoordSet all(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{1});
    return CoordSet(std::move(v));
  }

  [[nodiscard]] const std::vector<std::size_t>& coords() const { return coords_; }
  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  [[nodiscard]] bool empty() const { return coords_.empty(); }
  [[nodiscard]] bool contains(std::size_t c) const { return std::binary_search(coords_.begin(), coords_.end(), c); }

  void check_within(std::size_t n) const {
    if (!coords_.empty() && coords_.back() > n)
      throw std::invalid_argument("coordinate " + std::to_string(coords_.back()) + " exceeds length " + std::to_string(n));
  }

  // 0-based indices of the coordinates not in the set.
  [[nodiscard]] std::vector<std::size_t> complement0(std::size_t n) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 1; i <= n; ++i)
      if (!contains(i)) keep.push_back(i - 1);
    return keep;
  }

  [[nodiscard]] std::vector<std::size_t> zero_based() const {
    std::vector<std::size_t> v;
    for (std::size_t c : coords_) v.push_back(c - 1);
    return v;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + std::to_string(coords_[i]);
    return s;
  }

  friend bool operator==(const CoordSet&, const CoordSet&) = default;

 private:
  std::vector<std::size_t> coords_;
};

inline LinearCode puncture(const LinearCode& c, const CoordSet& s) {
  if (s.empty()) throw std::invalid_argument("puncture: empty coordinate set");
  s.check_within(c.n());
  if (s.size() >= c.n()) throw std::invalid_argument("puncture: cannot delete every coordinate");
  const auto keep = s.complement0(c.n());
  TritMatrix g = c.generator().select_columns(keep);
  const std::size_t r = rank(g);
  if (r < c.k())
    throw TransformError("puncture collapses dimension: deleting {" + s.to_string() + "} leaves rank " +
                         std::to_string(r) + " < " + std::to_string(c.k()));
  return LinearCode(std::move(g));
}

// Basis of the subcode vanishing on s, with the s coordinates removed. The
// subcode is found as the left null space of the selected columns acting on
// message vectors.
inline LinearCode shorten(const LinearCode& c, const CoordSet& s) {
  if (s.empty()) throw std::invalid_argument("shorten: empty coordinate set");
  s.check_within(c.n());
  if (s.size() >= c.k()) throw std::invalid_argument("shorten: set must be smaller than the dimension");
  const auto cols = s.zero_based();
  const TritMatrix messages = nullspace_basis(c.generator().select_columns(cols).transpose());
  const std::size_t expected = c.k() - s.size();
  if (messages.rows() != expected)
    throw TransformError("shorten on {" + s.to_string() + "}: subcode has dimension " +
                         std::to_string(messages.rows()) + ", expected " + std::to_string(expected));
  const TritMatrix sub = mat_mul(messages, c.generator());
  return LinearCode(sub.select_columns(s.complement0(c.n())));
}

inline LinearCode juxtapose(const LinearCode& c, const TritMatrix& block, std::size_t copies) {
  if (block.rows() != c.k())
    throw std::invalid_argument("juxtapose: block has " + std::to_string(block.rows()) + " rows, code has dimension " +
                                std::to_string(c.k()));
  TritMatrix g = c.generator();
  for (std::size_t i = 0; i < copies; ++i) g = hstack(g, block);
  return LinearCode(std::move(g));
}

inline LinearCode scale_columns(const LinearCode& c, const CoordSet& s, Trit factor) {
  if (factor.is_zero()) throw std::invalid_argument("scale_columns: factor must be nonzero");
  s.check_within(c.n());
  if (factor.value() == 1 || s.empty()) return c;
  std::vector<TritVector> rows = c.generator().row_vectors();
  for (auto& r : rows)
    for (std::size_t col : s.coords()) r.set(col - 1, r.at(col - 1) * factor);
  return LinearCode(TritMatrix(std::move(rows), c.n()));
}

// New coordinate j (1-based) takes old coordinate order[j-1].
inline LinearCode permute_columns(const LinearCode& c, const std::vector<std::size_t>& order) {
  if (order.size() != c.n()) throw std::invalid_argument("permutation length differs from n");
  std::vector<std::size_t> cols;
  std::vector<bool> seen(c.n(), false);
  for (std::size_t o : order) {
    if (o == 0 || o > c.n() || seen[o - 1]) throw std::invalid_argument("not a permutation of 1..n");
    seen[o - 1] = true;
    cols.push_back(o - 1);
  }
  return LinearCode(c.generator().select_columns(cols));
}

}  // namespace ternlcd
