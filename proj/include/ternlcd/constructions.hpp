#pragma once

// Simplex matrices, the small-dimension and small-codimension families, the
// transcribed generator blocks and the recipe catalogue built from them.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ternlcd/code.hpp"
#include "ternlcd/named_matrices.hpp"
#include "ternlcd/sha256.hpp"
#include "ternlcd/standins.hpp"
#include "ternlcd/transforms.hpp"

namespace ternlcd {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- simplex

struct SimplexFamily {
  std::size_t k = 0;
  TritMatrix matrix;

  [[nodiscard]] std::size_t length() const { return matrix.cols(); }

  // Column label i (1-based): alpha_i for k = 2, beta_i for k = 3, gamma_i for k = 4.
  [[nodiscard]] TritVector column(std::size_t i) const {
    if (i == 0 || i > matrix.cols()) throw std::out_of_range("simplex column label out of range");
    TritVector v(k);
    for (std::size_t r = 0; r < k; ++r) v.set(r, matrix.at(r, i - 1));
    return v;
  }
};

inline constexpr std::size_t kSimplexMaxK = 8;

// S_1 = (1);  S_k = [S_{k-1} 0 S_{k-1} S_{k-1} ; 0..0 1 1..1 2..2].
inline SimplexFamily simplex(std::size_t k) {
  if (k < 2 || k > kSimplexMaxK) throw std::invalid_argument("simplex: k must be in [2, 8]");
  TritMatrix s = TritMatrix::from_strings({"1"});
  for (std::size_t level = 2; level <= k; ++level) {
    const std::size_t w = s.cols();
    const std::size_t n = 3 * w + 1;
    std::vector<TritVector> rows(level, TritVector(n));
    for (std::size_t r = 0; r + 1 < level; ++r)
      for (std::size_t c = 0; c < w; ++c) {
        const Trit v = s.at(r, c);
        rows[r].set(c, v);
        rows[r].set(w + 1 + c, v);
        rows[r].set(2 * w + 1 + c, v);
      }
    rows[level - 1].set(w, Trit(1));
    for (std::size_t c = 0; c < w; ++c) {
      rows[level - 1].set(w + 1 + c, Trit(1));
      rows[level - 1].set(2 * w + 1 + c, Trit(2));
    }
    s = TritMatrix(std::move(rows), n);
  }
  return {k, std::move(s)};
}

// ------------------------------------------------------- named matrices

inline const NamedMatrixEntry& named_matrix_entry(const std::string& id) {
  for (const auto& e : named_matrix_table())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown named matrix '" + id + "'");
}

inline std::string canonical_text(const std::vector<std::string>& rows) {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "\n" : "") + rows[i];
  return s;
}

inline TritMatrix named_matrix(const std::string& id) { return TritMatrix::from_strings(named_matrix_entry(id).rows); }

struct HashMismatch {
  std::string id;
  std::string expected;
  std::string actual;
};

inline std::vector<HashMismatch> check_named_matrices(const std::vector<NamedMatrixEntry>& table) {
  std::vector<HashMismatch> bad;
  for (const auto& e : table) {
    const std::string h = sha256_hex(canonical_text(e.rows));
    if (h != e.sha256) bad.push_back({std::string(e.id), std::string(e.sha256), h});
  }
  return bad;
}

// ------------------------------------------------------------ families

inline LinearCode dim1_code(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dim1_code: n must be >= 2");
  TritVector v(n);
  for (std::size_t i = n % 3 == 0 ? 1 : 0; i < n; ++i) v.set(i, Trit(1));
  return LinearCode(TritMatrix({v}, n));
}

inline LinearCode codim1_code(std::size_t n) {
  if (n < 3) throw std::invalid_argument("codim1_code: n must be >= 3");
  std::vector<TritVector> rows;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    TritVector r(n);
    r.set(i, Trit(1));
    if (n % 3 != 0 || i + 2 < n) r.set(n - 1, Trit(1));
    rows.push_back(std::move(r));
  }
  return LinearCode(TritMatrix(std::move(rows), n));
}

// [I_{n-2} | B] for the first B, in lexicographic order of its rows, that
// gives an LCD code of distance exactly 2. Rows of B range over the nonzero
// pairs (a zero row would leave a weight-1 codeword).
inline LinearCode codim2_code(std::size_t n) {
  if (n < 4) throw std::invalid_argument("codim2_code: n must be >= 4");
  const std::size_t m = n - 2;
  std::vector<int> digit(m, 1);  // pair index 1..8 encodes (p / 3, p % 3)
  for (;;) {
    std::vector<TritVector> rows;
    for (std::size_t i = 0; i < m; ++i) {
      TritVector r(n);
      r.set(i, Trit(1));
      r.set(m, Trit(digit[i] / 3));
      r.set(m + 1, Trit(digit[i] % 3));
      rows.push_back(std::move(r));
    }
    TritMatrix g(std::move(rows), n);
    if (gram_report(LinearCode(g)).is_lcd) {
      const LinearCode c(std::move(g));
      if (min_distance(c) == 2) return c;
    }
    std::size_t p = m;
    while (p > 0 && digit[p - 1] == 8) digit[--p] = 1;
    if (p == 0) throw std::logic_error("codim2_code: no block found");
    ++digit[p - 1];
  }
}

// n = 4s, 4s+1, 4s+2, 4s+3 -> d = 3s-1, 3s, 3s+1, 3s+1.
inline std::size_t dim2_distance(std::size_t n) {
  const std::size_t s = n / 4;
  switch (n % 4) {
    case 0: return 3 * s - 1;
    case 1: return 3 * s;
    default: return 3 * s + 1;
  }
}

namespace detail {

// Shortest member of each residue class mod 4 (lengths 4..7).
inline const std::vector<std::vector<std::string>>& dim2_seeds() {
  static const std::vector<std::vector<std::string>> seeds = {
      {"1001", "0110"},
      {"10011", "01101"},
      {"101011", "010112"},
      {"1000111", "0101012"},
  };
  return seeds;
}

}  // namespace detail

inline LinearCode dim2_code(std::size_t n) {
  if (n < 4) throw std::invalid_argument("dim2_code: n must be >= 4");
  const TritMatrix seed = TritMatrix::from_strings(detail::dim2_seeds()[n % 4]);
  return juxtapose(LinearCode(seed), simplex(2).matrix, (n - seed.cols()) / 4);
}

// Best LCD [n,3] distance: listed up to n = 13, then 9s + offset for
// n = 13s + r.
inline std::size_t dim3_distance(std::size_t n) {
  static constexpr std::array<std::size_t, 14> kSmall = {0, 0, 0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8};
  if (n < 3) throw std::invalid_argument("dim3_distance: n must be >= 3");
  if (n <= 13) return kSmall[n];
  static constexpr std::array<int, 13> kOffset = {-1, -1, 0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7};
  const std::size_t s = n / 13;
  return static_cast<std::size_t>(static_cast<long>(9 * s) + kOffset[n % 13]);
}

namespace detail {

// Columns appended to I_3, as labels of S_3 columns; a negative label -i
// stands for 2*beta_i.
inline const std::map<std::size_t, std::vector<int>>& dim3_bases() {
  static const std::map<std::size_t, std::vector<int>> bases = [] {
    std::map<std::size_t, std::vector<int>> b;
    b[3] = {};
    b[4] = {-8};
    b[5] = {-8, 1};
    b[6] = {9, 11, 13};
    b[7] = {4, 7, 10, 13};
    b[8] = {7, 8, 10, 11, 12};
    b[9] = {3, 4, 6, 7, 11, 13};
    b[10] = b[9];
    b[10].push_back(9);
    b[11] = {2, 5, 6, 7, 8, 9, 10, 12};
    b[12] = {3, -8, -9, -10, 11, 12, 1, 3, 10};
    b[13] = b[12];
    b[13].push_back(13);
    b[14] = b[13];
    b[14].push_back(2);
    b[15] = {1, 2, 3, 4, 6, 7, 8, -10, -11, 12, 6, 7};
    b[16] = b[15];
    b[16].push_back(13);
    b[17] = b[16];
    b[17].push_back(9);
    return b;
  }();
  return bases;
}

inline TritMatrix dim3_base_matrix(std::size_t n) {
  const auto& cols = dim3_bases().at(n);
  const SimplexFamily s3 = simplex(3);
  TritMatrix g = TritMatrix::identity(3);
  std::vector<TritVector> rows = g.row_vectors();
  for (auto& r : rows) {
    TritVector wide(n);
    for (std::size_t c = 0; c < 3; ++c) wide.set(c, r.at(c));
    r = wide;
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const int label = cols[j];
    const TritVector beta = s3.column(static_cast<std::size_t>(label < 0 ? -label : label));
    for (std::size_t r = 0; r < 3; ++r) rows[r].set(3 + j, label < 0 ? beta.at(r) * Trit(2) : beta.at(r));
  }
  return TritMatrix(std::move(rows), n);
}

}  // namespace detail

// Bases of length 3..17 as listed; longer codes take the base of length
// b in [5, 17] with b = n (mod 13) and append (n - b) / 13 copies of S_3.
inline LinearCode dim3_code(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dim3_code: n must be >= 3");
  if (n <= 17) return LinearCode(detail::dim3_base_matrix(n));
  std::size_t b = n % 13;
  while (b < 5) b += 13;
  return juxtapose(LinearCode(detail::dim3_base_matrix(b)), simplex(3).matrix, (n - b) / 13);
}

// --------------------------------------------------------------- recipes

enum class PaperMatch { exact, paper_typo_flagged, derived_standin };

inline const char* to_string(PaperMatch m) {
  switch (m) {
    case PaperMatch::exact: return "exact";
    case PaperMatch::paper_typo_flagged: return "paper-typo-flagged";
    case PaperMatch::derived_standin: return "derived-standin";
  }
  return "?";
}

struct RecipeStep {
  enum class Op { systematic, named_generator, standin, parent, hstack_named, shorten, puncture, dual };
  Op op;
  std::string arg;  // matrix id, stand-in id or parent recipe id
  CoordSet coords;

  [[nodiscard]] std::string describe() const {
    switch (op) {
      case Op::systematic: return "[I|" + arg + "]";
      case Op::named_generator: return "[I|" + arg + "] (block read as the right part)";
      case Op::standin: return "standin:" + arg;
      case Op::parent: return arg;
      case Op::hstack_named: return "append " + arg;
      case Op::shorten: return "shorten {" + coords.to_string() + "}";
      case Op::puncture: return "puncture {" + coords.to_string() + "}";
      case Op::dual: return "dual";
    }
    return "?";
  }
};

struct Expected {
  std::size_t n = 0, k = 0, d = 0;
  bool is_lcd = true;
};

struct Recipe {
  std::string id;
  std::vector<RecipeStep> steps;
  Expected expected;      // parameters the construction is stated to have
  PaperMatch match = PaperMatch::exact;
  std::string note;       // erratum or stand-in remark, empty when exact
  std::optional<Expected> actual;  // set only when verification refutes the stated claim

  [[nodiscard]] std::string provenance() const {
    std::string s;
    for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? " -> " : "") + steps[i].describe();
    return s;
  }
};

namespace detail {

using Op = RecipeStep::Op;

inline RecipeStep sys(std::string id) { return {Op::systematic, std::move(id), {}}; }
inline RecipeStep standin_step(std::string id) { return {Op::standin, std::move(id), {}}; }
inline RecipeStep from(std::string id) { return {Op::parent, std::move(id), {}}; }
inline RecipeStep append(std::string id) { return {Op::hstack_named, std::move(id), {}}; }
inline RecipeStep shorten_on(CoordSet s) { return {Op::shorten, {}, std::move(s)}; }
inline RecipeStep puncture_on(CoordSet s) { return {Op::puncture, {}, std::move(s)}; }
inline RecipeStep dual_step() { return {Op::dual, {}, {}}; }

inline std::vector<Recipe> build_recipe_table() {
  std::vector<Recipe> r;
  const auto add = [&](std::string id, std::vector<RecipeStep> steps, Expected e, PaperMatch m = PaperMatch::exact,
                       std::string note = {}) { r.push_back({std::move(id), std::move(steps), e, m, std::move(note), {}}); };

  add("C_20_11_6", {sys("A_11_9")}, {20, 11, 6});
  add("C_19_10_6", {from("C_20_11_6"), shorten_on({3})}, {19, 10, 6});
  add("C_18_9_6", {from("C_20_11_6"), shorten_on({2, 11})}, {18, 9, 6});
  add("C_17_8_6", {from("C_20_11_6"), shorten_on({1, 2, 4})}, {17, 8, 6});

  add("C_23_13_6", {sys("A_13_10")}, {23, 13, 6, false});
  add("C_20_10_6", {from("C_23_13_6"), shorten_on({1, 4, 11})}, {20, 10, 6});
  add("C_19_9_6", {from("C_23_13_6"), shorten_on({3, 4, 9, 12})}, {19, 9, 6});
  add("C_18_8_6", {from("C_23_13_6"), shorten_on({1, 8, 9, 12, 13})}, {18, 8, 6});
  add("C_17_7_6", {from("C_23_13_6"), shorten_on({4, 6, 8, 10, 11, 12})}, {17, 7, 6});

  for (const auto& s : standin_table()) {
    add(s.id, {standin_step(s.id)}, {s.n, s.k, s.d}, PaperMatch::derived_standin, s.note);
    if (!s.dual_id.empty())
      add(s.dual_id, {from(s.id), dual_step()}, {s.n, s.n - s.k, s.dual_d}, PaperMatch::derived_standin,
          "dual of a search-recovered stand-in");
  }

  const std::string standin_chain = "derived from a search-recovered stand-in";
  add("C_14_5_7", {from("C_15_6_7"), shorten_on({6})}, {14, 5, 7}, PaperMatch::derived_standin, standin_chain);
  add("C_13_4_7", {from("C_15_6_7"), shorten_on({1, 2})}, {13, 4, 7}, PaperMatch::derived_standin, standin_chain);
  add("C_13_5_6", {from("C_14_5_7"), puncture_on({1})}, {13, 5, 6}, PaperMatch::derived_standin, standin_chain);
  add("C_19_11_6", {from("C_20_12_6"), shorten_on({3})}, {19, 11, 6}, PaperMatch::derived_standin, standin_chain);
  add("C_18_10_6", {from("C_20_12_6"), shorten_on({2, 11})}, {18, 10, 6}, PaperMatch::derived_standin, standin_chain);
  add("C_17_9_6", {from("C_20_12_6"), shorten_on({8, 9, 10})}, {17, 9, 6}, PaperMatch::derived_standin, standin_chain);
  add("C_18_6_8", {from("C_20_8_8"), shorten_on({3, 4})}, {18, 6, 8}, PaperMatch::derived_standin, standin_chain);
  add("C_17_5_8", {from("C_20_8_8"), shorten_on({2, 4, 5})}, {17, 5, 8}, PaperMatch::derived_standin, standin_chain);
  add("C_16_4_9", {from("C_20_8_8"), shorten_on({1, 3, 7, 8})}, {16, 4, 9}, PaperMatch::derived_standin, standin_chain);

  add("C_21_4_12", {sys("A_4_17")}, {21, 4, 12});
  add("C_20_4_11", {from("C_21_4_12"), puncture_on({1})}, {20, 4, 11});
  add("C_19_4_11", {from("C_21_4_12"), puncture_on({7, 16})}, {19, 4, 11});
  add("C_18_4_10", {from("C_21_4_12"), puncture_on({1, 2, 7})}, {18, 4, 10});
  add("C_17_4_9", {from("C_21_4_12"), puncture_on({1, 2, 7, 8})}, {17, 4, 9});
  add("C_15_4_8", {from("C_21_4_12"), puncture_on({1, 2, 3, 5, 7, 8})}, {15, 4, 8});

  add("C_17_6_8", {sys("A_6_11")}, {17, 6, 8});
  add("C_16_6_7", {from("C_17_6_8"), puncture_on({1})}, {16, 6, 7});
  add("C_16_5_8", {from("C_17_6_8"), shorten_on({2})}, {16, 5, 8});
  add("C_15_5_7", {from("C_16_5_8"), puncture_on({1})}, {15, 5, 7});

  add("C_17_5_9", {sys("A_5_12")}, {17, 5, 9});
  add("C_18_5_9", {{Op::named_generator, "G_A_13", {}}}, {18, 5, 9}, PaperMatch::paper_typo_flagged,
      "the 5x13 block printed as G_{A,13} serves as A_{5,13}; printed enumerator is internally inconsistent");
  add("C_19_5_10", {from("C_17_5_9"), append("B_5_2")}, {19, 5, 10}, PaperMatch::paper_typo_flagged,
      "parameters hold; the printed enumerator differs from the one the printed block B generates");
  add("C_20_5_11", {sys("A_5_15")}, {20, 5, 11});
  add("C_20_9_8", {sys("A_9_11")}, {20, 9, 8}, PaperMatch::paper_typo_flagged,
      "stated as LCD, but [I_9|A_9_11] has a hull of dimension 8");
  r.back().actual = Expected{20, 9, 8, false};

  add("C_20_15_3", {from("C_20_5_11"), dual_step()}, {20, 15, 3});
  add("C_19_14_3", {from("C_20_15_3"), shorten_on({10})}, {19, 14, 3});
  add("C_18_13_3", {from("C_20_15_3"), shorten_on({9, 13})}, {18, 13, 3});
  add("C_17_12_3", {from("C_20_15_3"), shorten_on({7, 9, 12})}, {17, 12, 3});
  return r;
}

}  // namespace detail

inline const std::vector<Recipe>& recipe_table() {
  static const std::vector<Recipe> table = detail::build_recipe_table();
  return table;
}

inline const Recipe& recipe(const std::string& id) {
  for (const auto& r : recipe_table())
    if (r.id == id) return r;
  throw std::invalid_argument("unknown paper code id '" + id + "'");
}

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runs the steps without checking the outcome.
inline LinearCode execute_recipe(const Recipe& rec) {
  std::optional<LinearCode> cur;
  for (const auto& step : rec.steps) {
    switch (step.op) {
      case RecipeStep::Op::systematic:
      case RecipeStep::Op::named_generator: {
        const TritMatrix a = named_matrix(step.arg);
        cur = LinearCode(hstack(TritMatrix::identity(a.rows()), a));
        break;
      }
      case RecipeStep::Op::standin: cur = LinearCode(TritMatrix::from_strings(standin(step.arg).rows)); break;
      case RecipeStep::Op::parent: cur = execute_recipe(recipe(step.arg)); break;
      case RecipeStep::Op::hstack_named: cur = LinearCode(hstack(cur->generator(), named_matrix(step.arg))); break;
      case RecipeStep::Op::shorten: cur = shorten(*cur, step.coords); break;
      case RecipeStep::Op::puncture: cur = puncture(*cur, step.coords); break;
      case RecipeStep::Op::dual: cur = dual(*cur); break;
    }
  }
  if (!cur) throw std::logic_error("recipe " + rec.id + " has no steps");
  return *cur;
}

struct VerifiedCode {
  LinearCode code;
  std::size_t n = 0, k = 0, d = 0;
  bool is_lcd = false;
};

inline std::string describe_parameters(std::size_t n, std::size_t k, std::size_t d, bool lcd) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]" + (lcd ? " LCD" : " not LCD");
}

// Executes and verifies a recipe. A recipe whose stated claim is refuted is
// checked against its recorded actual parameters instead.
inline VerifiedCode verify_recipe(const Recipe& rec, const Budget& budget = {}) {
  LinearCode c = execute_recipe(rec);
  VerifiedCode v{c, c.n(), c.k(), min_distance(c, budget), gram_report(c).is_lcd};
  const Expected want = rec.actual.value_or(rec.expected);
  if (v.n != want.n || v.k != want.k || v.d != want.d || v.is_lcd != want.is_lcd)
    throw VerificationError(rec.id + ": computed " + describe_parameters(v.n, v.k, v.d, v.is_lcd) + ", expected " +
                            describe_parameters(want.n, want.k, want.d, want.is_lcd));
  return v;
}

inline LinearCode paper_code(const std::string& id) { return verify_recipe(recipe(id)).code; }

}  // namespace ternlcd
