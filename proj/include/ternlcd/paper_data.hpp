#pragma once

// Published data that constructions are checked against: printed weight
// enumerators and the distance tables, transcribed verbatim.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ternlcd/code.hpp"

namespace ternlcd {

struct PrintedEnumerator {
  std::string label;   // e.g. "W_{5,20}"
  std::size_t n, k;
  std::string text;    // as printed, e.g. "1+48z^11+44z^12+..."
  std::string source;  // recipe id, or "dim3:<n>"
  std::string note;    // known inconsistency beyond what parsing detects
};

inline const std::vector<PrintedEnumerator>& printed_enumerators() {
  static const std::vector<PrintedEnumerator> table = {
      {"W_{3,5}", 5, 3, "1+6z^2+8z^3+6z^4+6z^5", "dim3:5", ""},
      {"W_{3,6}", 6, 3, "1+6z^3+12z^4+6z^5+2z^6", "dim3:6", ""},
      {"W_{3,7}", 7, 3, "1+12z^4+6z^5+8z^6", "dim3:7", ""},
      {"W_{3,8}", 8, 3, "1+2z^4+12z^5+8z^6+4z^7", "dim3:8", ""},
      {"W_{3,9}", 9, 3, "1+6z^5+8z^6+6z^5+12z^7", "dim3:9", ""},
      {"W_{3,10}", 10, 3, "1+8z^6+12z^7+6z^8", "dim3:10", ""},
      {"W_{3,11}", 11, 3, "1+6z^6+4z^7+12z^8+2z^9+2z^10", "dim3:11", ""},
      {"W_{3,12}", 12, 3, "1+10z^7+4z^8+8z^9+2z^10+2z^11", "dim3:12", ""},
      {"W_{3,13}", 13, 3, "1+12z^8+6z^9+6z^10+2z^12", "dim3:13", ""},
      {"W_{3,14}", 14, 3, "1+4z^8+8z^9+10z^10+2z^11+2z^13", "dim3:14", ""},
      {"W_{3,15}", 15, 3, "1+8z^9+4z^10+12z^11+2z^13", "dim3:15", ""},
      {"W_{3,16}", 16, 3, "1+10z^10+6z^11+8z^12+2z^13", "dim3:16", ""},
      {"W_{3,17}", 17, 3, "1+12z^11+8z^12+8z^12+6z^13", "dim3:17", ""},
      {"W_{5,14}", 14, 5, "1+34z^7+56z^8+46z^9+36z^10+34z^11+34z^12+2z^13", "C_14_5_7", ""},
      {"W_{4,13}", 13, 4, "1+16z^7+22z^8+20z^9+12z^10+8z^11+2z^13", "C_13_4_7", ""},
      {"W_{5,13}", 13, 5, "1+18z^6+44z^7+56z^8+52z^9+28z^10+34z^11+10z^12", "C_13_5_6", ""},
      {"W_{11,20}", 20, 11,
       "1+314z^6+696z^7+1982z^8+4996z^9+10316z^10+17520z^11+25260z^12+30594z^13+30804z^14+25354z^15+16968z^16+"
       "8422z^17+3124z^18+718z^19+78z^20",
       "C_20_11_6", ""},
      {"W_{10,19}", 19, 10,
       "1+204z^6+454z^7+1150z^8+2574z^9+4988z^10+7746z^11+9822z^12+10734z^13+9462z^14+6588z^15+3548z^16+1406z^17+"
       "332z^18+40z^19",
       "C_19_10_6", ""},
      {"W_{9,18}", 18, 9,
       "1+136z^6+264z^7+622z^8+1390z^9+2190z^10+3186z^11+3606z^12+3414z^13+2670z^14+1406z^15+612z^16+164z^17+22z^18",
       "C_18_9_6", ""},
      {"W_{8,17}", 17, 8,
       "1+128z^6+208z^7+502z^8+876z^9+1252z^10+1354z^11+1162z^12+68z^13+304z^14+74z^15+12z^16", "C_17_8_6", ""},
      {"W_{10,20}", 20, 10,
       "1+324z^6+524z^7+1648z^8+3892z^9+6798z^10+9906z^11+11610z^12+10698z^13+7698z^14+3978z^15+1582z^16+350z^17+"
       "40z^18",
       "C_20_10_6", ""},
      {"W_{9,19}", 19, 9,
       "1+212z^6+332z^7+930z^8+1886z^9+3012z^10+3990z^11+3768z^12+2970z^13+1704z^14+694z^15+166z^16+18z^17",
       "C_19_9_6", ""},
      {"W_{8,18}", 18, 8,
       "1+132z^6+196z^7+514z^8+870z^9+1252z^10+1366z^11+1144z^12+706z^13+280z^14+94z^15+6z^16", "C_18_8_6", ""},
      {"W_{7,17}", 17, 7, "1+84z^6+110z^7+250z^8+380z^9+488z^10+424z^11+258z^12+158z^13+28z^14+6z^15", "C_17_7_6",
       ""},
      {"W_{11,19}", 19, 11,
       "1+468z^6+840z^7+2882z^8+7284z^9+14408z^10+23646z^11+31296z^12+34140z^13+28896z^14+19248z^15+9822z^16+"
       "3382z^17+752z^18+82z^19",
       "C_19_11_6", ""},
      {"W_{10,18}", 18, 10,
       "1+316z^6+538z^7+1680z^8+3812z^9+6810z^10+9972z^11+11574z^12+10740z^13+757z^14+4106z^15+1514z^16+372z^17+"
       "36z^18",
       "C_18_10_6", ""},
      {"W_{9,17}", 17, 9,
       "1+212z^6+328z^7+928z^8+1910z^9+3012z^10+3948z^11+3774z^12+2982z^13+1740z^14+664z^15+158z^16+26z^17",
       "C_17_9_6", ""},
      {"W_{6,18}", 18, 6, "1+18z^8+48z^9+108z^10+150z^11+106z^12+120z^13+84z^14+70z^15+24z^16", "C_18_6_8_enum", ""},
      {"W_{5,17}a", 17, 5, "1+8z^8+28z^9+46z^10+58z^11+40z^12+24z^13+24z^14+12z^15+2z^16", "C_17_5_8_enum", ""},
      {"W_{4,16}", 16, 4, "1+18z^9+18z^10+22z^11+12z^12+6z^13+2z^14+2z^15", "C_16_4_9", ""},
      {"W_{4,20}", 20, 4, "1+6z^11+18z^12+22z^13+14z^14+12z^15+2z^16+4z^17+2z^18", "C_20_4_11", ""},
      {"W_{4,19}", 19, 4, "1+16z^11+24z^12+22z^13+6z^14+6z^15+2z^16+2z^17+2z^18", "C_19_4_11", ""},
      {"W_{4,18}", 18, 4, "1+10z^10+18z^11+28z^12+12z^13+6z^14+2z^15+2z^16+2z^18", "C_18_4_10", ""},
      {"W_{4,17}", 17, 4, "1+4z^9+20z^10+24z^11+14z^12+10z^13+4z^14+2z^15+2z^17", "C_17_4_9", ""},
      {"W_{4,15}", 15, 4, "1+12z^8+20z^9+20z^10+12z^11+10z^12+4z^13+2z^15", "C_15_4_8", ""},
      {"W_{4,21}", 21, 4, "1+12z^12+18z^13+20z^14+18z^15+4z^16+4z^17+2z^18+2z^19", "C_21_4_12", ""},
      {"W_{6,17}", 17, 6, "1+52z^8+82z^9+124z^10+136z^11+110z^12+124z^13+64z^14+32z^15+4z^16", "C_17_6_8", ""},
      {"W_{6,16}", 16, 6, "1+24z^7+76z^8+102z^9+140z^10+136z^11+118z^12+86z^13+40z^14+4z^15+2z^16", "C_16_6_7", ""},
      {"W_{5,16}", 16, 5, "1+20z^8+44z^9+64z^10+42z^11+28z^12+26z^13+10z^14+8z^15", "C_16_5_8", ""},
      {"W_{5,15}", 15, 5, "1+6z^7+46z^8+52z^9+50z^10+36z^11+28z^12+16z^13+8z^14", "C_15_5_7", ""},
      {"W_{5,17}b", 17, 5, "1+34z^9+60z^10+48z^11+36z^12+28z^13+22z^14+10z^15+2z^16+2z^17", "C_17_5_9", ""},
      {"W_{5,18}", 18, 5, "1+20z^9+36z^10+48z^11+36z^12+28z^13+22z^14+10z^15+2z^16+2z^17", "C_18_5_9", ""},
      {"W_{5,19}", 19, 5, "1+34z^10+44z^11+46z^12+40z^13+24z^14+32z^15+14z^16+4z^17+2z^18+2z^19", "C_19_5_10_enum",
       "the printed B block gives a different enumerator"},
      {"W_{5,20}", 20, 5, "1+48z^11+44z^12+50z^13+32z^14+28z^15+22z^16+10z^17+8z^18", "C_20_5_11", ""},
      {"W_{9,20}", 20, 9, "1+390z^8+520z^9+3840z^11+2880z^12+64z^14+32z^15+4z^16", "C_20_9_8", ""},
  };
  return table;
}

struct ParsedEnumerator {
  std::vector<std::uint64_t> counts;  // summed over repeated exponents
  bool repeated_exponent = false;
};

inline ParsedEnumerator parse_enumerator_text(const std::string& text, std::size_t n) {
  ParsedEnumerator p;
  p.counts.assign(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    if (term.empty()) throw std::invalid_argument("empty term in '" + text + "'");
    const auto z = term.find('z');
    std::uint64_t coef = 1;
    std::size_t exp = 0;
    if (z == std::string::npos) {
      coef = std::stoull(term);
    } else {
      if (z > 0) coef = std::stoull(term.substr(0, z));
      exp = 1;
      if (const auto caret = term.find('^'); caret != std::string::npos) exp = std::stoul(term.substr(caret + 1));
    }
    if (exp > n) throw std::invalid_argument("exponent exceeds length in '" + text + "'");
    if (seen[exp]) p.repeated_exponent = true;
    seen[exp] = true;
    p.counts[exp] += coef;
  }
  return p;
}

// Why a printed enumerator cannot be the enumerator of any [n,k] code, or
// nullopt if it passes the basic checks.
inline std::optional<std::string> enumerator_inconsistency(const PrintedEnumerator& e) {
  const ParsedEnumerator p = parse_enumerator_text(e.text, e.n);
  if (p.repeated_exponent) return "an exponent is printed twice";
  const WeightEnumerator w(p.counts);
  if (w.total() != pow3(static_cast<unsigned>(e.k)))
    return "coefficients sum to " + std::to_string(w.total()) + ", not 3^" + std::to_string(e.k);
  if (!w.is_consistent(e.k)) return "a nonzero weight has an odd count";
  return std::nullopt;
}

// One cell of the final bounds table.
struct BoundsCell {
  std::size_t n, k;
  std::size_t lower, upper;
  std::string text;
};

namespace detail {

// Rows of the final bounds table: n, then the entries for k = 1, 2, ...
// Blank cells are omitted; rows 3 and 4 stop short of k = n - 1.
inline const std::vector<std::string>& bounds_rows() {
  static const std::vector<std::string> rows = {
      "3 2",
      "4 4 2",
      "5 5 3 2 2",
      "6 5 4 3 2 1",
      "7 7 4 4 3 2 2",
      "8 8 5 4 4 3 2 2",
      "9 8 6 5 4 3 3 2 1",
      "10 10 7 6 5 4 3 3 2 2",
      "11 11 7 6 6 5 4 3 2 2 2",
      "12 11 8 7 6 6 5 4 3 2 2 1",
      "13 13 9 8 7 6 6 5 4 3 2 2 2",
      "14 13 10 8 8 7 6 6 5 4 3 2 2 2",
      "15 15 10 9 8 7 7 6 5 4 4 3 2 2 1",
      "16 15 11 10 9 8 7 6 6 5 4 4 3 2 2 2",
      "17 17 12 11 9 9 8 6-7 6-7 6-7 5 4 3 3 2 2 2",
      "18 17 13 11 10 9 8-9 7-8 6-7 6-7 6 5 4 3 3 2 2 1",
      "19 19 13 12 11 10 8-9 8-9 7-8 6-7 6 6 5 4 3 3 2 2 2",
      "20 19 14 13 11 11 9-10 8-9 8-9 7-8 6 6 6 5 4 3 3 2 2 2",
  };
  return rows;
}

}  // namespace detail

inline const std::vector<BoundsCell>& table_bounds_main() {
  static const std::vector<BoundsCell> cells = [] {
    std::vector<BoundsCell> out;
    for (const auto& row : detail::bounds_rows()) {
      std::istringstream in(row);
      std::size_t n = 0;
      in >> n;
      std::string tok;
      for (std::size_t k = 1; in >> tok; ++k) {
        const auto dash = tok.find('-');
        const std::size_t lo = std::stoul(tok.substr(0, dash));
        const std::size_t hi = dash == std::string::npos ? lo : std::stoul(tok.substr(dash + 1));
        out.push_back({n, k, lo, hi, tok});
      }
    }
    return out;
  }();
  return cells;
}

inline std::optional<BoundsCell> paper_bounds(std::size_t n, std::size_t k) {
  for (const auto& c : table_bounds_main())
    if (c.n == n && c.k == k) return c;
  return std::nullopt;
}

// Bounds cells that disagree with the k = 1 formula, or with an exhaustive
// search that has to be rerun before the cell is flagged.
struct TableErratum {
  std::size_t n, k;
  std::size_t corrected;
  std::string reason;
  bool needs_refutation = false;
};

inline const std::vector<TableErratum>& table_bounds_errata() {
  static const std::vector<TableErratum> e = {
      {14, 1, 14, "the k = 1 formula gives n = 14 for 3 does not divide n"},
      {15, 1, 14, "the k = 1 formula gives n - 1 = 14 for 3 | n"},
      {16, 1, 16, "the k = 1 formula gives n = 16 for 3 does not divide n"},
      {20, 1, 20, "the k = 1 formula gives n = 20 for 3 does not divide n"},
      {12, 5, 5, "exhaustive parity-check search finds no LCD [12,5,6] code", true},
  };
  return e;
}

// d = 3s + offset for n = 4s + r, indexed by r.
struct Dim2Table {
  std::array<int, 4> offset;
};

// Optimal [n,2] codes, LCD or not.
inline constexpr Dim2Table table_dim2_optimal{{0, 0, 1, 2}};
// Best LCD [n,2] codes.
inline constexpr Dim2Table table_dim2_lcd{{-1, 0, 1, 1}};

inline std::size_t dim2_table_value(const Dim2Table& t, std::size_t n) {
  return static_cast<std::size_t>(3 * static_cast<long>(n / 4) + t.offset[n % 4]);
}

// Dimension-3 tables: explicit values for 3 <= n <= 13, then d = 9s + offset
// for n = 13s + t with t = 1..12 as printed. n = 13s is stated in the text
// as 9s - 1.
inline constexpr std::array<std::size_t, 11> table_dim3_small = {1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8};
inline constexpr std::array<int, 13> table_dim3_printed_offset = {-1, -1, 0, 1, 1, 2, 3, 4, 4, 5, 6, 6, 7};

inline std::size_t dim3_table_value(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dimension-3 table starts at n = 3");
  if (n <= 13) return table_dim3_small[n - 3];
  return static_cast<std::size_t>(9 * static_cast<long>(n / 13) + table_dim3_printed_offset[n % 13]);
}

// The 13s+4 column is printed as 9s+1; the n = 17 construction and the final
// table give 11 = 9s+2, and stacking simplex blocks carries that to every s.
inline constexpr int kDim3Erratum13s4Offset = 2;

}  // namespace ternlcd
