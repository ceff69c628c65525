#pragma once

// Canonical text form of a generator matrix:
//   ternary-code v1
//   n=<n> k=<k>
//   <k rows of n digits>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ternlcd/code.hpp"

namespace ternlcd {

struct CodeFileError : std::runtime_error {
  CodeFileError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline constexpr const char* kCodeFileMagic = "ternary-code v1";

inline std::string to_code_file(const TritMatrix& g) {
  std::string out = std::string(kCodeFileMagic) + "\nn=" + std::to_string(g.cols()) + " k=" + std::to_string(g.rows()) + "\n";
  for (const auto& r : g.to_strings()) out += r + "\n";
  return out;
}

inline std::string to_code_file(const LinearCode& c) { return to_code_file(c.generator()); }

inline TritMatrix parse_code_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  const auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!next() || line != kCodeFileMagic) throw CodeFileError(1, "expected '" + std::string(kCodeFileMagic) + "'");
  if (!next()) throw CodeFileError(2, "missing 'n=<n> k=<k>' header");
  std::size_t n = 0, k = 0;
  {
    unsigned long nn = 0, kk = 0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "n=%lu k=%lu%c", &nn, &kk, &tail) != 2 || line.find("n=") != 0)
      throw CodeFileError(2, "malformed header '" + line + "'");
    n = nn;
    k = kk;
  }
  if (n == 0 || k == 0 || k > n) throw CodeFileError(2, "need 1 <= k <= n");
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < k; ++i) {
    if (!next()) throw CodeFileError(lineno + 1, "missing generator row " + std::to_string(i + 1));
    if (line.size() != n) throw CodeFileError(lineno, "row has " + std::to_string(line.size()) + " digits, expected " + std::to_string(n));
    for (char ch : line)
      if (ch < '0' || ch > '2') throw CodeFileError(lineno, std::string("invalid digit '") + ch + "'");
    rows.push_back(line);
  }
  while (next())
    if (!line.empty()) throw CodeFileError(lineno, "unexpected trailing content");
  return TritMatrix::from_strings(rows);
}

inline LinearCode load_code_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  TritMatrix g = parse_code_file(ss.str());
  if (rank(g) != g.rows()) throw CodeFileError(3, "generator rows are linearly dependent");
  return LinearCode(std::move(g));
}

}  // namespace ternlcd
