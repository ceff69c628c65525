#pragma once

// Verified code records, their on-disk form (one code file per record plus a
// JSON manifest), the d_LCD(n,k) bounds table and its comparison with the
// published table.

#include <json.hpp>

#include <filesystem>
#include <algorithm>
#include <functional>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ternlcd/codefile.hpp"
#include "ternlcd/constructions.hpp"
#include "ternlcd/paper_data.hpp"
#include "ternlcd/search.hpp"
#include "ternlcd/sha256.hpp"

namespace ternlcd {

struct CodeRecord {
  std::string id;
  LinearCode code;
  std::size_t n = 0, k = 0, d = 0;
  bool is_lcd = false;
  std::string provenance;
  WeightEnumerator enumerator;
  PaperMatch paper_match = PaperMatch::exact;
};

struct RegistryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumerates whichever of the code and its dual is smaller.
inline WeightEnumerator full_enumerator(const LinearCode& c, const Budget& budget = {}) {
  if (c.k() == c.n()) {
    std::vector<std::uint64_t> counts(c.n() + 1);
    for (std::size_t w = 0; w <= c.n(); ++w) {
      std::uint64_t binom = 1;
      for (std::size_t i = 0; i < w; ++i) binom = binom * (c.n() - i) / (i + 1);
      counts[w] = binom << w;
    }
    return WeightEnumerator(std::move(counts));
  }
  if (c.k() <= c.n() - c.k()) return weight_enumerator(c, budget);
  return macwilliams_dual_enumerator(weight_enumerator(dual(c), budget), c.n(), c.n() - c.k());
}

inline CodeRecord make_record(std::string id, LinearCode c, std::string provenance, PaperMatch match,
                              const Budget& budget = {}) {
  CodeRecord r{std::move(id), c, c.n(), c.k(), 0, gram_report(c).is_lcd, std::move(provenance), full_enumerator(c, budget),
               match};
  r.d = r.enumerator.min_distance();
  return r;
}

inline constexpr std::size_t kRegistryMaxLength = 20;

struct RegistrySource {
  std::string id;
  std::string provenance;
  PaperMatch match;
  std::function<LinearCode()> build;
  std::optional<Expected> expected;  // checked when present
};

inline std::vector<RegistrySource> registry_sources(std::size_t max_n = kRegistryMaxLength) {
  std::vector<RegistrySource> out;
  const auto sz = [](std::size_t v) { return std::to_string(v); };
  for (std::size_t k = 2; k <= kSimplexMaxK && simplex(k).length() <= max_n; ++k)
    out.push_back({"simplex_" + sz(k), "simplex(" + sz(k) + ")", PaperMatch::exact,
                   [k] { return LinearCode(simplex(k).matrix); }, std::nullopt});
  for (std::size_t n = 2; n <= max_n; ++n)
    out.push_back({"dim1_" + sz(n), "dim1_code(" + sz(n) + ")", PaperMatch::exact, [n] { return dim1_code(n); },
                   Expected{n, 1, n % 3 == 0 ? n - 1 : n, true}});
  for (std::size_t n = 3; n <= max_n; ++n)
    out.push_back({"codim1_" + sz(n), "codim1_code(" + sz(n) + ")", PaperMatch::exact, [n] { return codim1_code(n); },
                   Expected{n, n - 1, n % 3 == 0 ? std::size_t{1} : std::size_t{2}, true}});
  for (std::size_t n = 4; n <= max_n; ++n)
    out.push_back({"codim2_" + sz(n), "codim2_code(" + sz(n) + ")", PaperMatch::exact, [n] { return codim2_code(n); },
                   Expected{n, n - 2, 2, true}});
  for (std::size_t n = 4; n <= max_n; ++n)
    out.push_back({"dim2_" + sz(n), "dim2_code(" + sz(n) + ")", PaperMatch::exact, [n] { return dim2_code(n); },
                   Expected{n, 2, dim2_distance(n), true}});
  for (std::size_t n = 3; n <= max_n; ++n)
    out.push_back({"dim3_" + sz(n), "dim3_code(" + sz(n) + ")", PaperMatch::exact, [n] { return dim3_code(n); },
                   Expected{n, 3, dim3_distance(n), true}});
  for (const auto& rec : recipe_table()) {
    std::string prov = rec.provenance();
    out.push_back({rec.id, std::move(prov), rec.match, [&rec] { return execute_recipe(rec); },
                   rec.actual.value_or(rec.expected)});
  }
  return out;
}

// Builds and verifies every record. Records are independent and built in
// parallel; the order of the result follows registry_sources().
inline std::vector<CodeRecord> build_registry(const Budget& budget = {}, std::size_t max_n = kRegistryMaxLength) {
  const auto sources = registry_sources(max_n);
  std::vector<std::optional<CodeRecord>> slots(sources.size());
  std::vector<std::string> errors(sources.size());
  for_each_chunk(sources.size(), static_cast<unsigned>(sources.size()), budget.threads,
                 [&](unsigned i, std::uint64_t, std::uint64_t) {
                   const auto& s = sources[i];
                   try {
                     CodeRecord r = make_record(s.id, s.build(), s.provenance, s.match, budget);
                     if (s.expected) {
                       const Expected& e = *s.expected;
                       if (r.n != e.n || r.k != e.k || r.d != e.d || r.is_lcd != e.is_lcd)
                         errors[i] = s.id + ": computed " + describe_parameters(r.n, r.k, r.d, r.is_lcd) + ", expected " +
                                     describe_parameters(e.n, e.k, e.d, e.is_lcd);
                     }
                     slots[i] = std::move(r);
                   } catch (const std::exception& ex) {
                     errors[i] = s.id + ": " + ex.what();
                   }
                 });
  std::vector<CodeRecord> out;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (!errors[i].empty()) throw RegistryError(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

// Adds one record per exhaustive search result, for every n <= max_n and
// 1 <= k < n with k(n-k) <= max_exponent.
inline std::vector<CodeRecord> oracle_records(std::size_t max_n, const SearchBudget& budget = {}) {
  std::vector<CodeRecord> out;
  for (std::size_t n = 2; n <= max_n; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      if (k * (n - k) > budget.max_exponent) continue;
      const SearchResult r = exhaustive_best_lcd(n, k, budget);
      if (!r.witness) continue;
      out.push_back(make_record("oracle_" + std::to_string(n) + "_" + std::to_string(k), LinearCode(*r.witness),
                                "exhaustive_best_lcd(" + std::to_string(n) + "," + std::to_string(k) + ")",
                                PaperMatch::derived_standin));
    }
  return out;
}

inline const std::string kDerivedPrefix = "derived_";

// Single-coordinate puncturings and shortenings of LCD records, kept when
// they are LCD and beat every record of the same [n,k] with n <= max_n.
// Repeats until nothing improves. Candidates are tried in record order and
// coordinate order, and only strict improvements replace a cell, so the
// result is deterministic.
inline std::vector<CodeRecord> derive_closure(const std::vector<CodeRecord>& records, std::size_t max_n,
                                              const Budget& budget = {}) {
  using Cell = std::pair<std::size_t, std::size_t>;
  std::map<Cell, std::size_t> best;
  for (const auto& r : records)
    if (r.is_lcd && r.n <= max_n) best[{r.n, r.k}] = std::max(best[{r.n, r.k}], r.d);
  std::map<Cell, CodeRecord> derived;
  std::vector<const CodeRecord*> frontier;
  for (const auto& r : records)
    if (r.is_lcd) frontier.push_back(&r);
  while (!frontier.empty()) {
    std::map<Cell, CodeRecord> round;
    for (const CodeRecord* src : frontier) {
      if (src->n < 3 || src->n - 1 > max_n) continue;
      for (std::size_t i = 1; i <= src->n; ++i) {
        for (const bool shortening : {false, true}) {
          if (shortening && src->k < 2) continue;
          if (!shortening && src->k >= src->n - 1) continue;
          const Cell cell{src->n - 1, shortening ? src->k - 1 : src->k};
          // Skip the work when the cell already meets the best possible
          // value: the Singleton bound, the published upper bound, and for
          // puncturing the source distance.
          std::size_t cap = cell.first - cell.second + 1;
          if (const auto pc = paper_bounds(cell.first, cell.second)) cap = std::min(cap, pc->upper);
          if (!shortening) cap = std::min(cap, src->d);
          if (const auto it = best.find(cell); it != best.end() && it->second >= cap) continue;
          std::optional<LinearCode> c;
          try {
            c = shortening ? shorten(src->code, CoordSet({i})) : puncture(src->code, CoordSet({i}));
          } catch (const TransformError&) {
            continue;
          }
          if (!is_lcd(*c)) continue;
          const std::size_t d = min_distance(*c, budget);
          const auto it = best.find(cell);
          if (it != best.end() && it->second >= d) continue;
          best[cell] = d;
          const std::string id = kDerivedPrefix + std::to_string(cell.first) + "_" + std::to_string(cell.second);
          const std::string root = src->id.rfind(kDerivedPrefix, 0) == 0 ? src->provenance : src->id;
          const std::string prov = root + (shortening ? " -> shorten {" : " -> puncture {") + std::to_string(i) + "}";
          round.insert_or_assign(cell, make_record(id, std::move(*c), prov, src->paper_match, budget));
        }
      }
    }
    frontier.clear();
    for (auto& [cell, rec] : round) derived.insert_or_assign(cell, std::move(rec));
    for (auto& [cell, rec] : round) frontier.push_back(&derived.at(cell));
  }
  std::vector<CodeRecord> out;
  for (auto& [cell, rec] : derived) out.push_back(std::move(rec));
  return out;
}

// ------------------------------------------------------------ persistence

inline std::string record_file_name(const CodeRecord& r) { return r.id + ".code"; }

inline nlohmann::json manifest_json(const std::vector<CodeRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records)
    arr.push_back({{"id", r.id},
                   {"file", record_file_name(r)},
                   {"n", r.n},
                   {"k", r.k},
                   {"d", r.d},
                   {"is_lcd", r.is_lcd},
                   {"provenance", r.provenance},
                   {"paper_match", to_string(r.paper_match)},
                   {"sha256", sha256_hex(to_code_file(r.code))}});
  return arr;
}

inline void write_file_atomic(const std::filesystem::path& path, const std::string& data) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw RegistryError("cannot write " + tmp.string());
    f << data;
    if (!f.flush()) throw RegistryError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline constexpr const char* kManifestName = "manifest.json";

// Code files first, the manifest last, so a reader never sees a manifest
// that points at missing files.
inline void export_registry(const std::vector<CodeRecord>& records, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& r : records) write_file_atomic(dir / record_file_name(r), to_code_file(r.code));
  write_file_atomic(dir / kManifestName, manifest_json(records).dump(2) + "\n");
}

inline PaperMatch parse_paper_match(const std::string& s) {
  for (PaperMatch m : {PaperMatch::exact, PaperMatch::paper_typo_flagged, PaperMatch::derived_standin})
    if (s == to_string(m)) return m;
  throw RegistryError("unknown paper_match '" + s + "'");
}

// Loads a registry directory, recomputing every derived quantity and
// rejecting any record whose file hash or stored parameters disagree.
inline std::vector<CodeRecord> import_registry(const std::filesystem::path& dir, const Budget& budget = {}) {
  std::ifstream mf(dir / kManifestName);
  if (!mf) throw RegistryError("no manifest in " + dir.string());
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(mf);
  } catch (const nlohmann::json::exception& e) {
    throw RegistryError(std::string("manifest: ") + e.what());
  }
  std::vector<CodeRecord> out;
  for (const auto& e : manifest) {
    const std::string id = e.at("id").get<std::string>();
    const std::filesystem::path file = dir / e.at("file").get<std::string>();
    std::ifstream f(file, std::ios::binary);
    if (!f) throw RegistryError(id + ": missing " + file.string());
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string text = ss.str();
    if (sha256_hex(text) != e.at("sha256").get<std::string>()) throw RegistryError(id + ": sha256 mismatch");
    const TritMatrix g = parse_code_file(text);
    if (rank(g) != g.rows()) throw RegistryError(id + ": generator rows are dependent");
    CodeRecord r = make_record(id, LinearCode(g), e.at("provenance").get<std::string>(),
                               parse_paper_match(e.value("paper_match", std::string("exact"))), budget);
    if (r.n != e.at("n").get<std::size_t>() || r.k != e.at("k").get<std::size_t>() ||
        r.d != e.at("d").get<std::size_t>() || r.is_lcd != e.at("is_lcd").get<bool>())
      throw RegistryError(id + ": stored parameters differ from recomputed " +
                          describe_parameters(r.n, r.k, r.d, r.is_lcd));
    out.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------------------ bounds

enum class BoundsStatus { tight, gap, missing_witness };

inline const char* to_string(BoundsStatus s) {
  switch (s) {
    case BoundsStatus::tight: return "tight";
    case BoundsStatus::gap: return "gap";
    case BoundsStatus::missing_witness: return "missing-witness";
  }
  return "?";
}

struct BoundsEntry {
  std::size_t n = 0, k = 0;
  std::size_t d_lower = 0, d_upper = 0;
  BoundsStatus status = BoundsStatus::missing_witness;
  std::string witness;  // id of the record attaining d_lower
};

inline std::vector<BoundsEntry> bounds_table(const std::vector<CodeRecord>& records, std::size_t max_n) {
  std::map<std::pair<std::size_t, std::size_t>, const CodeRecord*> best;
  for (const auto& r : records) {
    if (!r.is_lcd) continue;
    auto& slot = best[{r.n, r.k}];
    if (!slot || r.d > slot->d) slot = &r;
  }
  std::vector<BoundsEntry> out;
  for (std::size_t n = 2; n <= max_n; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      BoundsEntry e{n, k, 0, n - k + 1, BoundsStatus::missing_witness, {}};
      if (const auto cell = paper_bounds(n, k)) e.d_upper = cell->upper;
      if (const auto it = best.find({n, k}); it != best.end()) {
        e.d_lower = it->second->d;
        e.witness = it->second->id;
        e.status = e.d_lower >= e.d_upper ? BoundsStatus::tight : BoundsStatus::gap;
      }
      out.push_back(e);
    }
  return out;
}

enum class DiffStatus { ok, better, miss, typo_flag };

inline const char* to_string(DiffStatus s) {
  switch (s) {
    case DiffStatus::ok: return "OK";
    case DiffStatus::better: return "BETTER";
    case DiffStatus::miss: return "MISS";
    case DiffStatus::typo_flag: return "TYPO-FLAG";
  }
  return "?";
}

struct DiffCell {
  std::size_t n = 0, k = 0;
  std::string paper;  // cell text as printed
  std::size_t witnessed = 0;
  std::string witness;
  DiffStatus status = DiffStatus::miss;
  std::string note;
};

// Errata that need a refutation are flagged only for cells listed in
// `refuted`, i.e. where no LCD code reaching the printed lower bound exists.
inline std::vector<DiffCell> diff_against_paper(const std::vector<CodeRecord>& records,
                                                const std::vector<std::pair<std::size_t, std::size_t>>& refuted = {}) {
  const auto bounds = bounds_table(records, kRegistryMaxLength);
  std::vector<DiffCell> out;
  for (const auto& cell : table_bounds_main()) {
    DiffCell dc{cell.n, cell.k, cell.text, 0, {}, DiffStatus::miss, {}};
    for (const auto& b : bounds)
      if (b.n == cell.n && b.k == cell.k) {
        dc.witnessed = b.d_lower;
        dc.witness = b.witness;
      }
    if (dc.witnessed > cell.lower) {
      dc.status = DiffStatus::better;
    } else if (dc.witnessed == cell.lower) {
      dc.status = DiffStatus::ok;
    }
    for (const auto& e : table_bounds_errata())
      if (e.n == cell.n && e.k == cell.k && dc.witnessed == e.corrected &&
          (!e.needs_refutation || std::find(refuted.begin(), refuted.end(), std::pair{e.n, e.k}) != refuted.end())) {
        dc.status = DiffStatus::typo_flag;
        dc.note = e.reason;
      }
    if (dc.status == DiffStatus::miss && dc.witness.empty()) dc.note = "no witness in the registry";
    out.push_back(std::move(dc));
  }
  return out;
}

}  // namespace ternlcd
