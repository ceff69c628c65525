// Command-line front end: construct, analyze, transform, search, table,
// registry and verify. Exit status 0 on success, 1 when a verification or
// transform fails, 2 on a usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ternlcd/suite.hpp"

namespace {

using namespace ternlcd;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LinearCode build_family(const std::string& family, std::optional<std::size_t> n, std::optional<std::size_t> k) {
  const auto need = [&](const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw UsageError("family " + family + " needs " + flag);
    return *v;
  };
  try {
    if (family.rfind("paper:", 0) == 0) return paper_code(family.substr(6));
    if (family == "simplex") return LinearCode(simplex(need(k, "--k")).matrix);
    if (family == "dim1") return dim1_code(need(n, "--n"));
    if (family == "dim2") return dim2_code(need(n, "--n"));
    if (family == "dim3") return dim3_code(need(n, "--n"));
    if (family == "codim1") return codim1_code(need(n, "--n"));
    if (family == "codim2") return codim2_code(need(n, "--n"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family '" + family + "'");
}

// C_<n>_<k>_<d> attained by one of the parametric families.
std::optional<LinearCode> family_code_by_id(const std::string& id) {
  std::size_t n = 0, k = 0, d = 0;
  char tail = 0;
  if (std::sscanf(id.c_str(), "C_%zu_%zu_%zu%c", &n, &k, &d, &tail) != 3 || k == 0 || k > n) return std::nullopt;
  std::vector<std::string> families;
  if (k == 1) families.push_back("dim1");
  if (k == 2 && n >= 4) families.push_back("dim2");
  if (k == 3 && n >= 3) families.push_back("dim3");
  if (k + 1 == n) families.push_back("codim1");
  if (k + 2 == n && n >= 4) families.push_back("codim2");
  if (k >= 2 && k <= kSimplexMaxK && n == (pow3(static_cast<unsigned>(k)) - 1) / 2) families.push_back("simplex");
  for (const auto& f : families) {
    LinearCode c = build_family(f, n, k);
    if (min_distance(c) == d) return c;
  }
  return std::nullopt;
}

// A file path, <family>:<n or k>, "paper:<id>", a recipe id, or C_n_k_d
// attained by a family.
LinearCode load_source(const std::string& source) {
  if (std::filesystem::exists(source)) return load_code_file(source);
  if (const auto colon = source.find(':'); colon != std::string::npos && source.rfind("paper:", 0) != 0) {
    const std::string family = source.substr(0, colon);
    std::size_t value = 0;
    try {
      value = std::stoul(source.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("bad code spec '" + source + "'");
    }
    return family == "simplex" ? build_family(family, std::nullopt, value) : build_family(family, value, std::nullopt);
  }
  std::string id = source;
  if (id.rfind("paper:", 0) == 0) id = id.substr(6);
  try {
    return paper_code(id);
  } catch (const std::invalid_argument&) {
  }
  if (auto c = family_code_by_id(id)) return *c;
  throw UsageError("no such file or code id '" + source + "'");
}

struct Params {
  std::size_t n, k, d;
  bool is_lcd;
};

Params params_of(const LinearCode& c) { return {c.n(), c.k(), min_distance(c), is_lcd(c)}; }

std::string describe(const Params& p) { return describe_parameters(p.n, p.k, p.d, p.is_lcd); }

void write_output(const LinearCode& c, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << to_code_file(c);
    return;
  }
  write_file_atomic(path, to_code_file(c));
}

// Parameters go to stderr when the code itself goes to stdout.
std::ostream& report_stream(const std::string& out) { return out.empty() || out == "-" ? std::cerr : std::cout; }

int run_construct(const std::string& family, std::optional<std::size_t> n, std::optional<std::size_t> k,
                  const std::string& out) {
  const LinearCode c = build_family(family, n, k);
  write_output(c, out);
  report_stream(out) << describe(params_of(c)) << '\n';
  return kExitOk;
}

int run_analyze(const std::string& source, bool as_json, bool with_enumerator) {
  const LinearCode c = load_source(source);
  const GramReport g = gram_report(c);
  const WeightEnumerator w = full_enumerator(c);
  const std::size_t d = w.min_distance();
  if (as_json) {
    json j = {{"n", c.n()}, {"k", c.k()}, {"d", d}, {"gram_rank", g.gram_rank}, {"hull_dim", g.hull_dim}, {"is_lcd", g.is_lcd}};
    if (with_enumerator) {
      j["enumerator"] = w.counts();
      j["enumerator_text"] = w.to_string();
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n=" << c.n() << " k=" << c.k() << " d=" << d << " gram_rank=" << g.gram_rank << " hull_dim=" << g.hull_dim
              << " is_lcd=" << (g.is_lcd ? "true" : "false") << '\n';
    if (with_enumerator) std::cout << "enumerator: " << w.to_string() << '\n';
  }
  return kExitOk;
}

TritMatrix parse_block(const std::string& spec) {
  if (spec.rfind("simplex:", 0) == 0) {
    try {
      return simplex(std::stoul(spec.substr(8))).matrix;
    } catch (const std::exception& e) {
      throw UsageError("bad block '" + spec + "': " + e.what());
    }
  }
  return load_source(spec).generator();
}

CoordSet parse_coords(const std::string& text) {
  try {
    return CoordSet::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("bad --coords '" + text + "': " + e.what());
  }
}

int run_transform(const std::string& op, const std::string& source, const std::string& coords, const std::string& block,
                  std::size_t copies, unsigned factor, const std::string& out) {
  const LinearCode c = load_source(source);
  std::optional<LinearCode> r;
  const auto need_coords = [&] {
    if (coords.empty()) throw UsageError(op + " needs --coords");
    return parse_coords(coords);
  };
  if (op == "puncture" || op == "shorten" || op == "scale") {
    const CoordSet s = need_coords();
    if (op == "scale" && (factor == 0 || factor > 2)) throw UsageError("--factor must be 1 or 2");
    try {
      if (op == "puncture") r = puncture(c, s);
      if (op == "shorten") r = shorten(c, s);
      if (op == "scale") r = scale_columns(c, s, Trit(static_cast<int>(factor)));
    } catch (const std::exception& e) {
      throw Failure(op + ": " + e.what());
    }
  } else if (op == "juxtapose") {
    if (block.empty()) throw UsageError("juxtapose needs --block");
    const TritMatrix b = parse_block(block);
    try {
      r = juxtapose(c, b, copies);
    } catch (const std::exception& e) {
      throw Failure(std::string("juxtapose: ") + e.what());
    }
  } else {
    throw UsageError("unknown transform '" + op + "'");
  }
  write_output(*r, out);
  report_stream(out) << describe(params_of(c)) << " -> " << describe(params_of(*r)) << '\n';
  return kExitOk;
}

struct SearchArgs {
  std::string mode;
  std::size_t n = 0, k = 0, d = 0, dual_d = 0;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t iters = SearchBudget{}.max_iters;
  unsigned max_exponent = SearchBudget{}.max_exponent;
  std::string out;
  bool as_json = false;
};

int run_search(const SearchArgs& a, unsigned threads) {
  SearchBudget b;
  b.seed = a.seed;
  b.threads = threads;
  b.max_iters = a.iters;
  b.max_exponent = a.max_exponent;
  if (a.n == 0 || a.k == 0) throw UsageError("search needs --n and --k");
  std::optional<TritMatrix> witness;
  json j = {{"mode", a.mode}, {"n", a.n}, {"k", a.k}};
  std::string line;
  try {
    if (a.mode == "exhaustive") {
      const SearchResult r = exhaustive_best_lcd(a.n, a.k, b);
      witness = r.witness;
      j["best_d"] = r.best_d;
      j["evaluated"] = r.evaluated;
      line = "best LCD [" + std::to_string(a.n) + "," + std::to_string(a.k) + "] has d=" + std::to_string(r.best_d) +
             " (" + std::to_string(r.evaluated) + " generators)";
    } else if (a.mode == "exists" || a.mode == "parity") {
      if (a.d == 0) throw UsageError(a.mode + " needs --d");
      const ExistsResult r = a.mode == "exists" ? exists_lcd(a.n, a.k, a.d, b) : exists_lcd_parity(a.n, a.k, a.d);
      witness = r.witness;
      j["d"] = a.d;
      j["exists"] = r.exists;
      line = std::string(r.exists ? "an" : "no") + " LCD [" + std::to_string(a.n) + "," + std::to_string(a.k) + ",>=" +
             std::to_string(a.d) + "] code" + (r.exists ? " exists" : "");
    } else if (a.mode == "random") {
      if (a.d == 0) throw UsageError("random needs --d");
      const SearchResult r = randomized_search(a.n, a.k, a.d, b, a.dual_d);
      witness = r.witness;
      j["target_d"] = a.d;
      j["best_d"] = r.best_d;
      j["seed"] = a.seed;
      line = "seed " + std::to_string(a.seed) + ": best LCD d=" + std::to_string(r.best_d) + " (target " +
             std::to_string(a.d) + ")";
    } else {
      throw UsageError("unknown search mode '" + a.mode + "'");
    }
  } catch (const BudgetExceeded& e) {
    throw Failure(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (witness) j["witness"] = to_code_file(*witness);
  if (a.as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << line << '\n';
    if (witness && a.out.empty()) std::cout << to_code_file(*witness);
  }
  if (witness && !a.out.empty()) write_file_atomic(a.out, to_code_file(*witness));
  return kExitOk;
}

int run_table(const std::string& which, bool as_json, std::size_t max_n, unsigned threads) {
  Budget budget;
  budget.threads = threads;
  json rows = json::array();
  bool miss = false;
  if (which == "bounds") {
    for (const auto& e : bounds_table(assemble_registry(budget), kRegistryMaxLength)) {
      rows.push_back({{"n", e.n}, {"k", e.k}, {"d_lower", e.d_lower}, {"d_upper", e.d_upper}, {"status", to_string(e.status)},
                      {"witness", e.witness}});
      if (!as_json)
        std::cout << e.n << ' ' << e.k << ' ' << e.d_lower << (e.d_upper != e.d_lower ? "-" + std::to_string(e.d_upper) : "")
                  << ' ' << to_string(e.status) << ' ' << e.witness << '\n';
    }
  } else if (which == "diff") {
    const auto refutations = run_refutations();
    for (const auto& c : diff_against_paper(assemble_registry(budget), refutations.cells)) {
      miss = miss || c.status == DiffStatus::miss;
      rows.push_back({{"n", c.n}, {"k", c.k}, {"paper", c.paper}, {"witnessed", c.witnessed}, {"witness", c.witness},
                      {"status", to_string(c.status)}, {"note", c.note}});
      if (!as_json)
        std::cout << "(" << c.n << "," << c.k << ") " << to_string(c.status) << " table " << c.paper << " witnessed "
                  << c.witnessed << (c.witness.empty() ? "" : " by " + c.witness) << (c.note.empty() ? "" : "; " + c.note)
                  << '\n';
    }
  } else if (which == "dim2") {
    for (std::size_t n = 4; n <= max_n; ++n) {
      const std::size_t d = min_distance(dim2_code(n));
      const std::size_t lcd = dim2_table_value(table_dim2_lcd, n), opt = dim2_table_value(table_dim2_optimal, n);
      rows.push_back({{"n", n}, {"constructed", d}, {"table_lcd", lcd}, {"table_optimal", opt}});
      if (!as_json) std::cout << n << " constructed " << d << " table " << lcd << " optimal " << opt << '\n';
    }
  } else if (which == "dim3") {
    for (std::size_t n = 3; n <= max_n; ++n) {
      const std::size_t d = min_distance(dim3_code(n));
      const std::size_t t = dim3_table_value(n);
      rows.push_back({{"n", n}, {"constructed", d}, {"table", t}});
      if (!as_json) std::cout << n << " constructed " << d << " table " << t << '\n';
    }
  } else {
    throw UsageError("unknown table '" + which + "'");
  }
  if (as_json) std::cout << rows.dump(2) << '\n';
  return miss ? kExitFail : kExitOk;
}

int run_registry(const std::string& action, const std::string& dir, unsigned threads) {
  Budget budget;
  budget.threads = threads;
  if (action == "export") {
    const auto recs = assemble_registry(budget);
    export_registry(recs, dir);
    std::cout << recs.size() << " records written to " << dir << '\n';
    return kExitOk;
  }
  if (action == "import") {
    try {
      const auto recs = import_registry(dir, budget);
      std::cout << recs.size() << " records verified from " << dir << '\n';
    } catch (const RegistryError& e) {
      throw Failure(e.what());
    }
    return kExitOk;
  }
  throw UsageError("unknown registry action '" + action + "'");
}

int run_verify(const std::string& suite, bool as_json, const std::string& fault, const std::string& work_dir,
               unsigned threads, std::uint64_t seed) {
  if (suite != "paper") throw UsageError("unknown suite '" + suite + "'");
  SuiteOptions opt;
  opt.threads = threads;
  opt.seed = seed;
  if (!work_dir.empty()) opt.work_dir = work_dir;
  if (!fault.empty()) {
    try {
      opt.fault = parse_fault(fault);
      (void)with_fault(*opt.fault);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const SuiteReport rep = run_paper_suite(opt);
  const std::vector<CheckStatus> kinds = {CheckStatus::pass, CheckStatus::fail, CheckStatus::typo_flag, CheckStatus::standin,
                                          CheckStatus::standin_mismatch};
  if (as_json) {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"group", c.group}, {"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    json summary = {{"checks", rep.checks.size()}, {"seconds", rep.seconds}, {"ok", rep.ok()}};
    for (auto s : kinds) summary[to_string(s)] = rep.count(s);
    std::cout << json{{"checks", checks}, {"summary", summary}}.dump(2) << '\n';
  } else {
    for (const auto& c : rep.checks)
      std::cout << to_string(c.status) << ' ' << c.group << ' ' << c.name << ": " << c.detail << '\n';
    std::cout << rep.checks.size() << " checks in " << rep.seconds << " s:";
    for (auto s : kinds) std::cout << ' ' << to_string(s) << '=' << rep.count(s);
    std::cout << '\n';
  }
  return rep.ok() ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ternary LCD codes: constructions, searches and bounds tables"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default: TERNLCD_THREADS or hardware count)")->check(CLI::PositiveNumber);

  std::string family, out;
  std::optional<std::size_t> n, k;
  auto* construct = app.add_subcommand("construct", "build a code from a family or a paper recipe");
  construct->add_option("--family", family, "simplex|dim1|dim2|dim3|codim1|codim2|paper:<id>")->required();
  construct->add_option("--n", n, "length");
  construct->add_option("--k", k, "dimension");
  construct->add_option("-o,--output", out, "output code file (default stdout)");

  std::string source;
  bool as_json = false, with_enumerator = false;
  auto* analyze = app.add_subcommand("analyze", "report parameters of a code file or paper code id");
  analyze->add_option("source", source, "code file, family:<n>, paper:<id> or code id")->required();
  analyze->add_flag("--json", as_json, "JSON output");
  analyze->add_flag("--enumerator", with_enumerator, "include the full weight enumerator");

  std::string op, coords, block;
  std::size_t copies = 1;
  unsigned factor = 2;
  auto* transform = app.add_subcommand("transform", "puncture, shorten, juxtapose or scale a code");
  transform->add_option("op", op, "puncture|shorten|juxtapose|scale")->required();
  transform->add_option("source", source, "code file, family:<n>, paper:<id> or code id")->required();
  transform->add_option("--coords", coords, "1-based coordinates, comma separated");
  transform->add_option("--block", block, "simplex:<k>, a code file or a code id to append");
  transform->add_option("--copies", copies, "number of appended blocks");
  transform->add_option("--factor", factor, "column scale factor (1 or 2)");
  transform->add_option("-o,--output", out, "output code file (default stdout)");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exhaustive, existence, parity-check or randomized search");
  search->add_option("mode", sa.mode, "exhaustive|exists|parity|random")->required();
  search->add_option("--n", sa.n, "length")->required();
  search->add_option("--k", sa.k, "dimension")->required();
  search->add_option("--d", sa.d, "target distance");
  search->add_option("--dual-d", sa.dual_d, "target dual distance (random)");
  search->add_option("--seed", sa.seed, "seed for random (default 20190817)");
  search->add_option("--iters", sa.iters, "move budget for random");
  search->add_option("--max-exponent", sa.max_exponent, "exhaustive limit on k(n-k)");
  search->add_option("-o,--output", sa.out, "write the witness to this file");
  search->add_flag("--json", sa.as_json, "JSON output");

  std::string which;
  std::size_t max_n = 60;
  auto* table = app.add_subcommand("table", "bounds table, diff against the published table, dim2/dim3 families");
  table->add_option("which", which, "bounds|diff|dim2|dim3")->required();
  table->add_option("--max-n", max_n, "largest length for dim2/dim3");
  table->add_flag("--json", as_json, "JSON output");

  std::string action, dir;
  auto* registry = app.add_subcommand("registry", "export or re-verify a registry directory");
  registry->add_option("action", action, "export|import")->required();
  registry->add_option("dir", dir, "registry directory")->required();

  std::string suite, fault, work_dir;
  std::uint64_t seed = kDefaultSeed;
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--suite", suite, "suite name (paper)")->required();
  verify->add_flag("--json", as_json, "JSON output");
  verify->add_option("--inject-fault", fault, "bump embedded matrix entry ID:ROW:COL (1-based) before hashing");
  verify->add_option("--work-dir", work_dir, "scratch directory for persisted witnesses");
  verify->add_option("--seed", seed, "seed for the lemma searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return run_construct(family, n, k, out);
    if (*analyze) return run_analyze(source, as_json, with_enumerator);
    if (*transform) return run_transform(op, source, coords, block, copies, factor, out);
    if (*search) return run_search(sa, threads);
    if (*table) return run_table(which, as_json, max_n, threads);
    if (*registry) return run_registry(action, dir, threads);
    if (*verify) return run_verify(suite, as_json, fault, work_dir, threads, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CodeFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Failure& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
