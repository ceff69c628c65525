#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ternlcd/suite.hpp"

using namespace ternlcd;
namespace fs = std::filesystem;

namespace {

const std::vector<CodeRecord>& registry() {
  static const std::vector<CodeRecord> recs = assemble_registry();
  return recs;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ternlcd-test-" + name);
  fs::remove_all(p);
  return p;
}

std::size_t error_line(const std::string& text) {
  try {
    (void)parse_code_file(text);
  } catch (const CodeFileError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(CodeFile, RoundTripIsBitExact) {
  const TritMatrix g = TritMatrix::from_strings({"10212", "01110"});
  const std::string text = to_code_file(g);
  EXPECT_EQ(text, "ternary-code v1\nn=5 k=2\n10212\n01110\n");
  EXPECT_EQ(parse_code_file(text), g);
  EXPECT_EQ(to_code_file(parse_code_file(text)), text);
}

TEST(CodeFile, MalformedInputReportsTheLine) {
  EXPECT_EQ(error_line("ternary code\nn=2 k=1\n11\n"), 1u);
  EXPECT_EQ(error_line("ternary-code v1\nn=2,k=1\n11\n"), 2u);
  EXPECT_EQ(error_line("ternary-code v1\nn=2 k=3\n11\n"), 2u);
  EXPECT_EQ(error_line("ternary-code v1\nn=3 k=2\n110\n1103\n"), 4u);
  EXPECT_EQ(error_line("ternary-code v1\nn=3 k=2\n110\n1x0\n"), 4u);
  EXPECT_EQ(error_line("ternary-code v1\nn=3 k=2\n110\n"), 4u);
  EXPECT_EQ(error_line("ternary-code v1\nn=3 k=1\n110\n\nextra\n"), 5u);
}

TEST(PrintedData, EnumeratorTextParsing) {
  const auto p = parse_enumerator_text("1+8z^3+z^4", 4);
  EXPECT_EQ(p.counts, (std::vector<std::uint64_t>{1, 0, 0, 8, 1}));
  EXPECT_FALSE(p.repeated_exponent);
  EXPECT_TRUE(parse_enumerator_text("1+2z^3+4z^3", 4).repeated_exponent);
  EXPECT_THROW((void)parse_enumerator_text("1+2z^9", 4), std::invalid_argument);
}

TEST(PrintedData, InconsistentEnumeratorsAreExactlyTheKnownTypos) {
  std::set<std::string> flagged;
  for (const auto& e : printed_enumerators())
    if (enumerator_inconsistency(e)) flagged.insert(e.label);
  EXPECT_EQ(flagged, (std::set<std::string>{"W_{3,9}", "W_{3,17}", "W_{5,18}", "W_{8,17}", "W_{10,18}", "W_{9,20}"}));
}

TEST(PrintedData, BoundsCellsParseRanges) {
  EXPECT_EQ(paper_bounds(20, 5)->lower, 11u);
  EXPECT_EQ(paper_bounds(13, 3)->lower, 8u);
  const auto c = paper_bounds(18, 6);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->lower, 8u);
  EXPECT_EQ(c->upper, 9u);
  EXPECT_EQ(c->text, "8-9");
  EXPECT_FALSE(paper_bounds(3, 2).has_value());
  EXPECT_FALSE(paper_bounds(21, 1).has_value());
}

TEST(Registry, EveryRecordIsVerified) {
  std::set<std::string> ids;
  for (const auto& r : registry()) {
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    EXPECT_EQ(r.n, r.code.n());
    EXPECT_EQ(r.k, r.code.k());
    EXPECT_EQ(r.d, min_distance(r.code)) << r.id;
    EXPECT_EQ(r.is_lcd, is_lcd(r.code)) << r.id;
    EXPECT_EQ(r.enumerator.total(), pow3(static_cast<unsigned>(r.k))) << r.id;
  }
  EXPECT_GE(registry().size(), 60u);
}

TEST(Registry, BoundsWitnessesReloadWithTheirParameters) {
  std::map<std::string, const CodeRecord*> by_id;
  for (const auto& r : registry()) by_id[r.id] = &r;
  for (const auto& e : bounds_table(registry(), kRegistryMaxLength)) {
    if (e.witness.empty()) continue;
    const CodeRecord& r = *by_id.at(e.witness);
    const LinearCode back = LinearCode(parse_code_file(to_code_file(r.code)));
    EXPECT_EQ(min_distance(back), e.d_lower) << e.witness;
    EXPECT_TRUE(is_lcd(back)) << e.witness;
    EXPECT_EQ(back.n(), e.n);
    EXPECT_EQ(back.k(), e.k);
  }
}

TEST(Registry, ExportImportReproducesRecordsByteForByte) {
  const fs::path dir = scratch("roundtrip");
  export_registry(registry(), dir);
  const auto back = import_registry(dir);
  ASSERT_EQ(back.size(), registry().size());
  EXPECT_EQ(manifest_json(back), manifest_json(registry()));
  const fs::path again = scratch("roundtrip2");
  export_registry(back, again);
  for (const auto& r : registry()) {
    std::ifstream a(dir / record_file_name(r)), b(again / record_file_name(r));
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str()) << r.id;
  }
  std::ifstream ma(dir / kManifestName), mb(again / kManifestName);
  std::stringstream sa, sb;
  sa << ma.rdbuf();
  sb << mb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
}

TEST(Registry, ImportRejectsTamperedFiles) {
  const fs::path dir = scratch("tamper");
  std::vector<CodeRecord> few(registry().begin(), registry().begin() + 3);
  export_registry(few, dir);
  const fs::path file = dir / record_file_name(few[1]);
  std::string text;
  {
    std::ifstream f(file);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  const auto pos = text.rfind('1');
  text[pos] = '2';
  std::ofstream(file, std::ios::binary | std::ios::trunc) << text;
  EXPECT_THROW((void)import_registry(dir), RegistryError);
  EXPECT_THROW((void)import_registry(scratch("missing")), RegistryError);
}

TEST(Diff, NamedCells) {
  const auto cells = diff_against_paper(registry(), run_refutations().cells);
  const auto find = [&](std::size_t n, std::size_t k) {
    for (const auto& c : cells)
      if (c.n == n && c.k == k) return c;
    return DiffCell{};
  };
  EXPECT_EQ(find(20, 5).status, DiffStatus::ok);
  EXPECT_EQ(find(20, 5).witnessed, 11u);
  EXPECT_EQ(find(13, 3).status, DiffStatus::ok);
  EXPECT_EQ(find(13, 3).witnessed, 8u);
  EXPECT_EQ(find(18, 6).status, DiffStatus::ok);
  EXPECT_EQ(find(18, 6).witnessed, 8u);
  EXPECT_EQ(find(15, 1).status, DiffStatus::typo_flag);
  EXPECT_EQ(find(12, 5).status, DiffStatus::typo_flag);
  for (const auto& c : cells) EXPECT_NE(c.status, DiffStatus::miss) << c.n << "," << c.k;
}

TEST(Diff, RefutableErratumNeedsTheRefutation) {
  const auto cells = diff_against_paper(registry());
  for (const auto& c : cells)
    if (c.n == 12 && c.k == 5) {
      EXPECT_EQ(c.status, DiffStatus::miss);
    }
}

TEST(Diff, SingleValueCellsAreNeverMissed) {
  for (const auto& c : diff_against_paper(registry(), run_refutations().cells)) {
    const auto cell = paper_bounds(c.n, c.k);
    if (cell->lower == cell->upper) {
      EXPECT_NE(c.status, DiffStatus::miss) << c.n << "," << c.k;
    }
  }
}

TEST(Closure, DerivedRecordsCarryProvenance) {
  std::size_t derived = 0;
  for (const auto& r : registry())
    if (r.id.rfind(kDerivedPrefix, 0) == 0) {
      ++derived;
      EXPECT_NE(r.provenance.find(" -> "), std::string::npos) << r.id;
    }
  EXPECT_GT(derived, 0u);
}
