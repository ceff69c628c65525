#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args, bool with_stderr = false) {
  const std::string cmd = std::string(TERNLCD_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (const std::size_t got = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ternlcd-cli-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("construct --family bogus").code, 2);
  EXPECT_EQ(run("construct --family dim2").code, 2);
  EXPECT_EQ(run("table sideways").code, 2);
  EXPECT_EQ(run("verify --suite other").code, 2);
}

TEST(Cli, MalformedCodeFileNamesTheLine) {
  const fs::path dir = scratch("malformed");
  std::ofstream(dir / "bad.code") << "ternary-code v1\nn=3 k=2\n110\n1x0\n";
  const CliResult r = run("analyze " + (dir / "bad.code").string(), true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 4"), std::string::npos) << r.out;
}

TEST(Cli, ConstructAnalyzePipeline) {
  const fs::path dir = scratch("pipeline");
  const fs::path file = dir / "c.code";
  ASSERT_EQ(run("construct --family paper:C_20_11_6 -o " + file.string()).code, 0);
  const CliResult a = run("analyze --json " + file.string());
  ASSERT_EQ(a.code, 0);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["n"], 20);
  EXPECT_EQ(j["k"], 11);
  EXPECT_EQ(j["d"], 6);
  EXPECT_EQ(j["is_lcd"], true);
  EXPECT_EQ(j["hull_dim"], 0);

  const fs::path shortened = dir / "s.code";
  ASSERT_EQ(run("transform shorten --coords 3 " + file.string() + " -o " + shortened.string()).code, 0);
  const auto s = nlohmann::json::parse(run("analyze --json " + shortened.string()).out);
  EXPECT_EQ(s["n"], 19);
  EXPECT_EQ(s["k"], 10);
  EXPECT_EQ(s["d"], 6);
  EXPECT_EQ(s["is_lcd"], true);

  const CliResult stdout_form = run("construct --family paper:C_20_11_6");
  EXPECT_EQ(stdout_form.out, slurp(file));
}

TEST(Cli, TransformErrorsExitOne) {
  EXPECT_EQ(run("transform shorten --coords 30 C_20_11_6").code, 1);
  EXPECT_EQ(run("transform puncture --coords 1,2,7 C_21_4_12").code, 0);
}

TEST(Cli, AnalyzeReportsHullAndEnumerator) {
  const auto s = nlohmann::json::parse(run("analyze --json simplex:2").out);
  EXPECT_EQ(s["hull_dim"], 2);
  EXPECT_EQ(s["is_lcd"], false);
  const auto e = nlohmann::json::parse(run("analyze --json --enumerator paper:C_17_6_8").out);
  EXPECT_EQ(e["enumerator_text"],
            "1 + 52z^8 + 82z^9 + 124z^10 + 136z^11 + 110z^12 + 124z^13 + 64z^14 + 32z^15 + 4z^16");
}

TEST(Cli, SearchJsonCarriesAWitness) {
  const CliResult r = run("search exhaustive --n 7 --k 2 --json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["best_d"], 4);
  const fs::path dir = scratch("search");
  std::ofstream(dir / "w.code") << j["witness"].get<std::string>();
  const auto a = nlohmann::json::parse(run("analyze --json " + (dir / "w.code").string()).out);
  EXPECT_EQ(a["d"], 4);
  EXPECT_EQ(a["is_lcd"], true);
  EXPECT_EQ(run("search exhaustive --n 20 --k 10").code, 1);
}

TEST(Cli, FamilyTablesAsJson) {
  const auto d2 = nlohmann::json::parse(run("table dim2 --max-n 30 --json").out);
  ASSERT_EQ(d2.size(), 27u);
  for (const auto& row : d2) EXPECT_EQ(row["constructed"], row["table_lcd"]) << row.dump();
  const auto bounds = nlohmann::json::parse(run("table bounds --json").out);
  EXPECT_FALSE(bounds.empty());
}

TEST(Cli, RegistryExportImport) {
  const fs::path dir = scratch("registry") / "reg";
  ASSERT_EQ(run("registry export " + dir.string()).code, 0);
  EXPECT_EQ(run("registry import " + dir.string()).code, 0);
  const fs::path victim = dir / "C_17_6_8.code";
  ASSERT_TRUE(fs::exists(victim));
  std::string text = slurp(victim);
  const auto pos = text.rfind('0');
  text[pos] = '1';
  std::ofstream(victim, std::ios::trunc) << text;
  EXPECT_EQ(run("registry import " + dir.string()).code, 1);
}

TEST(Cli, VerifyPassesAndInjectedFaultFails) {
  const fs::path work = scratch("verify");
  const CliResult ok = run("verify --suite paper --json --work-dir " + work.string());
  EXPECT_EQ(ok.code, 0);
  const auto j = nlohmann::json::parse(ok.out);
  EXPECT_EQ(j["summary"]["FAIL"], 0);
  EXPECT_EQ(j["summary"]["ok"], true);

  const CliResult bad = run("verify --suite paper --inject-fault A_11_9:2:3 --work-dir " + work.string());
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  EXPECT_NE(bad.out.find("A_11_9"), std::string::npos);
}
