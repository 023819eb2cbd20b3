#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mondrian/io.hpp"

namespace mondrian::cli {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string LastLine(const std::string& text) {
  std::string trimmed = text;
  while (!trimmed.empty() && trimmed.back() == '\n') trimmed.pop_back();
  return trimmed.substr(trimmed.rfind('\n') + 1);
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("mondrian_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                                 ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST(CliPieces, ListsEntriesAndClasses) {
  const CliRun r = Cli({"pieces", "84", "84", "7"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("14 entries, 7 classes"), std::string::npos);
  EXPECT_NE(r.out.find("12x84"), std::string::npos);
  const CliRun big = Cli({"pieces", "360", "360", "12"});
  EXPECT_NE(big.out.find("26 entries"), std::string::npos);
}

TEST(CliPieces, JsonListsEveryEntry) {
  const CliRun r = Cli({"pieces", "84", "84", "7", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  int entries = 0;
  for (std::size_t at = r.out.find("\"index\""); at != std::string::npos;
       at = r.out.find("\"index\"", at + 1)) {
    ++entries;
  }
  EXPECT_EQ(entries, 14);
}

TEST(CliPieces, InfeasibleExitsTwo) {
  const CliRun r = Cli({"pieces", "5", "5", "7"});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_NE((r.out + r.err).find("infeasible"), std::string::npos);
  EXPECT_EQ(Cli({"pieces", "60", "60", "9"}).code, kInvalidInput);
}

TEST(CliScan, SideStageStartsAt84) {
  const CliRun r = Cli({"scan", "--squares", "--max", "100", "--stages", "side",
                     "--format", "text", "-q", "--workers", "1"});
  ASSERT_EQ(r.code, kOk);
  const std::string summary = LastLine(r.out);
  EXPECT_EQ(summary.rfind("survivors: 84", 0), 0u) << summary;
}

TEST(CliScan, CsvGoesToStdoutSummaryToStderr) {
  const CliRun r = Cli({"scan", "--max", "90", "--stages", "side", "--format",
                     "csv", "-q"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind(io::VerdictCsvHeader(), 0), 0u);
  EXPECT_NE(r.out.find("84,84,7,SURVIVOR"), std::string::npos);
  EXPECT_NE(r.err.find("survivors: 84"), std::string::npos);
}

TEST(CliScan, PerimeterStageBelow360) {
  // Single-piece sides let a full-width strip close a perimeter long before
  // 360; without them the first survivor is 180.
  const CliRun with = Cli({"scan", "--max", "359", "--stages", "side,perimeter",
                        "--format", "text", "-q"});
  ASSERT_EQ(with.code, kOk);
  EXPECT_EQ(LastLine(with.out).rfind("survivors: 84 ", 0), 0u);
  const CliRun without = Cli({"scan", "--max", "359", "--stages",
                           "side,perimeter", "--no-singletons", "--format",
                           "text", "-q"});
  EXPECT_EQ(LastLine(without.out).rfind("survivors: 180 ", 0), 0u);
}

TEST(CliScan, RejectsBadArguments) {
  EXPECT_EQ(Cli({"scan", "--max", "10", "--stages", "bogus"}).code, kInvalidInput);
  EXPECT_EQ(Cli({"scan", "--max", "10", "--gap-mode", "sideways"}).code,
            kInvalidInput);
  EXPECT_EQ(Cli({"scan"}).code, kUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(Cli({}).code, kUsage);
}

TEST(CliSolve, Board84IsExhausted) {
  const CliRun r = Cli({"solve", "84", "84"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("EXHAUSTED"), std::string::npos);
  const CliRun raw = Cli({"solve", "84", "84", "7", "--no-filters"});
  EXPECT_EQ(raw.code, kOk);
  EXPECT_NE(raw.out.find("EXHAUSTED (solver"), std::string::npos);
}

TEST(CliSolve, NodeLimitExitsFour) {
  const CliRun r = Cli({"solve", "420", "420", "--limit-nodes", "10^5"});
  EXPECT_EQ(r.code, kLimit);
  EXPECT_NE(r.out.find("LIMIT"), std::string::npos);
  EXPECT_NE(r.out.find("100001 nodes"), std::string::npos);
}

TEST_F(CliFiles, GenerateSolveRender) {
  const std::string fixture = Path("g.json");
  ASSERT_EQ(Cli({"generate", "32", "32", "--cuts", "6", "--seed", "3", "-o",
                 fixture}).code,
            kOk);
  const std::string prefix = Path("witness");
  const CliRun solved = Cli({"solve", "32", "32", "--generic-fixture", fixture,
                          "--witness", prefix});
  ASSERT_EQ(solved.code, kOk) << solved.err;
  EXPECT_NE(solved.out.find("FOUND"), std::string::npos);
  ASSERT_TRUE(std::filesystem::exists(prefix + ".svg"));
  std::ifstream json_in(prefix + ".json");
  const std::string json((std::istreambuf_iterator<char>(json_in)), {});
  EXPECT_EQ(io::TilingFromJson(json).pieces.size(), 7u);

  const CliRun svg = Cli({"render", fixture});
  ASSERT_EQ(svg.code, kOk);
  int rects = 0;
  for (std::size_t at = svg.out.find("<rect"); at != std::string::npos;
       at = svg.out.find("<rect", at + 1)) {
    ++rects;
  }
  EXPECT_EQ(rects, 7 + 1);
  EXPECT_EQ(Cli({"render", fixture}).out, svg.out);
}

TEST_F(CliFiles, RenderRejectsInvalidInput) {
  const std::string bad = Path("bad.json");
  std::ofstream(bad) << R"({"format":"mondrian-tiling/1","width":2,"height":1,
    "pieces":[{"w":3,"h":1,"x":0,"y":0,"class":0}]})";
  const CliRun r = Cli({"render", bad});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_FALSE(r.err.empty());
  std::ofstream(Path("junk.json")) << "{";
  EXPECT_EQ(Cli({"render", Path("junk.json")}).code, kInvalidInput);
  EXPECT_EQ(Cli({"render", Path("missing.json")}).code, kInvalidInput);
}

TEST_F(CliFiles, PerimetersRenderAsSevenPieces) {
  const std::string out = Path("p.json");
  const CliRun listed = Cli({"perimeters", "360", "360", "12", "--format", "json",
                          "--limit", "1"});
  ASSERT_EQ(listed.code, kOk);
  const PieceSet ps = std::get<PieceSet>(MakePieceSet(360, 360, 12));
  PerimeterCandidate found;
  bool hit = false;
  ForEachPerimeterCandidate(ps, {}, [&](const PerimeterCandidate& c) {
    if (c.Entries().size() != 7) return true;
    found = c;
    hit = true;
    return false;
  });
  ASSERT_TRUE(hit);
  std::ofstream(out) << io::PerimeterToJson(ps, found);
  const CliRun svg = Cli({"render", out});
  ASSERT_EQ(svg.code, kOk) << svg.err;
  int labels = 0;
  for (std::size_t at = svg.out.find("<text"); at != std::string::npos;
       at = svg.out.find("<text", at + 1)) {
    ++labels;
  }
  EXPECT_EQ(labels, 7);
}

TEST(CliHelpers, ParseCount) {
  EXPECT_EQ(ParseCount("10^7"), 10000000ull);
  EXPECT_EQ(ParseCount("1e7"), 10000000ull);
  EXPECT_EQ(ParseCount("12345"), 12345ull);
  EXPECT_ANY_THROW(ParseCount("ten"));
  EXPECT_ANY_THROW(ParseCount(""));
}

TEST(CliHelpers, WorkerPrecedence) {
  EXPECT_EQ(ResolveWorkers(3), 3);
  ::setenv("MONDRIAN_THREADS", "5", 1);
  EXPECT_EQ(ResolveWorkers(0), 5);
  EXPECT_EQ(ResolveWorkers(2), 2);
  ::unsetenv("MONDRIAN_THREADS");
  EXPECT_GE(ResolveWorkers(0), 1);
}

}  // namespace
}  // namespace mondrian::cli
