#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "regconn/cli.hpp"

namespace regconn::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("regconn_cli_" + name);
  std::ofstream(path) << contents;
  return path;
}

TEST(CliAnalyzeTest, Octahedron) {
  const Result r = invoke({"analyze", "--generate", "octahedron", "--format", "json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["regularity"]["reg"], 3);
  EXPECT_EQ(j["connectivity"]["kappa"], 4);
  EXPECT_EQ(j["certificate"]["h"], 2);
  EXPECT_EQ(j["s"], 2);
  EXPECT_TRUE(j["pseudomanifold"].get<bool>());
}

TEST(CliAnalyzeTest, TetrahedronBoundary) {
  const Result r = invoke({"analyze", "--generate", "simplex-boundary:3", "--format", "json"});
  ASSERT_EQ(r.code, kPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["regularity"]["reg"], 3);
  EXPECT_EQ(j["connectivity"]["kappa"], 3);
}

TEST(CliAnalyzeTest, CubeFacetFile) {
  const auto path = temp_file("cube.facets",
                              "# prism complex, d = 3\n"
                              "1 2 3 4\n5 6 7 8\n1 2 5 6\n2 3 6 7\n3 4 7 8\n1 4 5 8\n");
  const Result r = invoke({"analyze", path.string()});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_NE(r.out.find("vertex minimal cycle: yes, h=2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("pseudomanifold: no"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("strongly connected: no"), std::string::npos) << r.out;
}

TEST(CliExitCodeTest, ParseErrorIsTwo) {
  const auto path = temp_file("bad.facets", "1 2\n2 zz\n");
  const Result r = invoke({"analyze", path.string()});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"analyze", "/nonexistent/file"}).code, kInputError);
  EXPECT_EQ(invoke({"analyze", "--generate", "nosuch:3"}).code, kInputError);
  EXPECT_EQ(invoke({"analyze", "--generate", "cycle:5", "--primes", "4"}).code, kInputError);
  EXPECT_EQ(invoke({"analyze", "--generate", "cycle:5", "--cap", "40"}).code, kInputError);
  EXPECT_EQ(invoke({"bogus"}).code, kInputError);
  EXPECT_EQ(invoke({}).code, kInputError);
}

TEST(CliExitCodeTest, GhostVertexIsInputErrorUnlessRenumbered) {
  const auto path = temp_file("ghost.facets", "n 5\n1 2\n2 3\n3 1\n");
  EXPECT_EQ(invoke({"analyze", path.string()}).code, kInputError);
  EXPECT_EQ(invoke({"analyze", "--renumber", path.string()}).code, kPass);
}

TEST(CliExitCodeTest, CapExceededIsThree) {
  const Result r = invoke({"analyze", "--generate", "simplex-boundary:23"});
  EXPECT_EQ(r.code, kCapExceeded);
  EXPECT_NE(r.err.find("--force"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "theorem3", "--generate", "simplex-boundary:23", "--cap", "10"}).code,
            kCapExceeded);
}

TEST(CliExitCodeTest, HypothesisUnmetIsFour) {
  EXPECT_EQ(invoke({"verify", "corollary5", "--generate", "simplex:3"}).code, kHypothesisUnmet);
  EXPECT_EQ(invoke({"verify", "dhs-corollary", "--generate", "octahedron"}).code, kHypothesisUnmet);
}

TEST(CliVerifyTest, CorollaryOnNevoIsTight) {
  const Result r = invoke({"verify", "corollary5", "--generate", "nevo:3,3"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["statement"], "corollary5");
  bool tight = false;
  for (const auto& w : j["witnesses"]) {
    if (w["role"] == "connectivity") tight = w["values"]["tight"] == 1;
  }
  EXPECT_TRUE(tight);
}

TEST(CliVerifyTest, TheoremOnOctahedron) {
  const Result r = invoke({"verify", "theorem3", "--generate", "cross-polytope:3"});
  ASSERT_EQ(r.code, kPass) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
}

TEST(CliVerifyTest, Example6DefaultGrid) {
  const Result r = invoke({"verify", "example6", "--grid", "s=2..5,h=s-1..7"});
  ASSERT_EQ(r.code, kPass) << r.out;
}

TEST(CliVerifyTest, Example2AndTaylor) {
  EXPECT_EQ(invoke({"verify", "example2", "--range", "2..4"}).code, kPass);
  EXPECT_EQ(invoke({"verify", "taylor-suitability", "--generate", "octahedron"}).code, kPass);
}

TEST(CliVerifyTest, WritesToOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "regconn_cli_report.json";
  std::filesystem::remove(path);
  const Result r = invoke({"verify", "corollary5", "--generate", "octahedron", "-o", path.string()});
  ASSERT_EQ(r.code, kPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in)["status"], "pass");
}

TEST(CliSearchTest, NevoGridSlackZero) {
  const Result r = invoke({"search", "--family", "nevo", "--grid", "s=2..4,h=s-1..6"});
  ASSERT_EQ(r.code, kPass) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "construction,n,s,h,reg,taylor_bound,kappa,balbarath_bound,slack,note");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.rfind(',', line.size() - 2)), ",0,") << line;
  }
  EXPECT_EQ(rows, 6 + 5 + 4);
}

TEST(CliSearchTest, SimplexBoundarySweep) {
  const Result r = invoke({"search", "--family", "simplex-boundary", "--range", "2..6"});
  ASSERT_EQ(r.code, kPass);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.rfind(',', line.size() - 2)), ",0,") << line;
  }
  EXPECT_EQ(rows, 5);
}

TEST(CliSearchTest, RandomFamilyHasNoViolation) {
  const Result r = invoke(
      {"search", "--family", "random", "--n", "8", "--count", "40", "--seed", "3"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_EQ(r.out.find("VIOLATION"), std::string::npos);
}

TEST(CliSearchTest, OverCapRowsAreSkipped) {
  const Result r = invoke({"search", "--family", "simplex-boundary", "--range", "4..6", "--cap", "6"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("skipped"), std::string::npos) << r.out;
}

TEST(CliGenerateTest, FacetFormat) {
  const Result r = invoke({"generate", "cycle:4"});
  ASSERT_EQ(r.code, kPass);
  EXPECT_EQ(r.out, "# cycle:4\nn 4\n1 2\n2 3\n1 4\n3 4\n");
}

TEST(CliDeterminismTest, JobCountDoesNotChangeOutput) {
  const std::vector<std::vector<std::string>> commands{
      {"analyze", "--generate", "random:10,3,0.5,9"},
      {"analyze", "--generate", "nevo:4,4", "--format", "json"},
      {"verify", "theorem3", "--generate", "random:9,2,0.5,4"},
      {"verify", "example6", "--grid", "s=2..3,h=s-1..4"},
      {"search", "--family", "random", "--count", "10", "--seed", "17"},
  };
  for (const auto& base : commands) {
    std::string reference;
    for (const char* jobs : {"1", "2", "3"}) {
      auto args = base;
      args.push_back("--jobs");
      args.push_back(jobs);
      const Result r = invoke(args);
      if (reference.empty()) {
        reference = r.out;
      } else {
        EXPECT_EQ(r.out, reference) << base[0] << " jobs=" << jobs;
      }
    }
    EXPECT_EQ(invoke(base).out, reference);
  }
}

TEST(RunConfigTest, GridAndRangeParsing) {
  const auto grid = parse_grid("s=2..3,h=s-1..3");
  EXPECT_EQ(grid, (std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}));
  EXPECT_EQ(parse_range("4"), (std::pair<int, int>{4, 4}));
  EXPECT_EQ(parse_range("2..5"), (std::pair<int, int>{2, 5}));
  EXPECT_ANY_THROW(parse_grid("t=1"));
  EXPECT_ANY_THROW(parse_range("a..b"));
}

TEST(RunConfigTest, ForceRaisesCapToHardCeiling) {
  RunConfig c;
  EXPECT_EQ(c.limits().cap, kDefaultEnumerationCap);
  c.force = true;
  EXPECT_EQ(c.limits().cap, kHardEnumerationCap);
}

}  // namespace
}  // namespace regconn::cli
