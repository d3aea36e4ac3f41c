#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "reeskit/cli/commands.hpp"

using namespace reeskit;
using namespace reeskit::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "reeskit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Outcome& o) { return Json::parse(o.out); }

}  // namespace

TEST(CliPoset, FamilySpecs) {
  auto c = run_cli({"poset", "C:2"});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_EQ(json_of(c)["elements"].size(), 3U);
  EXPECT_EQ(json_of(run_cli({"poset", "NC:4"}))["elements"].size(), 14U);
  auto big = run_cli({"poset", "B:99"});
  EXPECT_EQ(big.code, kExitError);
  EXPECT_NE(big.err.find("BoundExceeded"), std::string::npos);
  EXPECT_EQ(run_cli({"poset", "Q:1"}).code, kExitError);
}

TEST(CliPoset, ReadsFiles) {
  const auto path = std::filesystem::temp_directory_path() / "reeskit_cli_test_poset.json";
  {
    std::ofstream f(path);
    f << R"({"elements":["a","b","c"],"covers":[[0,1],[0,2]]})";
  }
  auto o = run_cli({"rees", path.string(), "C:1"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(json_of(o)["elements"].size(), 5U);
  std::filesystem::remove(path);
}

TEST(CliRees, Modifiers) {
  auto fig = run_cli({"rees", "B:3", "--minus", "C:2"});
  ASSERT_EQ(fig.code, kExitOk) << fig.err;
  EXPECT_EQ(json_of(fig)["elements"].size(), 12U);
  auto same = run_cli({"rees", "C:2", "T:1,0"});
  ASSERT_EQ(same.code, kExitOk);
  EXPECT_EQ(json_of(same)["covers"], Json::parse("[[0,1],[1,2]]"));
  EXPECT_EQ(json_of(run_cli({"rees", "B:3", "--minus", "C:2", "--hat"}))["elements"].size(), 14U);
  EXPECT_EQ(json_of(run_cli({"rees", "B:3", "C:3", "--minus-result"}))["elements"].size() + 1,
            json_of(run_cli({"rees", "B:3", "C:3"}))["elements"].size());
  auto el = run_cli({"rees", "B:3", "--minus", "T:2,2", "--check-thm3.1"});
  EXPECT_EQ(el.code, kExitOk) << el.err;
}

TEST(CliRees, LengthCheckOnlyWhenAsked) {
  EXPECT_EQ(run_cli({"rees", "B:3", "C:5"}).code, kExitOk);
  auto o = run_cli({"rees", "B:3", "C:5", "--check-thm3.1"});
  EXPECT_EQ(o.code, kExitError);
  EXPECT_NE(o.err.find("LengthMismatch"), std::string::npos);
}

TEST(CliVerify, JonssonAllRoutesAgree) {
  auto o = run_cli({"verify", "jonsson", "--n", "4", "--format", "json"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  auto j = json_of(o);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["ok"], true);
  const auto& r = j["reports"][0];
  EXPECT_EQ(r["verdict"], "pass");
  std::size_t seen = 0;
  for (const auto& route : r["routes"]) {
    ASSERT_EQ(route["status"], "computed");
    if (route.contains("polynomial")) {
      EXPECT_EQ(route["polynomial"], "9");
      ++seen;
    }
    if (route.contains("values"))
      for (const auto& v : route["values"]) {
        EXPECT_EQ(v["value"], "9");
        ++seen;
      }
  }
  EXPECT_GE(seen, 3U);
}

TEST(CliVerify, NamedTargets) {
  EXPECT_EQ(run_cli({"verify", "cor7.2", "--n", "3"}).code, kExitOk);
  EXPECT_EQ(run_cli({"verify", "thm6.1", "--n", "5"}).code, kExitOk);
  EXPECT_EQ(run_cli({"verify", "lemma6.2", "prop6.3", "qan", "tree2", "eq6.3"}).code, kExitOk);
  EXPECT_EQ(run_cli({"verify", "thm3.1-el", "--poset", "NC:4"}).code, kExitOk);
  auto c = run_cli({"verify", "cor7.2", "--n", "3", "--format", "json"});
  auto j = json_of(c);
  bool found = false;
  for (const auto& route : j["reports"][0]["routes"])
    if (route.contains("values"))
      for (const auto& v : route["values"]) found = found || v["value"] == "25";
  EXPECT_TRUE(found);
}

TEST(CliVerify, FormulaVariants) {
  EXPECT_EQ(run_cli({"verify", "tree1"}).code, kExitMismatch);
  EXPECT_EQ(run_cli({"verify", "tree1", "--formula-variant", "corrected"}).code, kExitOk);
  EXPECT_EQ(run_cli({"verify", "thm5.1", "--mu", "2,2", "--formula-variant", "corrected"}).code, kExitOk);
  EXPECT_EQ(run_cli({"verify", "thm7.1", "--n", "2", "--formula-variant", "corrected"}).code, kExitOk);
  EXPECT_EQ(run_cli({"verify", "thm7.1", "--n", "2"}).code, kExitMismatch);
  EXPECT_EQ(run_cli({"verify", "tree1", "--formula-variant", "sideways"}).code, kExitError);
}

TEST(CliVerify, RouteSelectionAndBounds) {
  auto only = run_cli({"verify", "jonsson", "--routes", "formula", "--format", "json"});
  ASSERT_EQ(only.code, kExitOk);
  EXPECT_EQ(json_of(only)["reports"][0]["verdict"], "inconclusive");
  auto bounded = run_cli({"verify", "jonsson", "--bound-faces", "10", "--format", "json"});
  ASSERT_EQ(bounded.code, kExitOk);
  bool skipped = false;
  const auto report = json_of(bounded);
  for (const auto& route : report["reports"][0]["routes"])
    skipped = skipped || (route["kind"] == "homology" && route["status"] == "skipped");
  EXPECT_TRUE(skipped);
}

TEST(CliVerify, ErrorsAndListing) {
  EXPECT_EQ(run_cli({"verify", "no-such-target"}).code, kExitError);
  EXPECT_EQ(run_cli({"verify", "jonsson", "--n", "0"}).code, kExitError);
  auto list = run_cli({"verify", "--list"});
  EXPECT_EQ(list.code, kExitOk);
  for (const auto& name : target_names()) EXPECT_NE(list.out.find(name), std::string::npos);
  EXPECT_NE(run_cli({}).code, kExitOk);
}

TEST(CliVerify, Deterministic) {
  const std::vector<std::string> args{"verify", "jonsson", "thm5.1", "symm-identities", "--format", "json"};
  auto a = run_cli(args);
  auto b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
  auto csv = run_cli({"verify", "jonsson", "--n", "3", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "target,params,route,kind,status,polynomial,t,q,value,verdict");
  EXPECT_EQ(json_of(run_cli({"verify", "jonsson", "--timing", "--format", "json"}))["reports"][0].contains("wall_ms"), true);
}

TEST(CliTable, Rows) {
  auto j = run_cli({"table", "jonsson", "--n", "2..5", "--format", "csv"});
  ASSERT_EQ(j.code, kExitOk) << j.err;
  EXPECT_EQ(j.out, "n,jonsson\n2,1\n3,2\n4,9\n5,44\n");
  auto c = json_of(run_cli({"table", "cor7.2-second", "--n", "2..4", "--format", "json"}));
  EXPECT_EQ(c["schema_version"], 1);
  EXPECT_EQ(c["rows"], Json::parse(R"([["2","2"],["3","10"],["4","87"]])"));
  auto grid = run_cli({"table", "thm5.1", "--n", "4"});
  EXPECT_EQ(grid.code, kExitOk);
  EXPECT_EQ(run_cli({"table", "nope"}).code, kExitError);
  EXPECT_EQ(run_cli({"table", "jonsson", "--n", "5..2"}).code, kExitError);
}

TEST(CliHelpers, Parsing) {
  EXPECT_EQ(parse_range("4"), (std::pair<std::size_t, std::size_t>{4, 4}));
  EXPECT_EQ(parse_range("2..5"), (std::pair<std::size_t, std::size_t>{2, 5}));
  EXPECT_THROW(parse_range("x"), Error);
  EXPECT_EQ(compositions(3).size(), 4U);
  EXPECT_EQ(compositions(5).size(), 16U);
  EXPECT_EQ(parse_composition("2,1"), (WeakComposition{2, 1}));
}

TEST(CliOutput, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "reeskit_cli_test_out.txt";
  auto o = run_cli({"table", "jonsson", "--n", "3", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  EXPECT_EQ(s.str(), "n,jonsson\n3,2\n");
  std::filesystem::remove(path);
}
