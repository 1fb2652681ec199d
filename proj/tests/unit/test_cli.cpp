#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = c3k::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyJson) {
  auto r = run({"verify", "--id", "eq-italy", "--digits", "40", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["reports"][0]["status"], "PASS");
  EXPECT_EQ(j["suite"]["digits"], 40);
  EXPECT_TRUE(j["reports"][0]["lhs"].is_string());
  EXPECT_TRUE(j["reports"][0]["tail"].is_string());
}

TEST(Cli, JsonRoundTripsByteIdentical) {
  auto r = run({"verify-all", "--digits", "20", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out);
}

TEST(Cli, Scan) {
  auto r = run({"scan"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 9U);
  EXPECT_EQ(lines.front(), "27/4");
  EXPECT_EQ(lines.back(), "17/12");
}

TEST(Cli, DivergentIsSkippedWithExitZero) {
  auto r = run({"verify", "--id", "xy-27-neg8-a2", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SKIPPED_DIVERGENT"), std::string::npos);
}

TEST(Cli, CsvColumns) {
  auto r = run({"verify", "--id", "eq-6", "--format", "csv"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "id,status,matched_digits,terms_used,tail,elapsed_ms");
}

TEST(Cli, MarkdownTruncates) {
  auto r = run({"verify", "--id", "eq-6", "--digits", "40"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("…"), std::string::npos);
  EXPECT_EQ(c3k::cli::md_value(c3k::Real(1L, 64), 5), "1.0000");
}

TEST(Cli, UsageErrors) {
  auto r = run({"verify", "--id", "eq-italy", "--digits", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--digits"), std::string::npos);
  r = run({"verify", "--id", "eq-italy", "--max-terms", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--max-terms"), std::string::npos);
  r = run({"verify", "--id", "eq-italy", "--format", "xml"});
  EXPECT_EQ(r.code, 2);
  r = run({"verify", "--id", "no-such"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--id"), std::string::npos);
  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  r = run({"sweep", "--family", "THM99"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--family"), std::string::npos);
  r = run({"sweep", "--family", "THM1_FIB", "--r", "5:2"});
  EXPECT_EQ(r.code, 2);
  r = run({"check-derivatives", "--x", "1", "--y", "1"});
  EXPECT_EQ(r.code, 2);
  r = run({"verify-all", "--catalog", "/nonexistent/catalog.json"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, SweepExitCodes) {
  EXPECT_EQ(run({"sweep", "--family", "THM1_FIB", "--r", "1:3"}).code, 0);
  EXPECT_EQ(run({"sweep", "--family", "THM1_LUC", "--r", "1:2"}).code, 1);
  EXPECT_EQ(run({"sweep", "--family", "THM7_LUC", "--pq", "-2,5;-3,6", "--digits", "25"}).code, 0);
  EXPECT_EQ(run({"sweep", "--family", "HORADAM_A1", "--r", "1:2", "--horadam", "2,1,0,1", "--digits", "20"}).code, 0);
  EXPECT_EQ(run({"sweep", "--family", "THM3_V5", "--n", "2:4", "--m", "2:2", "--jobs", "2"}).code, 0);
  EXPECT_EQ(run({"sweep", "--family", "THM3_V5", "--n", "2:4", "--jobs", "2"}).code, 1);
}

TEST(Cli, CheckDerivatives) {
  auto r = run({"check-derivatives", "--level", "B_to_C", "--x", "27", "--y", "8", "--digits", "40"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, EvalAndList) {
  auto r = run({"eval", "--expr", "pi^2/6 - log(3)^2/2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["value"].get<std::string>().substr(0, 10), "1.04145958");
  r = run({"eval", "--id", "eq-italy"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rhs:"), std::string::npos);
  r = run({"eval", "--z", "54/25", "--weight", "fib:1", "--digits", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"eval"}).code, 2);
  r = run({"list", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("eq-italy,geometric"), std::string::npos);
}

TEST(Cli, OutFileAndCatalogOverride) {
  const std::string cat = testing::TempDir() + "c3k_cat.json";
  const std::string out = testing::TempDir() + "c3k_out.json";
  {
    std::ofstream f(cat);
    f << R"({"version":1,"records":[{"id":"t","lhs":{"z":"8/3","a":2},"rhs":"pi^2/6 - log(3)^2/2"}]})";
  }
  auto r = run({"verify-all", "--catalog", cat, "--format", "json", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(out);
  auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j["suite"]["pass"], 1);
  std::remove(cat.c_str());
  std::remove(out.c_str());
}
