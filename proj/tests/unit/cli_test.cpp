#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cyclo/cli.hpp"
#include "cyclo/error.hpp"

using namespace cyclo;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CoefficientHumanAndJson) {
  const auto human = run_cli({"coeff", "--n", "105", "--k", "7"});
  EXPECT_EQ(human.code, 0);
  EXPECT_NE(human.out.find("-2"), std::string::npos);

  const auto js = run_cli({"--format", "json", "coeff", "--n", "385", "--k", "119", "--method", "both"});
  ASSERT_EQ(js.code, 0) << js.err;
  const auto doc = json::parse(js.out);
  EXPECT_EQ(doc["config"]["command"], "coeff");
  EXPECT_EQ(doc["seed"], 42);
  EXPECT_EQ(doc["results"][0]["value"], -3);
  EXPECT_FALSE(doc["config"].contains("parallelism"));
}

TEST(Cli, NegativeIndexIsZero) {
  const auto js = run_cli({"--format", "json", "coeff", "--n", "105", "--k", "-1"});
  ASSERT_EQ(js.code, 0) << js.err;
  EXPECT_EQ(json::parse(js.out)["results"][0]["value"], 0);
}

TEST(Cli, CsvProfile) {
  const auto csv = run_cli({"--format", "csv", "coeff", "--n", "15"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("k,value\n0,1\n1,-1\n", 0), 0U);
  std::int64_t lines = 0;
  for (char c : csv.out) lines += c == '\n';
  EXPECT_EQ(lines, 1 + 9);
}

TEST(Cli, HeightAndMpq) {
  const auto h = run_cli({"--format", "json", "height", "--n", "125609"});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(json::parse(h.out)["results"][0]["height"], 7);

  const auto m = run_cli({"--format", "json", "mpq", "--p", "11", "--q", "19"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_NE(m.out.find("601"), std::string::npos);
}

TEST(Cli, Table1Passes) {
  const auto t = run_cli({"table1"});
  EXPECT_EQ(t.code, 0) << t.out << t.err;
}

TEST(Cli, VerifyJsonIsDeterministicAcrossParallelism) {
  const auto a = run_cli({"--format", "json", "--parallelism", "1", "verify", "--suite", "sum-zero", "--trials", "10"});
  const auto b = run_cli({"--format", "json", "--parallelism", "4", "verify", "--suite", "sum-zero", "--trials", "10"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto c = run_cli({"--format", "json", "--seed", "7", "verify", "--suite", "sum-zero", "--trials", "10"});
  EXPECT_EQ(json::parse(c.out)["seed"], 7);
}

TEST(Cli, AnalyzeRuns) {
  const auto a = run_cli({"--format", "json", "analyze", "--p", "7", "--q", "17", "--r", "23"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_TRUE(json::parse(a.out).contains("results"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"coeff", "--n", "8"}).code, 4);
  EXPECT_EQ(run_cli({"coeff", "--n", "1155", "--k", "1"}).code, 4);
  EXPECT_EQ(run_cli({"coeff", "--n", "6", "--k", "1", "--method", "chi"}).code, 4);
  EXPECT_EQ(run_cli({"bogus"}).code, 4);
  EXPECT_EQ(run_cli({}).code, 4);
  EXPECT_EQ(run_cli({"mpq", "--p", "7", "--q", "5"}).code, 4);
  EXPECT_EQ(run_cli({"--degree-cap", "10", "height", "--n", "105"}).code, 3);
  const auto bad = run_cli({"coeff", "--n", "8"});
  EXPECT_EQ(bad.err.rfind("error: ", 0), 0U);

  EXPECT_EQ(cli::exit_code_for(ErrorCode::Mismatch), 2);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::BoundViolated), 1);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::InternalInconsistency), 1);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::DegreeCapExceeded), 3);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::SearchExhausted), 3);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::Overflow), 3);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::NotPrime), 4);
}
