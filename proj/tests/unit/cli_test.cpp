#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "kwise/verify/json_io.hpp"

namespace kwise {
namespace {

using io::Json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Rational exact(const Json& j) { return io::rational_from_json(j); }
Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

TEST(Cli, Gram) {
  const CliRun r = run({"gram", "--n", "4", "--max-deg", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "gram");
  EXPECT_EQ(j["rows"][2]["psi"]["text"], "t^2 - 5/16");
  EXPECT_EQ(exact(j["rows"][2]["norm_sq"]), q(1, 16));
  EXPECT_TRUE(j["verdicts"][0]["passed"].get<bool>());
  EXPECT_EQ(Json::parse(run({"gram", "--n", "2", "--max-deg", "1"}).out)["rows"][1]["psi"]["text"], "t");
}

TEST(Cli, UsageErrors) {
  const CliRun r = run({"gram", "--n", "4", "--max-deg", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("max-deg must be < n"), std::string::npos);
  EXPECT_EQ(run({"approx", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"pair", "--n", "4", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"pair", "--n", "12", "--k", "11", "--tv", "enumerate"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"gram", "--n", "4", "--max-deg", "1", "--format", "xml"}).code, 2);
}

TEST(Cli, Approx) {
  auto eps = [](std::vector<std::string> args) {
    const CliRun r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return exact(Json::parse(r.out)["rows"][0]["epsilon"]);
  };
  EXPECT_EQ(eps({"approx", "--n", "4", "--k", "2", "--grid", "in", "--method", "lp"}), q(1, 4));
  EXPECT_EQ(eps({"approx", "--n", "2", "--k", "2", "--grid", "out", "--method", "truncate"}), q(2, 3));
  EXPECT_EQ(eps({"approx", "--n", "2", "--k", "2", "--grid", "out", "--method", "lp"}), q(1, 2));
  const Json j = Json::parse(run({"approx", "--n", "2", "--k", "2", "--grid", "out", "--method", "truncate"}).out);
  EXPECT_EQ(j["rows"][0]["approximant"]["text"], "2/3");
  EXPECT_EQ(exact(j["rows"][0]["uniform_reference"]), q(1, 2));
}

TEST(Cli, SymmAndPair) {
  const Json pw = Json::parse(run({"symm", "pw", "--n", "4", "--k", "2", "--w", "1"}).out);
  EXPECT_EQ(exact(pw["rows"][0]["leading_abs"]), q(2, 3));
  EXPECT_EQ(exact(pw["rows"][0]["closed_form"]), q(2, 3));
  EXPECT_EQ(Json::parse(run({"symm", "argmax", "--n", "6", "--k", "2"}).out)["rows"][0]["argmax_w"], 1);

  const Json a = Json::parse(run({"pair", "--n", "4", "--k", "2", "--w", "1"}).out);
  EXPECT_EQ(exact(a["rows"][0]["advantage"]), q(2, 3));
  EXPECT_EQ(exact(a["rows"][0]["mu"][2]), q(1));
  const Json b = Json::parse(run({"pair", "--n", "4", "--k", "2", "--tv", "enumerate"}).out);
  EXPECT_EQ(exact(b["rows"][0]["tv"]), q(2, 3));
  EXPECT_EQ(b["rows"][0]["test"]["accept_weights"], Json::array({1}));
  const Json c = Json::parse(run({"pair", "--n", "2", "--k", "2", "--tv", "enumerate"}).out);
  EXPECT_EQ(exact(c["rows"][0]["tv"]), q(1));
  const Json d = Json::parse(run({"pair", "--n", "4", "--k", "2", "--best-w"}).out);
  EXPECT_EQ(d["rows"][0]["w"], 1);
}

TEST(Cli, BoundsFindingExitCode) {
  EXPECT_EQ(run({"bounds", "--n", "4", "--k", "2"}).code, 0);
  // The constant-free lower bound at w = k/2 fails at (10, 8).
  const CliRun r = run({"bounds", "--n", "10", "--k", "8"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(Json::parse(r.out)["rows"][0]["lower_bound_holds"].get<bool>());
}

TEST(Cli, VerifyAndDeterminism) {
  const std::vector<std::string> args = {"verify", "--suite", "duality", "--n-max", "6"};
  const CliRun a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  std::vector<std::string> par = args;
  par.insert(par.end(), {"--jobs", "3"});
  EXPECT_EQ(run(par).out, a.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["rows"].size(), 77u);  // sum over n <= 6, 1 <= k <= n of (k + 1)
  for (const auto& row : j["rows"]) EXPECT_TRUE(row["holds"].get<bool>());
  EXPECT_EQ(run({"verify", "--suite", "appendix", "--n-max", "1000"}).code, 0);
}

TEST(Cli, CsvRoundTripAndOutFile) {
  const CliRun r = run({"approx", "--n", "4", "--k", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_NE(header.find("epsilon,epsilon_exact"), std::string::npos);
  EXPECT_NE(row.find(",0.25,1/4,"), std::string::npos);
  EXPECT_EQ(Rational::parse("1/4"), q(1, 4));

  const std::string path = testing::TempDir() + "kwise_cli_out.json";
  ASSERT_EQ(run({"grid", "--n", "3", "--grid", "out", "--out", path}).code, 0);
  std::ifstream f(path);
  const Json j = Json::parse(f);
  EXPECT_EQ(j["rows"].size(), 4u);
  EXPECT_TRUE(j["verdicts"][0]["passed"].get<bool>());
  std::remove(path.c_str());
}

}  // namespace
}  // namespace kwise
