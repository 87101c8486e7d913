#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "jtheta/distribution.hpp"
#include "oracles.hpp"

namespace cli = jtheta::cli;
namespace fs = std::filesystem;
using jtheta::testing::kPi;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  std::string l;
  while (std::getline(is, l)) v.push_back(l);
  return v;
}

std::vector<double> numbers(const std::string& s) {
  std::vector<double> v;
  for (const auto& l : lines(s)) v.push_back(std::stod(l));
  return v;
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("jtheta_cli_test_" + name); }

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CliEval, CdfWithLognormalColumns) {
  const auto r = run({"eval", "--m", "7", "--what", "cdf", "--from", "0.1", "--to", "60", "--points", "200",
                      "--with-lognormal"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 201u);
  EXPECT_EQ(ls[0], "x,exact,lognormal");
  EXPECT_EQ(ls[200].substr(0, 3), "60,");
}

TEST(CliEval, OffSupportIsZero) {
  const auto r = run({"eval", "--m", "1", "--what", "cdf", "--from", "-1", "--to", "-0.5", "--points", "5"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);
  for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_EQ(ls[i].substr(ls[i].find(',')), ",0");
}

TEST(CliEval, SpectrumJson) {
  const auto r = run({"eval", "--m", "7", "--what", "spectrum", "--from", "-10", "--to", "10", "--points", "400",
                      "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 400u);
  EXPECT_EQ(j["what"], "spectrum");
  const auto& mid = j["rows"][200];
  EXPECT_TRUE(mid.contains("magnitude_sq"));
  EXPECT_TRUE(mid.contains("phase"));
}

TEST(CliEval, AsymptoticColumnBlankPastDomain) {
  const auto r = run({"eval", "--m", "1", "--what", "cdf", "--from", "1", "--to", "10", "--points", "10",
                      "--with-asymptotic"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto ls = lines(r.out);
  EXPECT_NE(ls[1].back(), ',');  // x = 1 is inside (0, pi^2/2]
  EXPECT_EQ(ls[10].back(), ',');  // x = 10 is outside
}

TEST(CliEval, RoundTripPrecision) {
  const auto r = run({"eval", "--m", "1", "--what", "quantile", "--from", "0.5", "--to", "0.5", "--points", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto ls = lines(r.out);
  const double q = std::stod(ls[1].substr(ls[1].find(',') + 1));
  EXPECT_EQ(q, jtheta::quantile(jtheta::ThetaParam(1.0), 0.5));
}

TEST(CliEval, ErrorsNameTheRow) {
  auto r = run({"eval", "--m", "1", "--what", "mgf", "--from", "0.5", "--to", "2", "--points", "4"});
  EXPECT_EQ(r.code, cli::kDomain);
  EXPECT_NE(r.err.find("row 2"), std::string::npos) << r.err;
  r = run({"eval", "--m", "1", "--from", "2", "--to", "1"});
  EXPECT_EQ(r.code, cli::kUsage);
  r = run({"eval", "--m", "0"});
  EXPECT_EQ(r.code, cli::kDomain);
  r = run({"eval", "--m", "1", "--what", "bogus"});
  EXPECT_EQ(r.code, cli::kUsage);
}

TEST(CliSample, DeterministicAndCorrectMean) {
  const std::vector<std::string> args = {"sample", "--m", "7", "--n", "20000", "--seed", "42", "--method", "series",
                                         "--k", "2000"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto v = numbers(a.out);
  ASSERT_EQ(v.size(), 20000u);
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  EXPECT_NEAR(mean, 7.0 * kPi * kPi / 6.0, 0.01 * 7.0 * kPi * kPi / 6.0);
}

TEST(CliSample, SeedFromEnvironment) {
  ::setenv("JTHETA_SEED", "42", 1);
  const auto env = run({"sample", "--m", "2", "--n", "10"});
  ::unsetenv("JTHETA_SEED");
  const auto flag = run({"sample", "--m", "2", "--n", "10", "--seed", "42"});
  EXPECT_EQ(env.out, flag.out);
  ::setenv("JTHETA_SEED", "abc", 1);
  EXPECT_EQ(run({"sample", "--n", "1"}).code, cli::kUsage);
  ::unsetenv("JTHETA_SEED");
}

TEST(CliSample, UsageErrors) {
  EXPECT_EQ(run({"sample", "--n", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"sample", "--n", "10", "--method", "magic"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"sample", "--n", "1", "--output", "/nonexistent-dir/x"}).code, cli::kIo);
}

TEST(CliFit, PipelineRecoversM) {
  const auto s = run({"sample", "--m", "7", "--n", "100000", "--seed", "3"});
  ASSERT_EQ(s.code, cli::kOk);
  const auto f = run({"fit", "--method", "all"}, s.out);
  ASSERT_EQ(f.code, cli::kOk) << f.err;
  const auto j = nlohmann::json::parse(f.out);
  EXPECT_EQ(j["n"], 100000);
  ASSERT_EQ(j["estimates"].size(), 3u);
  for (const auto& e : j["estimates"]) {
    EXPECT_NEAR(e["m_hat"].get<double>(), 7.0, 0.02 * 7.0) << e["method"];
  }
}

TEST(CliFit, ErrorsNameTheLine) {
  auto r = run({"fit"}, "1.5\n2.0\n-3\n");
  EXPECT_EQ(r.code, cli::kDomain);
  EXPECT_NE(r.err.find(":3:"), std::string::npos) << r.err;
  r = run({"fit"}, "1.5\n\n# note\nabc\n");
  EXPECT_EQ(r.code, cli::kIo);
  EXPECT_NE(r.err.find(":4:"), std::string::npos) << r.err;
  r = run({"fit"}, "");
  EXPECT_EQ(r.code, cli::kDomain);
  r = run({"fit", "--input", "/nonexistent-file"});
  EXPECT_EQ(r.code, cli::kIo);
}

TEST(CliFit, AsymptoticOutsideDomain) {
  const auto r = run({"fit", "--method", "asymptotic", "--u", "0.99"}, "1\n2\n3\n");
  EXPECT_EQ(r.code, cli::kDomain);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["estimates"][0].contains("error"));
}

TEST(CliStudy, SmokeDeterministicFiles) {
  const auto raw1 = temp_path("raw1.csv"), sum1 = temp_path("sum1.csv");
  const auto raw2 = temp_path("raw2.csv"), sum2 = temp_path("sum2.csv");
  auto r = run({"--quiet", "study", "--m", "7", "--n", "100", "--replicates", "10", "--seed", "1", "--raw",
                raw1.string(), "--summary", sum1.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(r.err.empty());
  r = run({"study", "--m", "7", "--n", "100", "--replicates", "10", "--seed", "1", "--raw", raw2.string(),
           "--summary", sum2.string(), "--threads", "3"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(slurp(raw1), slurp(raw2));
  EXPECT_EQ(slurp(sum1), slurp(sum2));
  const auto ls = lines(slurp(raw1));
  ASSERT_EQ(ls.size(), 31u);
  EXPECT_EQ(ls[0], "replicate,method,m_hat");
  const auto ss = lines(slurp(sum1));
  EXPECT_EQ(ss.size(), 1u + 3u * 100u);
  for (const auto& p : {raw1, sum1, raw2, sum2}) fs::remove(p);
}

TEST(CliApp, RfReportsUnitM) {
  const auto r = run({"app", "rf", "--d", "1", "--lambda", "0.0795775"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 2u);
  EXPECT_EQ(ls[0], "quantity,value");
  EXPECT_NEAR(std::stod(ls[1].substr(2)), 1.0, 1e-6);
}

TEST(CliApp, PointsAndCoverage) {
  auto r = run({"app", "points", "--count", "1000", "--kind", "constant", "--seed", "7"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1001u);
  EXPECT_EQ(ls[0], "x,y");
  r = run({"app", "coverage", "--z", "1", "--lambda", "0.01", "--d", "1", "--m", "3,5,7,9", "--t-from", "0.01",
           "--t-to", "100", "--points", "20"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  ls = lines(r.out);
  ASSERT_EQ(ls.size(), 81u);
  EXPECT_EQ(ls[0], "m,t,probability");
}

TEST(CliApp, ConfigFileWithFlagOverride) {
  const auto path = temp_path("scenario.cfg");
  {
    std::ofstream f(path);
    f << "# efield scenario\nd = 1\nlambda = 1\nepsilon0 = 8.8541878128e-12\n";
  }
  auto r = run({"app", "efield", "--config", path.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto ls = lines(r.out);
  EXPECT_NEAR(std::stod(ls[1].substr(2)), 8.9875517923e9, 1e-9 * 8.9875517923e9);
  r = run({"app", "efield", "--config", path.string(), "--epsilon0", "1"});
  ls = lines(r.out);
  EXPECT_NEAR(std::stod(ls[1].substr(2)), 1.0 / (4.0 * kPi), 1e-15);
  {
    std::ofstream f(path);
    f << "speed = 3\n";
  }
  EXPECT_EQ(run({"app", "gravity", "--config", path.string()}).code, cli::kIo);
  fs::remove(path);
  EXPECT_EQ(run({"app", "gravity", "--d", "2", "--lambda", "0.5"}).code, cli::kOk);
  EXPECT_EQ(run({"app", "gravity", "--d", "x"}).code, cli::kUsage);
  EXPECT_EQ(run({"app", "teleport"}).code, cli::kUsage);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("eval"), std::string::npos);
}
