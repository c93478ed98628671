#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lrs;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (std::filesystem::path(::testing::TempDir()) / name).string(); }

}  // namespace

TEST(Cli, FibonacciReport) {
  const CliResult r = run({"analyze", "--coeffs", "1,1", "--init", "0,1", "--eps", "1/10", "--nmax", "10000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["empirical"]["count"], 17);
  EXPECT_EQ(j["empirical"]["solutions"].back(), 16);
  EXPECT_EQ(j["params"]["rho"], "5");
  EXPECT_EQ(j["params"]["d"], 2);
  EXPECT_EQ(j["params"]["s"], 2);
  EXPECT_EQ(j["params"]["disc_bound"], "5");
  EXPECT_EQ(j["params"]["bound_eps"], "1/13");
  EXPECT_EQ(j["branch"], "rho!=1");
  EXPECT_EQ(j["verdict"], true);
  EXPECT_EQ(j["degenerate"]["degenerate"], false);
  const double A_lo = std::stod(j["params"]["A"]["lo"].get<std::string>());
  const double A_hi = std::stod(j["params"]["A"]["hi"].get<std::string>());
  EXPECT_GE(A_lo, 2.2360);
  EXPECT_LE(A_hi, 2.2361);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"analyze", "--coeffs", "0,4", "--init", "0,2", "--eps", "1/20"}).code, kExitDegenerate);
  EXPECT_EQ(run({"analyze", "--coeffs", "0,-1", "--init", "0,1", "--eps", "1/20"}).code, kExitDegenerate);
  EXPECT_EQ(run({"analyze", "--coeffs", "1,1", "--init", "0,0", "--eps", "1/20"}).code, kExitDegenerate);
  EXPECT_EQ(run({"analyze", "--coeffs", "1", "--init", "4", "--eps", "1/20"}).code, kExitAssumption);
  EXPECT_EQ(run({"analyze", "--coeffs", "1,1", "--init", "0,1", "--eps", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--coeffs", "1,1", "--init", "0,1", "--eps", "-1/20"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--coeffs", "1,1", "--init", "0", "--eps", "1/20"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--coeffs", "1,0", "--init", "0,1", "--eps", "1/20"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--coeffs", "1,1", "--init", "0,1"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"selftest", "--suite", "nope"}).code, kExitUsage);
}

TEST(Cli, ForcedDegenerateInputOmitsBounds) {
  const CliResult r = run({"analyze", "--coeffs", "0,4", "--init", "0,2", "--eps", "1/20", "--force", "--nmax", "50"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["degenerate"]["degenerate"], true);
  EXPECT_EQ(j["degenerate"]["witness"]["order"], 2);
  EXPECT_TRUE(j["bound_ln"].is_null());
  EXPECT_TRUE(j["verdict"].is_null());
}

TEST(Cli, ErrorEnvelopeInJsonMode) {
  const CliResult r = run({"analyze", "--coeffs", "0,4", "--init", "0,2", "--eps", "1/20"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["error"]["code"], "degenerate");
  EXPECT_FALSE(j["error"]["message"].get<std::string>().empty());
  EXPECT_NE(r.err.find("degenerate"), std::string::npos);
  const CliResult t = run({"analyze", "--coeffs", "0,4", "--init", "0,2", "--eps", "1/20", "--format", "text"});
  EXPECT_TRUE(t.out.empty());
  EXPECT_FALSE(t.err.empty());
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> a = {"analyze", "--coeffs", "1,1,1", "--init", "0,0,1", "--eps", "1/20", "--nmax", "2000"};
  EXPECT_EQ(run(a).out, run(a).out);
  const std::vector<std::string> s = {"selftest", "--suite", "laplace,growth-eq3-eq4", "--samples", "40", "--format", "json"};
  const CliResult s1 = run(s), s2 = run(s);
  EXPECT_EQ(s1.code, kExitOk);
  EXPECT_EQ(s1.out, s2.out);
}

TEST(Cli, ConfigFileFillsMissingFlags) {
  const std::string cfg = temp_path("lrs_cli_test.cfg");
  {
    std::ofstream f(cfg);
    f << "# Pell\ncoeffs=2,1\ninit=0,1\neps=1/20\nnmax=300\n";
  }
  const CliResult a = run({"analyze", "--config", cfg});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(nlohmann::json::parse(a.out)["eps"], "1/20");
  // A flag wins over the file.
  const CliResult b = run({"analyze", "--config", cfg, "--eps", "1/100"});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(nlohmann::json::parse(b.out)["eps"], "1/100");
  {
    std::ofstream f(cfg);
    f << "colour=blue\n";
  }
  EXPECT_EQ(run({"analyze", "--config", cfg}).code, kExitUsage);
}

TEST(Cli, OutputFileAndTextFormat) {
  const std::string path = temp_path("lrs_cli_report.txt");
  const CliResult r = run({"analyze", "--coeffs", "2", "--init", "3", "--eps", "1/10", "--format", "text", "--output", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("m=1 bound"), std::string::npos);
  EXPECT_NE(text.find("solutions    0"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly) {
  const CliResult r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}
