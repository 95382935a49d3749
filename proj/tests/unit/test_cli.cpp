#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdl_cli/cli.hpp"

namespace {

namespace cli = qdl::cli;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qdl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  cli::RunConfig config;
  std::ostringstream out, err;
  int code = cli::parse_command_line(static_cast<int>(argv.size()), argv.data(), config, out, err);
  if (code < 0) code = cli::run(config, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"no-such-command"}).code, 2);
  EXPECT_EQ(invoke({"residue-check", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"moment-scan", "--threads", "0"}).code, 2);
  EXPECT_EQ(invoke({"moment-scan", "--grid", "1", "--x-min", "100", "--x-max", "200"}).code, 2);
  EXPECT_EQ(invoke({"lvalue"}).code, 2);
}

TEST(Cli, DomainErrorsExitTwo) {
  EXPECT_EQ(invoke({"residue-check", "--alpha", "0.7"}).code, 2);
  EXPECT_EQ(invoke({"lvalue", "-d", "3"}).code, 2);
  EXPECT_EQ(invoke({"moment-scan", "--x-max", "2e6", "--x-min", "512"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const Outcome o = invoke({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("moment-scan"), std::string::npos);
}

TEST(Cli, ResidueCheckReportsAgreement) {
  const Outcome o = invoke({"residue-check", "--alpha", "0.2", "--alpha-im", "1.0", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_LT(j.at("residue_s1_diff").get<double>(), 1e-10);
}

TEST(Cli, LValuePrintsClassicalValue) {
  const Outcome o = invoke({"lvalue", "-d", "-4", "--s-re", "1", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_NEAR(j.at("value").at("re").get<double>(), 0.78539816339744831, 1e-13);
}

TEST(Cli, MomentScanCsvLayout) {
  const Outcome o = invoke({"moment-scan", "--x-min", "256", "--x-max", "1024", "--grid", "3",
                            "--alpha", "0.2"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream lines(o.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "X,alpha_re,alpha_im,S_re,S_im,M1_re,M1_im,M2_re,M2_im,E_re,E_im,E_norm");
  std::string row;
  int count = 0;
  while (std::getline(lines, row)) {
    ++count;
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 11);
  }
  EXPECT_EQ(count, 3);
  // Summary goes to standard error when no output file is given.
  const auto summary = nlohmann::json::parse(o.err);
  EXPECT_TRUE(summary.contains("fitted_slope"));
}

TEST(Cli, MomentScanIndependentOfThreads) {
  const std::vector<std::string> base = {"moment-scan", "--x-min", "512", "--x-max", "4096",
                                         "--grid", "4", "--alpha", "0.15", "--alpha-im", "0.5"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto eight = base;
  eight.insert(eight.end(), {"--threads", "8"});
  const Outcome a = invoke(one);
  const Outcome b = invoke(eight);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, NumbersUseSeventeenDigits) {
  EXPECT_EQ(cli::format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(cli::format_double(512.0), "512");
}

}  // namespace
