#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "flagstar_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "flagstar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = flagstar::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, RelationsN2) {
  const auto r = run({"relations", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("R2 = -q1*q2"), std::string::npos);
  EXPECT_NE(r.out.find("R1 = X1*X2 + q1 + q2"), std::string::npos);
}

TEST(Cli, RelationsChartY) {
  const auto r = run({"relations", "--n", "2", "--chart", "2", "--presentation", "Y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("R1 = -Y1^2 + q1"), std::string::npos);
  EXPECT_EQ(r.out.find("R2"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"relations"}).code, 2);
  EXPECT_EQ(run({"relations", "--n", "6"}).code, 2);
  EXPECT_EQ(run({"--n", "3"}).code, 2);
  EXPECT_EQ(run({"bogus", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "3", "--checks", "nope"}).code, 2);
  EXPECT_EQ(run({"star-table", "--n", "3", "--chart", "1"}).code, 2);
  EXPECT_EQ(run({"relations", "--n", "3", "--chart", "4"}).code, 2);
  EXPECT_EQ(run({"relations", "--n", "3", "--format", "latex"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"repr", "--n", "5"}).code, 2);
  const auto slow = run({"star-table", "--n", "5"});
  EXPECT_EQ(slow.code, 2);
  EXPECT_NE(slow.err.find("--allow-slow"), std::string::npos);
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(run({"--help"}).code, 0);
  const auto v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(flagstar::cli::kToolVersion), std::string::npos);
}

TEST(Cli, ReprLatex) {
  const auto r = run({"repr", "--n", "3", "--format", "latex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("X_1^2X_2+q_1X_1-q_3X_2"), std::string::npos);
  EXPECT_NE(r.out.find("X_1X_2+q_1"), std::string::npos);
}

TEST(Cli, ReprJson) {
  const auto r = run({"repr", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"312\": \"X1^2 - q1 - q3\""), std::string::npos);
}

TEST(Cli, QuantumAndStarTables) {
  const auto q = run({"quantum-table", "--n", "3"});
  EXPECT_EQ(q.code, 0);
  EXPECT_NE(q.out.find("\"213,213\""), std::string::npos);
  const auto s = run({"star-table", "--n", "2"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("\"12\": \"q1 + q2\""), std::string::npos);
  const auto c = run({"quantum-table", "--n", "2", "--chart", "2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("\"12\": \"q1\""), std::string::npos);
}

TEST(Cli, VerifyAllN3) {
  const auto r = run({"verify", "--n", "3", "--checks", "all"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::size_t named = 0;
  for (std::size_t pos = 0; (pos = r.out.find("\"name\"", pos)) != std::string::npos; ++pos) ++named;
  EXPECT_GE(named, 7u);
  EXPECT_EQ(r.out.find("\"fail\""), std::string::npos);
  EXPECT_EQ(r.out.find("elapsed_seconds"), std::string::npos);
  EXPECT_NE(run({"verify", "--n", "2", "--checks", "frobenius", "--timings"}).out.find("elapsed_seconds"),
            std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* cmd : {"star-table", "repr", "verify"}) {
    const auto a = run({cmd, "--n", "3"});
    const auto b = run({cmd, "--n", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST(Cli, OutWritesFile) {
  const auto path = (std::filesystem::temp_directory_path() / "flagstar_cli_test.json").string();
  std::filesystem::remove(path);
  const auto r = run({"relations", "--n", "3", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), run({"relations", "--n", "3"}).out);
  std::filesystem::remove(path);
}
