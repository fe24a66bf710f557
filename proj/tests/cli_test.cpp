#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

using pascalrows::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST(Cli, CountWorkedExampleEveryMethod) {
  for (const char* method : {"theorem1", "recurrence", "brute", "bigint", "formula"}) {
    auto r = run({"count", "--p", "5", "--alpha", "2", "--n", "1947", "--method", method});
    EXPECT_EQ(r.code, 0) << method << r.err;
    EXPECT_EQ(r.out, "816\n") << method;
  }
  EXPECT_EQ(run({"count", "--p", "5", "--alpha", "2", "--n", "1947"}).out, "816\n");
}

TEST(Cli, CountModulusOne) {
  for (const char* method : {"theorem1", "recurrence", "brute", "bigint", "formula"}) {
    auto r = run({"count", "--p", "7", "--alpha", "0", "--n", "100", "--method", method});
    EXPECT_EQ(r.code, 0) << method;
    EXPECT_EQ(r.out, "0\n") << method;
  }
}

TEST(Cli, CountHugeRowWithRecurrence) {
  auto r = run({"count", "--p", "2", "--alpha", "1", "--n", "1267650600228229401496703205375"});  // 2^100 - 1
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1267650600228229401496703205376\n");
  EXPECT_EQ(run({"count", "--p", "2", "--alpha", "2", "--n", "1267650600228229401496703205375", "--method", "brute"}).code,
            3);
}

TEST(Cli, DomainAndUsageErrors) {
  auto nonprime = run({"count", "--p", "6", "--alpha", "2", "--n", "10"});
  EXPECT_EQ(nonprime.code, 1);
  EXPECT_NE(nonprime.err.find("not prime"), std::string::npos);
  EXPECT_TRUE(nonprime.out.empty());
  EXPECT_EQ(run({"count", "--p", "5", "--alpha", "2", "--n", "-3"}).code, 1);
  EXPECT_EQ(run({"count", "--p", "5", "--alpha", "2", "--n", "12x"}).code, 1);
  EXPECT_EQ(run({"count", "--p", "5", "--alpha", "2", "--n", "3", "--bogus"}).code, 1);
  EXPECT_EQ(run({"count", "--p", "5", "--alpha", "2", "--n", "3", "--method", "magic"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  auto bad_range = run({"table", "--p", "2", "--alpha", "2", "--from", "9", "--to", "3"});
  EXPECT_EQ(bad_range.code, 1);
  EXPECT_NE(bad_range.err.find("empty range"), std::string::npos);
}

TEST(Cli, Formula) {
  auto text = run({"formula", "--p", "2", "--alpha", "2", "--format", "text"});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out, "a_4(n)/2^|n|_1 = 1 + 1/2*|10|\n");
  auto json = run({"formula", "--p", "2", "--alpha", "3", "--format", "json"});
  EXPECT_EQ(pascalrows::deserialize_formula(json.out), pascalrows::generate_formula(2, 3));

  auto path = std::filesystem::temp_directory_path() / "pascalrows_cli_formula.tex";
  auto latex = run({"formula", "--p", "3", "--alpha", "2", "--format", "latex", "--out", path.string()});
  EXPECT_EQ(latex.code, 0);
  EXPECT_TRUE(latex.out.empty());
  EXPECT_EQ(slurp(path).rfind("a_9(n) = 2^{|n|_1} 3^{|n|_2} \\left(1 + |n|_{10}", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, FormulaBudgetFromEnvironment) {
  ::setenv("PASCALROWS_BUDGET", "10", 1);
  auto r = run({"formula", "--p", "2", "--alpha", "5"});
  ::unsetenv("PASCALROWS_BUDGET");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget of 10"), std::string::npos) << r.err;
  ::setenv("PASCALROWS_BUDGET", "lots", 1);
  EXPECT_EQ(run({"formula", "--p", "2", "--alpha", "2"}).code, 1);
  ::unsetenv("PASCALROWS_BUDGET");
}

TEST(Cli, Verify) {
  auto r = run({"verify", "--p", "3", "--alpha", "3", "--n-max", "1000"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ok: p=3 alpha=3 n=0..1000"), std::string::npos);
  EXPECT_EQ(run({"verify", "--p", "2", "--alpha", "0", "--n-max", "50"}).code, 0);
}

TEST(Cli, TableIsDeterministicTsv) {
  std::vector<std::string> args{"table", "--p", "2", "--alpha", "2", "--from", "0", "--to", "5"};
  auto a = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "n\tcount\n0\t1\n1\t2\n2\t3\n3\t4\n4\t3\n5\t6\n");
  EXPECT_EQ(run(args).out, a.out);
}

TEST(Cli, BorrowsAndRatio) {
  EXPECT_EQ(run({"borrows", "--base", "2", "--n", "4", "--m", "1"}).out, "2\n");
  EXPECT_EQ(run({"borrows", "--base", "2", "--n", "2", "--m", "3"}).out, "2\n");
  EXPECT_EQ(run({"borrows", "--base", "1", "--n", "2", "--m", "3"}).code, 1);
  EXPECT_EQ(run({"ratio", "--base", "2", "--n", "4", "--beta", "1"}).out, "1/2\n");
  EXPECT_EQ(run({"ratio", "--base", "10", "--n", "4", "--beta", "0"}).out, "1\n");
}

TEST(Cli, Rank) {
  auto path = std::filesystem::temp_directory_path() / "pascalrows_kernel.tsv";
  auto r = run({"rank", "--p", "2", "--alpha", "2", "--depth", "4", "--n-max", "64", "--tsv", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "experimental estimate: rank 3 (converged; ranks by depth 1,2,3,3,3; conjectured 2*alpha-1 = 3)\n");
  EXPECT_EQ(slurp(path).rfind("e\ti\tn=0\t", 0), 0u);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"rank", "--p", "7", "--alpha", "2", "--depth", "9"}).code, 3);
}
