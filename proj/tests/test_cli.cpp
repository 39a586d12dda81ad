#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cli_runner.hpp"

using testing_support::run;

namespace {

const std::string kCli = QCORE_CLI_PATH;

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qcore_cli_" + name)).string();
}

}  // namespace

TEST(Cli, Expand) {
  EXPECT_EQ(run(kCli + " expand a5bar 7").out, "1 2 4 8 14 14 20 24\n");
  EXPECT_EQ(run(kCli + " expand b5bar 10").out, "1 1 1 2 3 -1 0 2 0 -2 6\n");
  EXPECT_EQ(run(kCli + " expand c5 0").out, "1\n");
  EXPECT_EQ(run(kCli + " expand 'phi(-q^5)' -N 20").out, "1 0 0 0 0 -2 0 0 0 0 0 0 0 0 0 0 0 0 0 0 2\n");
  const auto json = run(kCli + " --format json expand a5bar 3");
  EXPECT_EQ(json.out, R"({"series":"a5bar","N":3,"coefficients":["1","2","4","8"]})" "\n");
  EXPECT_EQ(run(kCli + " expand 'phi(' 5").exit_code, 2);
}

TEST(Cli, DefaultOrderFromEnvironment) {
  const auto r = run("QCORE_DEFAULT_ORDER=4 " + kCli + " expand c5");
  EXPECT_EQ(r.out, "1 1 2 3 5\n");
}

TEST(Cli, Verify) {
  const auto r = run(kCli + " verify thm3.b5_20n_15 --order 1000");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("PASS thm3.b5_20n_15 N=1000 exact-match"), std::string::npos);
  EXPECT_EQ(run(kCli + " verify --tier core --order 1000").exit_code, 0);
  EXPECT_EQ(run(kCli + " verify no.such.id").exit_code, 2);
  EXPECT_EQ(run(kCli + " verify --kmax 1").exit_code, 2);
}

TEST(Cli, VerifyIsDeterministic) {
  const std::string cmd = kCli + " verify all -N 300 --jobs 3";
  const auto a = run(cmd), b = run(cmd);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j1 = run(kCli + " --format json verify core -N 200"), j2 = run(kCli + " verify core -N 200 --format json");
  EXPECT_EQ(j1.out, j2.out);
  EXPECT_EQ(j1.out.front(), '{');
}

TEST(Cli, FaultInjection) {
  const auto path = tmp_path("records.txt");
  {
    std::ofstream out(path);
    out << "thm1.a5n2 | relation | core | corrupted | a5(5n+2) = 3*c5(5n+1)\n";
  }
  const auto r = run(kCli + " verify thm1.a5n2 --records " + path);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("mismatch at index 0: lhs=4 rhs=3"), std::string::npos) << r.out;
  const auto p = run(kCli + " verify lemma.A4B -N 200 --perturb 77");
  EXPECT_EQ(p.exit_code, 1);
  EXPECT_NE(p.out.find("at index 77"), std::string::npos);
  EXPECT_EQ(run(kCli + " verify --records /nonexistent/file").exit_code, 3);
  std::remove(path.c_str());
}

TEST(Cli, Oracle) {
  const auto r = run(kCli + " oracle 4 5");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("c_5(4) = 5"), std::string::npos);
  EXPECT_NE(run(kCli + " oracle 0 5").out.find("c_5(0) = 1"), std::string::npos);
  EXPECT_NE(run(kCli + " oracle 9 6 --list").out.find("(4,3,1,1)"), std::string::npos);
  EXPECT_EQ(run(kCli + " oracle 61 5").exit_code, 2);
  EXPECT_EQ(run(kCli + " oracle 30 5 --ceiling 20").exit_code, 2);
}

TEST(Cli, Census) {
  const auto r = run(kCli + " census b5 -N 1000");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("N=1000"), std::string::npos);
  const auto c = run(kCli + " census c5 -N 100");
  EXPECT_NE(c.out.find("zero=0/100"), std::string::npos);
  EXPECT_EQ(run(kCli + " census zz").exit_code, 2);
}

TEST(Cli, BFile) {
  const auto path = tmp_path("a5bar.txt");
  EXPECT_EQ(run(kCli + " bfile export a5bar 100 -o " + path).exit_code, 0);
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 101u);
  EXPECT_EQ(lines[7], "7 24");
  EXPECT_EQ(run(kCli + " bfile check a5bar " + path).exit_code, 0);

  lines[6] = "6 21";
  {
    std::ofstream out(path);
    for (const auto& l : lines) out << l << '\n';
  }
  const auto bad = run(kCli + " bfile check a5bar " + path);
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.out.find("discrepancy at 6"), std::string::npos);
  EXPECT_NE(bad.out.find("expected 20"), std::string::npos);

  {
    std::ofstream out(path);
    out << "0 1\n2 4\n";
  }
  EXPECT_EQ(run(kCli + " bfile check a5bar " + path).exit_code, 3);
  EXPECT_EQ(run(kCli + " bfile check a5bar /nonexistent/file").exit_code, 3);
  EXPECT_EQ(run(kCli + " bfile export a5bar 10 -o /nonexistent/dir/x").exit_code, 3);
  std::remove(path.c_str());
}

TEST(Cli, Usage) {
  EXPECT_EQ(run(kCli).exit_code, 2);
  EXPECT_EQ(run(kCli + " frobnicate").exit_code, 2);
  EXPECT_EQ(run(kCli + " --help").exit_code, 0);
}
