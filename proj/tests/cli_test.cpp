#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>

#include "golden_support.hpp"
#include "tropical/mathpar/cli.hpp"

namespace tropical::mathpar {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EvalMinPlus) {
  const Result r = run({"eval", "SPACE = ZMinPlus[]; 2+3;"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(r.err, "");
}

TEST(Cli, UnknownSpaceExitsWithOne) {
  const Result r = run({"eval", "SPACE = Nope[];"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("unknown space"), std::string::npos);
  EXPECT_NE(r.err.find("line 1:1"), std::string::npos);
}

TEST(Cli, RunGoldenFiles) {
  for (const auto& golden : testing::golden_cases()) {
    const Result r = run({"run", std::string(GOLDEN_DIR) + "/" + golden.name + ".mp"});
    EXPECT_EQ(r.code, 0) << golden.name << r.err;
    EXPECT_EQ(r.out, golden.expected) << golden.name;
  }
}

TEST(Cli, ReadsStdinWithoutSubcommand) {
  const Result r = run({}, "SPACE = ZMaxPlus[]; 2*3;\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5\n");
}

TEST(Cli, ResultsBeforeAnErrorAreFlushed) {
  const Result r = run({"eval", "1;\n2;\n@"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "");  // lexing fails before anything runs
  const Result late = run({"eval", "1;\n2;\n\\nope();"});
  EXPECT_EQ(late.code, 1);
  EXPECT_EQ(late.out, "1\n2\n");
  EXPECT_NE(late.err.find("line 3:1"), std::string::npos);
}

TEST(Cli, MissingFileIsAnIoError) {
  const Result r = run({"run", "/nonexistent/script.mp"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cannot read"), std::string::npos);
}

TEST(Cli, BadFlagIsAUsageError) {
  EXPECT_EQ(run({"--format", "html", "eval", "1;"}).code, 2);
  EXPECT_EQ(run({"--bogus"}).code, 2);
}

TEST(Cli, Flags) {
  const Result latex = run({"--format", "latex", "eval", "SPACE = ZMaxPlus[]; \\closure([[-1]]);"});
  EXPECT_NE(latex.out.find("pmatrix"), std::string::npos);
  const Result objective =
      run({"--show-objective", "run", std::string(GOLDEN_DIR) + "/ex9_simplex.mp"});
  EXPECT_EQ(objective.out, "[8, 4, 0]\nobjective: 28\n");
  const Result traced = run({"--trace-ops", "eval", "SPACE = ZMaxPlus[]; 2+3;"});
  EXPECT_EQ(traced.out, "3\n");
  EXPECT_NE(traced.err.find("add=1"), std::string::npos);
}

TEST(Cli, InstalledBinaryExitCodes) {
  const std::string exe = MATHPAR_EXE;
  auto shell = [&](const std::string& args) {
    std::string out;
    FILE* pipe = popen((exe + " " + args + " 2>/dev/null").c_str(), "r");
    std::array<char, 256> buf{};
    while (fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    const int status = pclose(pipe);
    return std::make_pair(WEXITSTATUS(status), out);
  };
  EXPECT_EQ(shell("eval 'SPACE = ZMinPlus[]; 2+3;'"), std::make_pair(0, std::string("2\n")));
  EXPECT_EQ(shell("eval 'SPACE = Nope[];'").first, 1);
  EXPECT_EQ(shell("run " + std::string(GOLDEN_DIR) + "/ex2_linear_equation.mp"), std::make_pair(0, std::string("[4, 3]\n")));
}

}  // namespace
}  // namespace tropical::mathpar
