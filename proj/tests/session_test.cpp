#include <gtest/gtest.h>

#include <future>

#include "golden_support.hpp"
#include "tropical/mathpar/session.hpp"

namespace tropical::mathpar {
namespace {

using Lines = std::vector<std::string>;

std::string joined(const Lines& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

ScriptError error_of(std::string_view source) {
  try {
    evaluate(source);
  } catch (const ScriptError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << source;
  return ScriptError(Phase::Eval, {}, "");
}

TEST(Session, GoldenScripts) {
  const auto cases = testing::golden_cases();
  ASSERT_EQ(cases.size(), 9U);
  for (const auto& golden : cases) EXPECT_EQ(joined(evaluate(golden.script)), golden.expected) << golden.name;
}

TEST(Session, ScalarArithmeticPerSpace) {
  EXPECT_EQ(evaluate("SPACE = ZMaxPlus[]; 2+3; 2*3;"), (Lines{"3", "5"}));
  EXPECT_EQ(evaluate("SPACE = ZMinPlus[]; 2+3; 2*3;"), (Lines{"2", "5"}));
  EXPECT_EQ(evaluate("2+3; 2*3; 1/2 + 1/3; 7 - 10;"), (Lines{"5", "6", "5/6", "-3"}));
  EXPECT_EQ(evaluate("SPACE = QMaxPlus[]; 1/2 * 1/3;"), (Lines{"5/6"}));
  EXPECT_EQ(evaluate("SPACE = R64[]; 1.5 + 2;"), (Lines{"3.5"}));
  EXPECT_EQ(evaluate("SPACE = ZMinPlus[]; inf + 4; \xE2\x88\x9E;"), (Lines{"4", "\\infty"}));
}

TEST(Session, MatrixArithmetic) {
  EXPECT_EQ(evaluate("SPACE = ZMaxPlus[]; A = [[1, 2],[3, 0]]; A * [4, 3];"), (Lines{"[5, 7]"}));
  EXPECT_EQ(evaluate("SPACE = ZMaxPlus[]; [[1, 2]] + [[3, 0]];"), (Lines{"[[3, 2]]"}));
  EXPECT_EQ(evaluate("SPACE = ZMaxPlus[]; 2 * [[1, -\\infty]];"), (Lines{"[[3, -\\infty]]"}));
}

TEST(Session, AssignmentsPrintOnlyCommandResults) {
  EXPECT_EQ(evaluate("SPACE = ZMaxPlus[]; a = 2; b = \\closure(-1); a;"), (Lines{"0", "2"}));
}

TEST(Session, ClosureOfMatrixWithPositiveCycle) {
  EXPECT_EQ(evaluate("SPACE = ZMaxPlus[]; \\closure([[0, 1], [1, 0]]);"), (Lines{"\\infty"}));
}

TEST(Session, BellmanCommands) {
  EXPECT_EQ(evaluate("SPACE = ZMaxPlus[]; A=[[-1,-2],[-3,-4]]; \\BellmanEquation(A, [0, 0]); \\BellmanInequality(A);"),
            (Lines{"[0, 0]", "[[0, -2], [-3, 0]]"}));
  EXPECT_EQ(evaluate("SPACE = ZMinPlus[]; \\BellmanEquation([[0,1],[2,0]]);"), (Lines{"[[0, 1], [2, 0]]"}));
}

TEST(Session, SimplexForms) {
  EXPECT_EQ(evaluate("SPACE = Q[]; \\SimplexMax([[1]], [-1], [1]);"), (Lines{"Infeasible"}));
  EXPECT_EQ(evaluate("SPACE = Q[]; \\SimplexMax([[1, -1]], [1], [1, 1]);"), (Lines{"Unbounded"}));
  // min x1 + 2 x2  s.t.  x1 <= 5,  x1 - x2 = 1,  x1 + x2 >= 3
  EXPECT_EQ(evaluate("\\SimplexMin([[1, 0]], [[1, -1]], [[1, 1]], [5], [1], [3], [1, 2]);"), (Lines{"[2, 1]"}));
  EXPECT_EQ(evaluate("\\SimplexMax((), [[1, 1]], (), [4], [1, 2]);"), (Lines{"[0, 4]"}));
  RenderOptions with_objective;
  with_objective.show_objective = true;
  EXPECT_EQ(evaluate("SPACE = R64[]; \\SimplexMax([[1, 1, 3], [2, 2, 5], [4, 1, 2]], [30, 24, 36], [3, 1, 2]);",
                     with_objective),
            (Lines{"[8, 4, 0]\nobjective: 28"}));
}

TEST(Session, SolveIntervals) {
  EXPECT_EQ(evaluate("SPACE = Q[x]; \\solve([x >= 0, x <= 0]);"), (Lines{"[0, 0]"}));
  EXPECT_EQ(evaluate("SPACE = Q[x]; \\solve([x > 1, x < 0]);"), (Lines{"\\emptyset"}));
  EXPECT_EQ(evaluate("SPACE = Q[x]; \\solve([2*x - 1 >= 0]);"), (Lines{"[1/2, \\infty)"}));
}

TEST(Session, LatexFormat) {
  RenderOptions latex;
  latex.format = Format::Latex;
  const auto lines = evaluate("SPACE = ZMinPlus[]; A=[[0,1],[2,0]]; \\closure(A);", latex);
  ASSERT_EQ(lines.size(), 1U);
  EXPECT_NE(lines[0].find("pmatrix"), std::string::npos);
}

TEST(Session, Errors) {
  EXPECT_NE(error_of("SPACE = Nope[];").message().find("unknown space"), std::string::npos);
  EXPECT_NE(error_of("\\frobnicate(1);").message().find("unknown command"), std::string::npos);
  EXPECT_NE(error_of("SPACE = ZMaxPlus[]; \\closure(1, 2);").message().find("arguments"), std::string::npos);
  EXPECT_NE(error_of("\\closure([[1]]);").message().find("algebra mismatch"), std::string::npos);
  EXPECT_NE(error_of("SPACE = ZMaxPlus[]; \\SimplexMax([[1]], [1], [1]);").message().find("algebra mismatch"),
            std::string::npos);
  EXPECT_NE(error_of("SPACE = ZMaxPlus[]; 3 - 1;").message().find("subtraction"), std::string::npos);
  EXPECT_NE(error_of("SPACE = ZMaxPlus[]; 1/2;").message().find("non-integer"), std::string::npos);
  EXPECT_NE(error_of("y;").message().find("undefined variable"), std::string::npos);
  EXPECT_NE(error_of("SPACE = ZMaxPlus[]; A = [[1]]; SPACE = ZMinPlus[]; A;").message().find("algebra mismatch"),
            std::string::npos);
}

TEST(Session, ModuleErrorsCarryStatementLine) {
  const ScriptError e = error_of("SPACE = ZMaxPlus[];\nA = [[0, 0], [0, 0]];\n\n\\solveLAETropic(A, [0, 1]);");
  EXPECT_EQ(e.phase(), Phase::Eval);
  EXPECT_EQ(e.position().line, 4);
  EXPECT_NE(std::string(e.what()).find("line 4:"), std::string::npos);
  EXPECT_EQ(error_of("SPACE = ZMinPlus[];\n\\findTheShortestPath([[0, \\infty], [\\infty, 0]], 0, 1);").position().line,
            2);
  EXPECT_EQ(error_of("SPACE = ZMinPlus[];\n\n\\searchLeastDistances([[0, -1], [1, 0]]);").position().line, 3);
}

TEST(Session, OutputKeepsEarlierResultsOnError) {
  Session session;
  EXPECT_THROW(session.run("1; 2; \\nope();"), ScriptError);
  ASSERT_EQ(session.output().size(), 2U);
  EXPECT_EQ(session.output()[1].text, "2");
}

TEST(Session, DeterministicAcrossThreads) {
  std::string all;
  for (const auto& g : testing::golden_cases()) all += g.script;
  const Lines reference = evaluate(all);
  std::vector<std::future<Lines>> runs;
  for (int i = 0; i < 8; ++i) runs.push_back(std::async(std::launch::async, [&all] { return evaluate(all); }));
  for (auto& r : runs) EXPECT_EQ(r.get(), reference);
}

}  // namespace
}  // namespace tropical::mathpar
