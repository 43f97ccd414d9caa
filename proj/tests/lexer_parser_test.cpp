#include <gtest/gtest.h>

#include <random>

#include "golden_support.hpp"
#include "tropical/mathpar/parser.hpp"

namespace tropical::mathpar {
namespace {

std::vector<TokenKind> kinds(std::string_view source) {
  std::vector<TokenKind> out;
  for (const auto& t : tokenize(source)) out.push_back(t.kind);
  return out;
}

using K = TokenKind;

TEST(Lexer, SpaceDeclaration) {
  EXPECT_EQ(kinds("SPACE = ZMaxPlus[];"),
            (std::vector<K>{K::Ident, K::Equals, K::Ident, K::LBracket, K::RBracket, K::Semicolon, K::End}));
}

TEST(Lexer, CommandCall) {
  const auto tokens = tokenize("\\closure(A);");
  EXPECT_EQ(tokens[0].kind, K::Command);
  EXPECT_EQ(tokens[0].command_name(), "closure");
  EXPECT_EQ(kinds("\\closure(A);"), (std::vector<K>{K::Command, K::LParen, K::Ident, K::RParen, K::Semicolon, K::End}));
}

TEST(Lexer, InfinityForms) {
  EXPECT_EQ(kinds("[[0,1,\\infty]]"), (std::vector<K>{K::LBracket, K::LBracket, K::Integer, K::Comma, K::Integer, K::Comma,
                                                      K::InfinitySymbol, K::RBracket, K::RBracket, K::End}));
  EXPECT_EQ(kinds("-\\infty"), (std::vector<K>{K::Minus, K::InfinitySymbol, K::End}));
  EXPECT_EQ(kinds("\xE2\x88\x9E inf"), (std::vector<K>{K::InfinitySymbol, K::InfinitySymbol, K::End}));
  EXPECT_EQ(kinds("infinity"), (std::vector<K>{K::Ident, K::End}));
}

TEST(Lexer, NumbersAndRelations) {
  EXPECT_EQ(kinds("3/4 1.5 12"), (std::vector<K>{K::Rational, K::Decimal, K::Integer, K::End}));
  EXPECT_EQ(kinds("< <= > >= \xE2\x89\xA4 \xE2\x89\xA5"),
            (std::vector<K>{K::RelOp, K::RelOp, K::RelOp, K::RelOp, K::RelOp, K::RelOp, K::End}));
  EXPECT_EQ(kinds("x\xE2\x88\x92" "6"), (std::vector<K>{K::Ident, K::Minus, K::Integer, K::End}));
}

TEST(Lexer, CommentsAreTrivia) {
  const auto tokens = tokenize("# note\n2; # tail");
  ASSERT_EQ(tokens.size(), 3U);
  EXPECT_EQ(tokens[0].leading, "# note\n");
  EXPECT_EQ(tokens[0].pos, (Position{2, 1}));
  EXPECT_EQ(tokens[2].leading, " # tail");
}

TEST(Lexer, IllegalCharacterReportsPosition) {
  try {
    tokenize("A = 1;\n  B = $;");
    FAIL();
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.phase(), Phase::Lex);
    EXPECT_EQ(e.position(), (Position{2, 7}));
    EXPECT_NE(std::string(e.what()).find("line 2:7"), std::string::npos);
  }
}

std::string rejoin(std::string_view source) {
  std::string out;
  for (const auto& t : tokenize(source)) out += t.leading + t.lexeme;
  return out;
}

TEST(Lexer, LexemesReproduceSource) {
  for (const auto& golden : testing::golden_cases()) EXPECT_EQ(rejoin(golden.script), golden.script) << golden.name;
  const std::string odd = "  x\t=\xE2\x88\x92\\infty ; # c\n\n[ 1/2 ,3.25]\xE2\x89\xA4\xE2\x88\x9E";
  EXPECT_EQ(rejoin(odd), odd);
}

Expr num(const std::string& text) { return Expr{Expr::Kind::Number, text, false, {}, {}}; }
Expr var(const std::string& name) { return Expr{Expr::Kind::Var, name, false, {}, {}}; }
Expr bin(const std::string& op, Expr l, Expr r) { return Expr{Expr::Kind::Binary, op, false, {std::move(l), std::move(r)}, {}}; }

TEST(Parser, SumOfLiterals) {
  const auto program = parse("2+3;");
  ASSERT_EQ(program.size(), 1U);
  EXPECT_EQ(program[0].kind, Statement::Kind::ExprStmt);
  EXPECT_EQ(program[0].expr, bin("+", num("2"), num("3")));
}

TEST(Parser, PrecedenceAndAssociativity) {
  EXPECT_EQ(parse("1+2*3;")[0].expr, bin("+", num("1"), bin("*", num("2"), num("3"))));
  EXPECT_EQ(parse("1-2-3;")[0].expr, bin("-", bin("-", num("1"), num("2")), num("3")));
  EXPECT_EQ(parse("-2*x;")[0].expr, bin("*", num("-2"), var("x")));
  const Expr neg_var = parse("-x;")[0].expr;
  EXPECT_EQ(neg_var.kind, Expr::Kind::Unary);
  const Expr neg_inf = parse("-\\infty;")[0].expr;
  EXPECT_EQ(neg_inf.kind, Expr::Kind::Infinity);
  EXPECT_TRUE(neg_inf.negative);
}

TEST(Parser, EquationScriptShape) {
  const auto program = parse("SPACE = ZMaxPlus[]; A = [[1, 2],[3, 0]]; b = [5, 7];\n\\solveLAETropic(A, b);");
  ASSERT_EQ(program.size(), 4U);
  EXPECT_EQ(program[0].kind, Statement::Kind::SpaceDecl);
  EXPECT_EQ(program[0].name, "ZMaxPlus");
  EXPECT_EQ(program[1].kind, Statement::Kind::Assign);
  EXPECT_EQ(program[1].expr.kind, Expr::Kind::Matrix);
  EXPECT_EQ(program[2].expr.kind, Expr::Kind::List);
  EXPECT_EQ(program[3].kind, Statement::Kind::ExprStmt);
  EXPECT_EQ(program[3].expr.kind, Expr::Kind::Call);
  EXPECT_EQ(program[3].expr.text, "solveLAETropic");
  EXPECT_EQ(program[3].pos, (Position{2, 1}));
}

TEST(Parser, InequalitiesInsideSolve) {
  const auto program = parse("SPACE = Q[x]; b = \\solve([x-6 > 0, x-7 < 0]);");
  EXPECT_EQ(program[0].space_vars, std::vector<std::string>{"x"});
  const Expr& list = program[1].expr.children[0];
  ASSERT_EQ(list.children.size(), 2U);
  EXPECT_EQ(list.children[0].kind, Expr::Kind::Ineq);
  EXPECT_EQ(list.children[0].text, ">");
  EXPECT_EQ(list.children[0].children[0], bin("-", var("x"), num("6")));
}

TEST(Parser, EmptyArgumentAndParentheses) {
  const Expr call = parse("\\SimplexMax(A, (), b, (), c);")[0].expr;
  EXPECT_EQ(call.children[1].kind, Expr::Kind::Empty);
  EXPECT_EQ(parse("(1+2)*3;")[0].expr, bin("*", bin("+", num("1"), num("2")), num("3")));
}

TEST(Parser, RaggedMatrixIsRejected) {
  try {
    parse("A = [[1, 2], [3]];");
    FAIL();
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.phase(), Phase::Parse);
  }
}

TEST(Parser, ErrorsNameExpectedTokens) {
  try {
    parse("A = ;");
    FAIL();
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.phase(), Phase::Parse);
    EXPECT_EQ(e.position(), (Position{1, 5}));
    EXPECT_NE(e.message().find("expected"), std::string::npos);
  }
  try {
    parse("2 + 3\n4;");
    FAIL();
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.position(), (Position{2, 1}));
    EXPECT_NE(e.message().find("';'"), std::string::npos);
  }
}

TEST(RoundTrip, GoldenScripts) {
  for (const auto& golden : testing::golden_cases()) {
    const auto program = parse(golden.script);
    EXPECT_EQ(parse(to_source(program)), program) << golden.name;
  }
}

// Random expression trees. Unary minus is never applied to a number or an
// infinity literal because the parser folds those into the literal itself.
class ExprGen {
 public:
  explicit ExprGen(unsigned seed) : rng_(seed) {}

  Expr expr(int depth) {
    const int pick = depth <= 0 ? pick_in(0, 3) : pick_in(0, 9);
    switch (pick) {
      case 0: return num(std::to_string(pick_in(-20, 20)));
      case 1: return num(std::to_string(pick_in(1, 9)) + "/" + std::to_string(pick_in(2, 9)));
      case 2: return Expr{Expr::Kind::Infinity, "", pick_in(0, 1) == 1, {}, {}};
      case 3: return var(std::string(1, static_cast<char>('a' + pick_in(0, 5))));
      case 4: return Expr{Expr::Kind::Unary, "-", false, {non_literal(depth - 1)}, {}};
      case 5:
      case 6: {
        static const char* ops[] = {"+", "*", "-"};
        return bin(ops[pick_in(0, 2)], expr(depth - 1), expr(depth - 1));
      }
      case 7: {
        Expr call{Expr::Kind::Call, pick_in(0, 1) ? "closure" : "solveLAETropic", false, {}, {}};
        const int n = pick_in(0, 3);
        for (int i = 0; i < n; ++i) call.children.push_back(pick_in(0, 4) == 0 ? Expr{Expr::Kind::Empty, "", false, {}, {}}
                                                                               : expr(depth - 1));
        return call;
      }
      case 8: {
        const int rows = pick_in(1, 3);
        const int cols = pick_in(1, 3);
        Expr m{Expr::Kind::Matrix, "", false, {}, {}};
        for (int r = 0; r < rows; ++r) {
          Expr row{Expr::Kind::List, "", false, {}, {}};
          for (int c = 0; c < cols; ++c) row.children.push_back(expr(0));
          m.children.push_back(row);
        }
        return m;
      }
      default: {
        Expr list{Expr::Kind::List, "", false, {}, {}};
        const int n = pick_in(1, 3);
        for (int i = 0; i < n; ++i) {
          Expr item = expr(depth - 1);
          // a list whose items are all lists would read back as a matrix
          if (item.kind == Expr::Kind::List || item.kind == Expr::Kind::Matrix) item = var("v");
          list.children.push_back(item);
        }
        return list;
      }
    }
  }

  Statement statement() {
    Statement s;
    switch (pick_in(0, 3)) {
      case 0:
        s.kind = Statement::Kind::SpaceDecl;
        s.name = pick_in(0, 1) ? "ZMaxPlus" : "Q";
        if (s.name == "Q" && pick_in(0, 1)) s.space_vars = {"x"};
        break;
      case 1:
        s.kind = Statement::Kind::Assign;
        s.name = "v" + std::to_string(pick_in(0, 9));
        s.expr = expr(3);
        break;
      default:
        s.kind = Statement::Kind::ExprStmt;
        s.expr = pick_in(0, 4) == 0
                     ? Expr{Expr::Kind::Ineq, pick_in(0, 1) ? "<" : ">=", false, {expr(2), expr(2)}, {}}
                     : expr(3);
        break;
    }
    return s;
  }

 private:
  int pick_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Expr non_literal(int depth) {
    Expr e = expr(depth);
    while (e.kind == Expr::Kind::Number || e.kind == Expr::Kind::Infinity) e = expr(depth);
    return e;
  }

  std::mt19937 rng_;
};

TEST(RoundTrip, RandomStatements) {
  ExprGen gen(7);
  for (int i = 0; i < 2000; ++i) {
    std::vector<Statement> program{gen.statement(), gen.statement()};
    const std::string text = to_source(program);
    ASSERT_EQ(parse(text), program) << text;
    EXPECT_EQ(to_source(parse(text)), text);
  }
}

}  // namespace
}  // namespace tropical::mathpar
