#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tropical/mathpar/ast.hpp"
#include "tropical/mathpar/lexer.hpp"

namespace tropical::mathpar {

namespace detail {

/// Recursive-descent parser. Grammar, lowest precedence first:
///   statement := SPACE '=' Ident '[' [Ident {',' Ident}] ']'
///              | Ident '=' expr | expr
///   expr      := sum [RelOp sum]
///   sum       := product {('+' | '-') product}
///   product   := unary {'*' unary}
///   unary     := '-' unary | primary
///   primary   := number | \infty | Ident | Command '(' args ')'
///              | '[' items ']' | '(' expr ')' | '(' ')'
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<Statement> program() {
    std::vector<Statement> out;
    while (peek().kind != TokenKind::End) {
      if (peek().kind == TokenKind::Semicolon) {
        next();
        continue;
      }
      out.push_back(statement());
      if (peek().kind == TokenKind::End) break;
      expect(TokenKind::Semicolon);
    }
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  const Token& expect(TokenKind k) {
    if (peek().kind != k) fail({k});
    return next();
  }

  [[noreturn]] void fail(std::initializer_list<TokenKind> expected) const {
    std::string msg = "expected ";
    std::size_t i = 0;
    for (auto k : expected) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += to_string(k);
      ++i;
    }
    const Token& t = peek();
    msg += ", found ";
    msg += t.kind == TokenKind::End ? std::string("end of input") : "'" + t.lexeme + "'";
    throw ScriptError(Phase::Parse, t.pos, msg);
  }

  Statement statement() {
    Statement s;
    s.pos = peek().pos;
    if (peek().kind == TokenKind::Ident && peek(1).kind == TokenKind::Equals) {
      const std::string name = next().lexeme;
      next();
      if (name == "SPACE") {
        s.kind = Statement::Kind::SpaceDecl;
        s.name = expect(TokenKind::Ident).lexeme;
        expect(TokenKind::LBracket);
        if (peek().kind != TokenKind::RBracket) {
          do {
            s.space_vars.push_back(expect(TokenKind::Ident).lexeme);
          } while (accept(TokenKind::Comma));
        }
        expect(TokenKind::RBracket);
        return s;
      }
      s.kind = Statement::Kind::Assign;
      s.name = name;
      s.expr = expr();
      return s;
    }
    s.kind = Statement::Kind::ExprStmt;
    s.expr = expr();
    return s;
  }

  Expr expr() {
    Expr lhs = sum();
    if (peek().kind != TokenKind::RelOp) return lhs;
    const Token& op = next();
    Expr node;
    node.kind = Expr::Kind::Ineq;
    node.pos = op.pos;
    node.text = canonical_relop(op.lexeme);
    node.children.push_back(std::move(lhs));
    node.children.push_back(sum());
    return node;
  }

  static std::string canonical_relop(std::string_view lexeme) {
    if (lexeme == "\xE2\x89\xA4") return "<=";
    if (lexeme == "\xE2\x89\xA5") return ">=";
    return std::string(lexeme);
  }

  Expr sum() {
    Expr lhs = product();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const Token& op = next();
      lhs = binary(op.kind == TokenKind::Plus ? "+" : "-", op.pos, std::move(lhs), product());
    }
    return lhs;
  }

  Expr product() {
    Expr lhs = unary();
    while (peek().kind == TokenKind::Star) {
      const Token& op = next();
      lhs = binary("*", op.pos, std::move(lhs), unary());
    }
    return lhs;
  }

  static Expr binary(std::string op, Position pos, Expr lhs, Expr rhs) {
    Expr node;
    node.kind = Expr::Kind::Binary;
    node.text = std::move(op);
    node.pos = pos;
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  Expr unary() {
    if (peek().kind != TokenKind::Minus) return primary();
    const Position pos = next().pos;
    Expr operand = unary();
    // literals absorb the sign: -3 is a number, -\infty an infinity
    if (operand.kind == Expr::Kind::Number) {
      operand.text = operand.text.front() == '-' ? operand.text.substr(1) : "-" + operand.text;
      operand.pos = pos;
      return operand;
    }
    if (operand.kind == Expr::Kind::Infinity) {
      operand.negative = !operand.negative;
      operand.pos = pos;
      return operand;
    }
    Expr node;
    node.kind = Expr::Kind::Unary;
    node.text = "-";
    node.pos = pos;
    node.children.push_back(std::move(operand));
    return node;
  }

  Expr primary() {
    const Token& t = peek();
    Expr node;
    node.pos = t.pos;
    switch (t.kind) {
      case TokenKind::Integer:
      case TokenKind::Rational:
      case TokenKind::Decimal:
        node.kind = Expr::Kind::Number;
        node.text = next().lexeme;
        return node;
      case TokenKind::InfinitySymbol:
        next();
        node.kind = Expr::Kind::Infinity;
        return node;
      case TokenKind::Ident:
        node.kind = Expr::Kind::Var;
        node.text = next().lexeme;
        return node;
      case TokenKind::Command:
        node.kind = Expr::Kind::Call;
        node.text = std::string(next().command_name());
        expect(TokenKind::LParen);
        if (peek().kind != TokenKind::RParen) {
          do {
            node.children.push_back(expr());
          } while (accept(TokenKind::Comma));
        }
        expect(TokenKind::RParen);
        return node;
      case TokenKind::LBracket: return bracket();
      case TokenKind::LParen: {
        next();
        if (accept(TokenKind::RParen)) {
          node.kind = Expr::Kind::Empty;
          return node;
        }
        Expr inner = expr();
        expect(TokenKind::RParen);
        return inner;
      }
      default:
        fail({TokenKind::Integer, TokenKind::InfinitySymbol, TokenKind::Ident, TokenKind::Command,
              TokenKind::LBracket, TokenKind::LParen});
    }
  }

  Expr bracket() {
    Expr node;
    node.pos = expect(TokenKind::LBracket).pos;
    node.kind = Expr::Kind::List;
    if (peek().kind != TokenKind::RBracket) {
      do {
        node.children.push_back(expr());
      } while (accept(TokenKind::Comma));
    }
    expect(TokenKind::RBracket);
    bool all_lists = !node.children.empty();
    for (const auto& c : node.children) all_lists = all_lists && c.kind == Expr::Kind::List;
    if (all_lists) {
      const std::size_t width = node.children.front().children.size();
      for (const auto& row : node.children) {
        if (row.children.size() != width || width == 0) {
          throw ScriptError(Phase::Parse, row.pos, "matrix rows must be non-empty and of equal length");
        }
      }
      node.kind = Expr::Kind::Matrix;
    }
    return node;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::vector<Statement> parse(std::vector<Token> tokens) {
  return detail::Parser(std::move(tokens)).program();
}

inline std::vector<Statement> parse(std::string_view source) { return parse(tokenize(source)); }

}  // namespace tropical::mathpar
