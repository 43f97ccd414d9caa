#pragma once

#include <string>
#include <vector>

#include "tropical/mathpar/lexer.hpp"

namespace tropical::mathpar {

/// Expression node. `text` carries the literal lexeme, identifier, command
/// name (no backslash) or operator depending on `kind`; positions are
/// ignored by equality.
struct Expr {
  enum class Kind {
    Number,    // text: lexeme, possibly with a folded leading '-'
    Infinity,  // negative: sign
    Matrix,    // children: rows, each a List
    List,      // children: elements
    Empty,     // ()
    Var,       // text: name
    Unary,     // text: "-", children: operand
    Binary,    // text: "+", "*" or "-", children: lhs, rhs
    Call,      // text: command name, children: arguments
    Ineq,      // text: "<", "<=", ">" or ">=", children: lhs, rhs
  };

  Kind kind = Kind::Number;
  std::string text;
  bool negative = false;
  std::vector<Expr> children;
  Position pos;

  bool operator==(const Expr& o) const {
    return kind == o.kind && text == o.text && negative == o.negative && children == o.children;
  }
};

struct Statement {
  enum class Kind { SpaceDecl, Assign, ExprStmt };

  Kind kind = Kind::ExprStmt;
  std::string name;                     // space name or assigned identifier
  std::vector<std::string> space_vars;  // SPACE = Q[x]
  Expr expr;
  Position pos;

  bool operator==(const Statement& o) const {
    return kind == o.kind && name == o.name && space_vars == o.space_vars && expr == o.expr;
  }
};

namespace detail {

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Ineq: return 0;
    case Expr::Kind::Binary: return e.text == "*" ? 2 : 1;
    case Expr::Kind::Unary: return 3;
    default: return 4;
  }
}

inline void print_expr(const Expr& e, std::string& out);

inline void print_operand(const Expr& e, int min_prec, std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    print_expr(e, out);
    out += ')';
  } else {
    print_expr(e, out);
  }
}

inline void print_list(const std::vector<Expr>& items, std::string& out) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    print_expr(items[i], out);
  }
}

inline void print_expr(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Number: out += e.text; break;
    case Expr::Kind::Infinity: out += e.negative ? "-\\infty" : "\\infty"; break;
    case Expr::Kind::Matrix:
    case Expr::Kind::List:
      out += '[';
      print_list(e.children, out);
      out += ']';
      break;
    case Expr::Kind::Empty: out += "()"; break;
    case Expr::Kind::Var: out += e.text; break;
    case Expr::Kind::Unary:
      out += '-';
      print_operand(e.children[0], 3, out);
      break;
    case Expr::Kind::Binary: {
      const int p = precedence(e);
      print_operand(e.children[0], p, out);
      out += ' ' + e.text + ' ';
      // left-associative: an equal-precedence right operand needs parentheses
      print_operand(e.children[1], p + 1, out);
      break;
    }
    case Expr::Kind::Call:
      out += '\\' + e.text + '(';
      print_list(e.children, out);
      out += ')';
      break;
    case Expr::Kind::Ineq:
      print_operand(e.children[0], 1, out);
      out += ' ' + e.text + ' ';
      print_operand(e.children[1], 1, out);
      break;
  }
}

}  // namespace detail

/// Canonical source text of an expression; parsing it yields an equal node.
inline std::string to_source(const Expr& e) {
  std::string out;
  detail::print_expr(e, out);
  return out;
}

inline std::string to_source(const Statement& s) {
  switch (s.kind) {
    case Statement::Kind::SpaceDecl: {
      std::string out = "SPACE = " + s.name + "[";
      for (std::size_t i = 0; i < s.space_vars.size(); ++i) out += (i > 0 ? ", " : "") + s.space_vars[i];
      return out + "];";
    }
    case Statement::Kind::Assign: return s.name + " = " + to_source(s.expr) + ";";
    case Statement::Kind::ExprStmt: return to_source(s.expr) + ";";
  }
  return {};
}

inline std::string to_source(const std::vector<Statement>& program) {
  std::string out;
  for (const auto& s : program) out += to_source(s) + "\n";
  return out;
}

}  // namespace tropical::mathpar
