#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropical::mathpar {

struct Position {
  int line = 1;
  int column = 1;

  bool operator==(const Position&) const = default;
};

inline std::string to_string(const Position& p) { return std::to_string(p.line) + ":" + std::to_string(p.column); }

enum class Phase { Lex, Parse, Eval };

/// Any failure while running a script, tagged with the phase and the source
/// position it refers to.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(Phase phase, Position pos, const std::string& message)
      : std::runtime_error("line " + to_string(pos) + ": " + message), phase_(phase), pos_(pos), message_(message) {}

  Phase phase() const noexcept { return phase_; }
  const Position& position() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Phase phase_;
  Position pos_;
  std::string message_;
};

enum class TokenKind {
  Ident,
  Command,
  Integer,
  Rational,
  Decimal,
  InfinitySymbol,
  Plus,
  Star,
  Minus,
  Equals,
  Semicolon,
  Comma,
  LBracket,
  RBracket,
  LParen,
  RParen,
  RelOp,
  End,
};

constexpr std::string_view to_string(TokenKind k) noexcept {
  switch (k) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Command: return "command";
    case TokenKind::Integer: return "integer";
    case TokenKind::Rational: return "rational";
    case TokenKind::Decimal: return "decimal";
    case TokenKind::InfinitySymbol: return "\\infty";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::RelOp: return "comparison";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

/// `leading` holds the whitespace and comments before the lexeme, so joining
/// leading + lexeme over all tokens reproduces the source.
struct Token {
  TokenKind kind = TokenKind::End;
  std::string lexeme;
  std::string leading;
  Position pos;

  /// Command name without the backslash.
  std::string_view command_name() const { return std::string_view(lexeme).substr(1); }
};

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      Token t;
      t.leading = skip_trivia();
      t.pos = pos_;
      if (at_end()) {
        t.kind = TokenKind::End;
        out.push_back(std::move(t));
        return out;
      }
      const std::size_t start = i_;
      t.kind = scan();
      t.lexeme = std::string(src_.substr(start, i_ - start));
      out.push_back(std::move(t));
    }
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const { return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0'; }
  bool starts_with(std::string_view s) const { return src_.substr(i_, s.size()) == s; }

  void advance(std::size_t n = 1) {
    for (std::size_t k = 0; k < n && !at_end(); ++k) {
      const auto c = static_cast<unsigned char>(src_[i_++]);
      if (c == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else if ((c & 0xC0U) != 0x80U) {
        ++pos_.column;
      }
    }
  }

  std::string skip_trivia() {
    const std::size_t start = i_;
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
    return std::string(src_.substr(start, i_ - start));
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
  static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  TokenKind scan() {
    // multi-byte symbols first
    if (starts_with("\xE2\x88\x9E")) {  // ∞
      advance(3);
      return TokenKind::InfinitySymbol;
    }
    if (starts_with("\xE2\x89\xA4") || starts_with("\xE2\x89\xA5")) {  // ≤ ≥
      advance(3);
      return TokenKind::RelOp;
    }
    if (starts_with("\xE2\x88\x92")) {  // − (minus sign)
      advance(3);
      return TokenKind::Minus;
    }
    const char c = peek();
    if (c == '\\') {
      const std::size_t start = i_;
      advance();
      if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a command name after '\\'");
      while (ident_char(peek())) advance();
      return src_.substr(start, i_ - start) == "\\infty" ? TokenKind::InfinitySymbol : TokenKind::Command;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i_;
      while (ident_char(peek())) advance();
      return src_.substr(start, i_ - start) == "inf" ? TokenKind::InfinitySymbol : TokenKind::Ident;
    }
    if (digit(c)) {
      while (digit(peek())) advance();
      if (peek() == '.' && digit(peek(1))) {
        advance();
        while (digit(peek())) advance();
        return TokenKind::Decimal;
      }
      if (peek() == '/' && digit(peek(1))) {
        advance();
        while (digit(peek())) advance();
        return TokenKind::Rational;
      }
      return TokenKind::Integer;
    }
    switch (c) {
      case '+': advance(); return TokenKind::Plus;
      case '*': advance(); return TokenKind::Star;
      case '-': advance(); return TokenKind::Minus;
      case ';': advance(); return TokenKind::Semicolon;
      case ',': advance(); return TokenKind::Comma;
      case '[': advance(); return TokenKind::LBracket;
      case ']': advance(); return TokenKind::RBracket;
      case '(': advance(); return TokenKind::LParen;
      case ')': advance(); return TokenKind::RParen;
      case '=': advance(); return TokenKind::Equals;
      case '<':
      case '>':
        advance();
        if (peek() == '=') advance();
        return TokenKind::RelOp;
      default: break;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& message) const { throw ScriptError(Phase::Lex, pos_, message); }

  std::string_view src_;
  std::size_t i_ = 0;
  Position pos_;
};

}  // namespace detail

/// Splits source text into tokens; the last token is always End.
inline std::vector<Token> tokenize(std::string_view source) { return detail::Lexer(source).run(); }

}  // namespace tropical::mathpar
