#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "tropical/lp.hpp"
#include "tropical/matrix.hpp"
#include "tropical/solvers.hpp"

namespace tropical::mathpar {

struct ScalarValue {
  ExtScalar value;
  Algebra algebra;
};

/// A matrix; `vector` marks results and flat literals that print as [a, b].
/// Flat vectors are stored as columns.
struct MatrixValue {
  TropMatrix matrix;
  bool vector = false;
};

/// coefficient * var + constant over Q.
struct LinearValue {
  std::string var;
  Rational coefficient;
  Rational constant;
};

struct InequalityValue {
  std::string var;
  lp::LinearInequality ineq;
};

struct IntervalListValue {
  std::vector<IntervalBound> bounds;
};

struct PathValue {
  std::vector<std::size_t> vertices;
};

struct LpValue {
  lp::LpOutcome outcome;
  Domain domain = Domain::Q;
};

/// A closure that does not exist; prints as \infty.
struct UndefinedValue {};

struct EmptyValue {};

struct ListItem;
using ValueList = std::vector<ListItem>;

using Value = std::variant<ScalarValue, MatrixValue, LinearValue, InequalityValue, IntervalListValue, lp::Interval,
                           PathValue, LpValue, UndefinedValue, EmptyValue, ValueList>;

struct ListItem {
  Value value;
};

enum class Format { Plain, Latex };

struct RenderOptions {
  Format format = Format::Plain;
  bool show_objective = false;
};

namespace detail {

inline std::string render_rational(const Rational& r) {
  // mpq prints "n/d" in lowest terms, or "n" for integers
  return r.str();
}

inline std::string render_double(double d) {
  if (d == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

}  // namespace detail

inline std::string render(const ExtScalar& s) {
  if (s.is_neg_inf()) return "-\\infty";
  if (s.is_pos_inf()) return "\\infty";
  if (s.is_rational()) return detail::render_rational(s.rational());
  return detail::render_double(s.real());
}

namespace detail {

inline std::string render_matrix(const MatrixValue& m, Format format) {
  const TropMatrix& a = m.matrix;
  std::string out;
  if (format == Format::Latex) {
    out = "\\begin{pmatrix}";
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r > 0) out += " \\\\ ";
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (c > 0) out += " & ";
        out += render(a(r, c));
      }
    }
    return out + "\\end{pmatrix}";
  }
  auto row_text = [&a](std::size_t r) {
    std::string s = "[";
    for (std::size_t c = 0; c < a.cols(); ++c) s += (c > 0 ? ", " : "") + render(a(r, c));
    return s + "]";
  };
  if (m.vector) {
    // vectors are columns or rows; print the entries flat
    out = "[";
    const std::size_t n = a.rows() * a.cols();
    for (std::size_t i = 0; i < n; ++i) out += (i > 0 ? ", " : "") + render(a.entries()[i]);
    return out + "]";
  }
  out = "[";
  for (std::size_t r = 0; r < a.rows(); ++r) out += (r > 0 ? ", " : "") + row_text(r);
  return out + "]";
}

inline std::string render_linear(const std::string& var, const Rational& coef, const Rational& constant) {
  std::string out;
  if (coef != 0) {
    if (coef == -1) {
      out = "-" + var;
    } else if (coef == 1) {
      out = var;
    } else {
      out = render_rational(coef) + "*" + var;
    }
  }
  if (constant != 0 || out.empty()) {
    if (out.empty()) {
      out = render_rational(constant);
    } else {
      out += constant < 0 ? " - " + render_rational(Rational(-constant)) : " + " + render_rational(constant);
    }
  }
  return out;
}

inline const char* relop_text(lp::RelOp op) {
  switch (op) {
    case lp::RelOp::Less: return "<";
    case lp::RelOp::LessEq: return "<=";
    case lp::RelOp::Greater: return ">";
    case lp::RelOp::GreaterEq: return ">=";
  }
  return "?";
}

}  // namespace detail

/// Parentheses for open ends, square brackets for closed ones.
inline std::string render(const lp::Interval& iv) {
  if (iv.empty) return "\\emptyset";
  std::string out = iv.lo && iv.lo_closed ? "[" : "(";
  out += iv.lo ? detail::render_rational(*iv.lo) : "-\\infty";
  out += ", ";
  out += iv.hi ? detail::render_rational(*iv.hi) : "\\infty";
  out += iv.hi && iv.hi_closed ? "]" : ")";
  return out;
}

inline std::string render(const Value& v, const RenderOptions& opts = {});

namespace detail {

struct Renderer {
  const RenderOptions& opts;

  std::string operator()(const ScalarValue& s) const { return render(s.value); }
  std::string operator()(const MatrixValue& m) const { return render_matrix(m, opts.format); }
  std::string operator()(const LinearValue& l) const { return render_linear(l.var, l.coefficient, l.constant); }
  std::string operator()(const InequalityValue& i) const {
    return render_linear(i.var, i.ineq.coefficient, i.ineq.constant) + " " + relop_text(i.ineq.op) + " 0";
  }
  std::string operator()(const IntervalListValue& l) const {
    std::string out = "[";
    for (std::size_t i = 0; i < l.bounds.size(); ++i) {
      out += (i > 0 ? ", [" : "[") + render(l.bounds[i].lower) + ", " + render(l.bounds[i].upper) + "]";
    }
    return out + "]";
  }
  std::string operator()(const lp::Interval& iv) const { return render(iv); }
  std::string operator()(const PathValue& p) const {
    std::string out = "[";
    for (std::size_t i = 0; i < p.vertices.size(); ++i) out += (i > 0 ? ", " : "") + std::to_string(p.vertices[i]);
    return out + "]";
  }
  std::string operator()(const LpValue& lp) const {
    const auto& o = lp.outcome;
    if (o.status != lp::LpStatus::Optimal) return lp::to_string(o.status);
    auto text = [&lp](const Rational& r) {
      return lp.domain == Domain::F64 ? render_double(to_double(r)) : render_rational(r);
    };
    std::string out;
    if (opts.format == Format::Latex) {
      out = "\\begin{pmatrix}";
      for (std::size_t i = 0; i < o.x.size(); ++i) out += (i > 0 ? " \\\\ " : "") + text(o.x[i]);
      out += "\\end{pmatrix}";
    } else {
      out = "[";
      for (std::size_t i = 0; i < o.x.size(); ++i) out += (i > 0 ? ", " : "") + text(o.x[i]);
      out += "]";
    }
    if (opts.show_objective) out += "\nobjective: " + text(o.objective);
    return out;
  }
  std::string operator()(const UndefinedValue&) const { return "\\infty"; }
  std::string operator()(const EmptyValue&) const { return "()"; }
  std::string operator()(const ValueList& items) const {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i > 0 ? ", " : "") + render(items[i].value, opts);
    return out + "]";
  }
};

}  // namespace detail

inline std::string render(const Value& v, const RenderOptions& opts) { return std::visit(detail::Renderer{opts}, v); }

}  // namespace tropical::mathpar
