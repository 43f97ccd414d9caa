#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropical/graph.hpp"
#include "tropical/lp.hpp"
#include "tropical/mathpar/ast.hpp"
#include "tropical/mathpar/parser.hpp"
#include "tropical/mathpar/value.hpp"
#include "tropical/solvers.hpp"

namespace tropical::mathpar {

/// One printed result together with the semiring operations spent on it.
struct OutputLine {
  std::string text;
  OpCounts ops;
  int line = 0;
};

/// Named-variable environment plus the current SPACE. Statements run in
/// order; expression statements and assignments from commands print.
class Session {
 public:
  explicit Session(RenderOptions options = {}) : options_(options) {}

  const Algebra& space() const noexcept { return space_; }
  const std::vector<std::string>& space_vars() const noexcept { return space_vars_; }
  const std::vector<OutputLine>& output() const noexcept { return output_; }

  std::optional<Value> lookup(const std::string& name) const {
    const auto it = bindings_.find(name);
    if (it == bindings_.end()) return std::nullopt;
    return it->second;
  }

  /// Lexes, parses and evaluates a script, appending to output(). Stops at
  /// the first error.
  void run(std::string_view source) {
    for (const auto& stmt : parse(source)) execute(stmt);
  }

  void execute(const Statement& stmt) {
    reset_op_counts();
    try {
      switch (stmt.kind) {
        case Statement::Kind::SpaceDecl: declare_space(stmt); return;
        case Statement::Kind::Assign: {
          if (std::find(space_vars_.begin(), space_vars_.end(), stmt.name) != space_vars_.end()) {
            fail(stmt.pos, "cannot assign to the space variable '" + stmt.name + "'");
          }
          Value v = eval(stmt.expr);
          bindings_[stmt.name] = v;
          if (stmt.expr.kind == Expr::Kind::Call) emit(v, stmt.pos);
          return;
        }
        case Statement::Kind::ExprStmt: emit(eval(stmt.expr), stmt.pos); return;
      }
    } catch (const ScriptError&) {
      throw;
    } catch (const Error& e) {
      throw ScriptError(Phase::Eval, stmt.pos, e.what());
    }
  }

 private:
  [[noreturn]] static void fail(const Position& pos, const std::string& message) {
    throw ScriptError(Phase::Eval, pos, message);
  }

  void emit(const Value& v, const Position& pos) { output_.push_back({render(v, options_), op_counts(), pos.line}); }

  void declare_space(const Statement& stmt) {
    const auto alg = Algebra::from_name(stmt.name);
    if (!alg) fail(stmt.pos, "unknown space '" + stmt.name + "'");
    if (alg->is_tropical() && !stmt.space_vars.empty()) fail(stmt.pos, "tropical spaces take no variables");
    space_ = *alg;
    space_vars_ = stmt.space_vars;
  }

  // -- literals ------------------------------------------------------------

  ExtScalar number(const Expr& e) const {
    std::string_view text = e.text;
    const bool negative = !text.empty() && text.front() == '-';
    if (negative) text.remove_prefix(1);
    Rational r;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
      const Integer den(std::string(text.substr(slash + 1)));
      if (den == 0) fail(e.pos, "zero denominator");
      r = Rational(Integer(std::string(text.substr(0, slash))), den);
    } else {
      r = parse_decimal(text);
    }
    if (negative) r = -r;
    if (space_.domain == Domain::Z && denominator(r) != 1) fail(e.pos, "non-integer literal in " + std::string(space_.name()));
    if (space_.domain == Domain::F64) return ExtScalar::from_double(to_double(r));
    return ExtScalar(std::move(r));
  }

  ExtScalar infinity(const Expr& e) const {
    const ExtScalar s(e.negative ? Infinity::Neg : Infinity::Pos);
    try {
      check_legal(s, space_);
    } catch (const Error& err) {
      fail(e.pos, err.what());
    }
    return s;
  }

  // -- evaluation ----------------------------------------------------------

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Number: return ScalarValue{number(e), space_};
      case Expr::Kind::Infinity: return ScalarValue{infinity(e), space_};
      case Expr::Kind::Matrix: return matrix_literal(e);
      case Expr::Kind::List: return list_literal(e);
      case Expr::Kind::Empty: return EmptyValue{};
      case Expr::Kind::Var: return variable(e);
      case Expr::Kind::Unary: return negate(eval(e.children[0]), e.pos);
      case Expr::Kind::Binary: return binary(e);
      case Expr::Kind::Call: return call(e);
      case Expr::Kind::Ineq: return inequality(e);
    }
    fail(e.pos, "unsupported expression");
  }

  Value variable(const Expr& e) {
    if (std::find(space_vars_.begin(), space_vars_.end(), e.text) != space_vars_.end()) {
      return LinearValue{e.text, Rational(1), Rational(0)};
    }
    if (const auto it = bindings_.find(e.text); it != bindings_.end()) {
      const Value& v = it->second;
      const Algebra* alg = nullptr;
      if (const auto* s = std::get_if<ScalarValue>(&v)) alg = &s->algebra;
      if (const auto* m = std::get_if<MatrixValue>(&v)) alg = &m->matrix.algebra();
      if (alg && *alg != space_) {
        fail(e.pos, "algebra mismatch: '" + e.text + "' was created under " + std::string(alg->name()) +
                        ", current space is " + std::string(space_.name()));
      }
      return v;
    }
    fail(e.pos, "undefined variable '" + e.text + "'");
  }

  ExtScalar scalar_of(const Value& v, const Position& pos) const {
    if (const auto* s = std::get_if<ScalarValue>(&v)) return s->value;
    fail(pos, "expected a number");
  }

  Value matrix_literal(const Expr& e) {
    const std::size_t rows = e.children.size();
    const std::size_t cols = e.children.front().children.size();
    std::vector<ExtScalar> entries;
    entries.reserve(rows * cols);
    for (const auto& row : e.children) {
      for (const auto& item : row.children) entries.push_back(scalar_of(eval(item), item.pos));
    }
    return MatrixValue{TropMatrix(rows, cols, std::move(entries), space_), false};
  }

  Value list_literal(const Expr& e) {
    std::vector<Value> items;
    items.reserve(e.children.size());
    bool all_scalars = !e.children.empty();
    for (const auto& c : e.children) {
      items.push_back(eval(c));
      all_scalars = all_scalars && std::holds_alternative<ScalarValue>(items.back());
    }
    if (all_scalars) {
      std::vector<ExtScalar> entries;
      for (const auto& v : items) entries.push_back(std::get<ScalarValue>(v).value);
      return MatrixValue{TropMatrix::column(entries, space_), true};
    }
    ValueList list;
    for (auto& v : items) list.push_back(ListItem{std::move(v)});
    return list;
  }

  Value negate(const Value& v, const Position& pos) {
    if (const auto* s = std::get_if<ScalarValue>(&v)) {
      if (s->value.is_infinite()) {
        const ExtScalar flipped(s->value.is_neg_inf() ? Infinity::Pos : Infinity::Neg);
        check_legal(flipped, space_);
        return ScalarValue{flipped, space_};
      }
      return ScalarValue{trop_neg(s->value), space_};
    }
    if (const auto* m = std::get_if<MatrixValue>(&v)) {
      std::vector<ExtScalar> out;
      for (const auto& x : m->matrix.entries()) out.push_back(trop_neg(x));
      return MatrixValue{TropMatrix(m->matrix.rows(), m->matrix.cols(), std::move(out), space_), m->vector};
    }
    if (const auto* l = std::get_if<LinearValue>(&v)) {
      return LinearValue{l->var, Rational(-l->coefficient), Rational(-l->constant)};
    }
    fail(pos, "cannot negate this value");
  }

  std::optional<LinearValue> as_linear(const Value& v) const {
    if (const auto* l = std::get_if<LinearValue>(&v)) return *l;
    if (const auto* s = std::get_if<ScalarValue>(&v); s && s->value.is_rational()) {
      return LinearValue{"", Rational(0), s->value.rational()};
    }
    return std::nullopt;
  }

  Value binary(const Expr& e) {
    const Value lhs = eval(e.children[0]);
    const Value rhs = eval(e.children[1]);
    const std::string& op = e.text;

    const bool linear_involved = std::holds_alternative<LinearValue>(lhs) || std::holds_alternative<LinearValue>(rhs);
    if (linear_involved) return linear_binary(op, lhs, rhs, e.pos);

    if (op == "-") {
      if (space_.is_tropical()) fail(e.pos, "subtraction is not defined in " + std::string(space_.name()));
      return add(lhs, negate(rhs, e.pos), e.pos);
    }
    if (op == "+") return add(lhs, rhs, e.pos);
    return multiply(lhs, rhs, e.pos);
  }

  Value linear_binary(const std::string& op, const Value& lhs, const Value& rhs, const Position& pos) {
    auto l = as_linear(lhs);
    auto r = as_linear(rhs);
    if (!l || !r) fail(pos, "unsupported operands for a linear expression");
    const std::string var = !l->var.empty() ? l->var : r->var;
    if (!l->var.empty() && !r->var.empty() && l->var != r->var) fail(pos, "only univariate expressions are supported");
    if (op == "+") return LinearValue{var, l->coefficient + r->coefficient, l->constant + r->constant};
    if (op == "-") return LinearValue{var, l->coefficient - r->coefficient, l->constant - r->constant};
    if (l->coefficient != 0 && r->coefficient != 0) {
      throw Error(ErrorKind::UnsupportedDegree, "only linear expressions are supported");
    }
    return LinearValue{var, Rational(l->coefficient * r->constant + r->coefficient * l->constant),
                       Rational(l->constant * r->constant)};
  }

  Value add(const Value& lhs, const Value& rhs, const Position& pos) {
    const auto* ls = std::get_if<ScalarValue>(&lhs);
    const auto* rs = std::get_if<ScalarValue>(&rhs);
    if (ls && rs) return ScalarValue{trop_add(ls->value, rs->value, space_), space_};
    const auto* lm = std::get_if<MatrixValue>(&lhs);
    const auto* rm = std::get_if<MatrixValue>(&rhs);
    if (lm && rm) return MatrixValue{mat_oplus(lm->matrix, rm->matrix), lm->vector && rm->vector};
    fail(pos, "'+' needs two numbers or two matrices of equal shape");
  }

  Value multiply(const Value& lhs, const Value& rhs, const Position& pos) {
    const auto* ls = std::get_if<ScalarValue>(&lhs);
    const auto* rs = std::get_if<ScalarValue>(&rhs);
    const auto* lm = std::get_if<MatrixValue>(&lhs);
    const auto* rm = std::get_if<MatrixValue>(&rhs);
    if (ls && rs) return ScalarValue{trop_mul(ls->value, rs->value, space_), space_};
    if (ls && rm) return MatrixValue{scale(ls->value, rm->matrix), rm->vector};
    if (lm && rs) return MatrixValue{scale(rs->value, lm->matrix), lm->vector};
    if (lm && rm) {
      // a flat vector on the left acts as a row
      const TropMatrix left = lm->vector ? lm->matrix.transposed() : lm->matrix;
      TropMatrix product = mat_mul(left, rm->matrix);
      const bool vector = product.cols() == 1 || product.rows() == 1;
      return MatrixValue{std::move(product), vector && (lm->vector || rm->vector)};
    }
    fail(pos, "'*' needs numbers or conformable matrices");
  }

  Value inequality(const Expr& e) {
    const Value diff = linear_binary("-", eval(e.children[0]), eval(e.children[1]), e.pos);
    const auto& l = std::get<LinearValue>(diff);
    lp::RelOp op = lp::RelOp::Less;
    if (e.text == "<=") op = lp::RelOp::LessEq;
    if (e.text == ">") op = lp::RelOp::Greater;
    if (e.text == ">=") op = lp::RelOp::GreaterEq;
    return InequalityValue{l.var, {l.coefficient, l.constant, op}};
  }

  // -- commands ------------------------------------------------------------

  void require_tropical(const Expr& call) const {
    if (!space_.is_tropical()) {
      fail(call.pos, "algebra mismatch: \\" + call.text + " requires a tropical space, current space is " +
                         std::string(space_.name()));
    }
  }

  void require_arity(const Expr& call, std::initializer_list<std::size_t> allowed) const {
    if (std::find(allowed.begin(), allowed.end(), call.children.size()) != allowed.end()) return;
    std::string expected;
    for (auto n : allowed) expected += (expected.empty() ? "" : " or ") + std::to_string(n);
    fail(call.pos, "\\" + call.text + " takes " + expected + " arguments, got " + std::to_string(call.children.size()));
  }

  /// Square or rectangular matrix argument; a flat vector counts as a row.
  const TropMatrix& matrix_arg(const Value& v, const Expr& arg, std::optional<TropMatrix>& storage) const {
    const auto* m = std::get_if<MatrixValue>(&v);
    if (!m) fail(arg.pos, "expected a matrix");
    if (!m->vector) return m->matrix;
    storage = m->matrix.transposed();
    return *storage;
  }

  /// Column argument; flat vectors and single-column matrices qualify.
  TropMatrix column_arg(const Value& v, const Expr& arg) const {
    const auto* m = std::get_if<MatrixValue>(&v);
    if (!m) fail(arg.pos, "expected a vector");
    if (m->matrix.cols() == 1) return m->matrix;
    if (m->matrix.rows() == 1) return m->matrix.transposed();
    fail(arg.pos, "expected a vector");
  }

  std::size_t index_arg(const Value& v, const Expr& arg) const {
    const ExtScalar s = scalar_of(v, arg.pos);
    if (s.is_rational() && s.is_integer() && s.rational() >= 0) return s.rational().convert_to<std::size_t>();
    if (s.is_real() && s.real() >= 0 && s.real() == static_cast<double>(static_cast<std::size_t>(s.real()))) {
      return static_cast<std::size_t>(s.real());
    }
    fail(arg.pos, "expected a non-negative integer vertex index");
  }

  Value call(const Expr& e) {
    std::vector<Value> args;
    args.reserve(e.children.size());
    for (const auto& c : e.children) args.push_back(eval(c));
    const std::string& name = e.text;

    if (name == "closure") return cmd_closure(e, args);
    if (name == "solveLAETropic" || name == "solveLAITropic") return cmd_linear_system(e, args);
    if (name == "BellmanEquation" || name == "BellmanInequality") return cmd_bellman(e, args);
    if (name == "searchLeastDistances" || name == "findTheShortestPath") return cmd_graph(e, args);
    if (name == "SimplexMax" || name == "SimplexMin") return cmd_simplex(e, args);
    if (name == "solve") return cmd_solve(e, args);
    fail(e.pos, "unknown command \\" + name);
  }

  Value cmd_closure(const Expr& e, const std::vector<Value>& args) {
    require_arity(e, {1});
    require_tropical(e);
    try {
      if (const auto* s = std::get_if<ScalarValue>(&args[0])) return ScalarValue{trop_closure_scalar(s->value, space_), space_};
      std::optional<TropMatrix> storage;
      const TropMatrix& a = matrix_arg(args[0], e.children[0], storage);
      return MatrixValue{closure_block(a), false};
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::ClosureUndefined) return UndefinedValue{};
      throw;
    }
  }

  Value cmd_linear_system(const Expr& e, const std::vector<Value>& args) {
    require_arity(e, {2});
    require_tropical(e);
    std::optional<TropMatrix> storage;
    const TropMatrix& a = matrix_arg(args[0], e.children[0], storage);
    const TropMatrix b = column_arg(args[1], e.children[1]);
    if (e.text == "solveLAETropic") return MatrixValue{solve_lae_tropic(a, b), true};
    return IntervalListValue{solve_lai_tropic(a, b).intervals};
  }

  Value cmd_bellman(const Expr& e, const std::vector<Value>& args) {
    require_arity(e, {1, 2});
    require_tropical(e);
    std::optional<TropMatrix> storage;
    const TropMatrix& a = matrix_arg(args[0], e.children[0], storage);
    if (e.text == "BellmanEquation") {
      if (args.size() == 1) return MatrixValue{bellman_homogeneous(a), false};
      return MatrixValue{bellman_solve(a, column_arg(args[1], e.children[1])), true};
    }
    if (args.size() == 1) return MatrixValue{bellman_inequality(a), false};
    return MatrixValue{bellman_inequality(a, column_arg(args[1], e.children[1])), true};
  }

  Value cmd_graph(const Expr& e, const std::vector<Value>& args) {
    require_tropical(e);
    if (e.text == "searchLeastDistances") {
      require_arity(e, {1});
      std::optional<TropMatrix> storage;
      return MatrixValue{search_least_distances(WeightedGraph(matrix_arg(args[0], e.children[0], storage))), false};
    }
    require_arity(e, {3});
    std::optional<TropMatrix> storage;
    const WeightedGraph g(matrix_arg(args[0], e.children[0], storage));
    return PathValue{find_shortest_path(g, index_arg(args[1], e.children[1]), index_arg(args[2], e.children[2]))};
  }

  /// Rational rows of a matrix argument; () is an empty block.
  lp::RationalRows rows_arg(const Value& v, const Expr& arg) const {
    if (std::holds_alternative<EmptyValue>(v)) return {};
    std::optional<TropMatrix> storage;
    const TropMatrix& m = matrix_arg(v, arg, storage);
    lp::RationalRows rows(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = exact(m(r, c));
    }
    return rows;
  }

  std::vector<Rational> vector_arg(const Value& v, const Expr& arg) const {
    if (std::holds_alternative<EmptyValue>(v)) return {};
    const TropMatrix col = column_arg(v, arg);
    std::vector<Rational> out;
    for (const auto& x : col.entries()) out.push_back(exact(x));
    return out;
  }

  static Rational exact(const ExtScalar& s) {
    return s.is_rational() ? s.rational() : rational_from_double(s.real());
  }

  Value cmd_simplex(const Expr& e, const std::vector<Value>& args) {
    require_arity(e, {3, 5, 7});
    if (space_.is_tropical()) {
      fail(e.pos, "algebra mismatch: \\" + e.text + " requires Q or R64, current space is " + std::string(space_.name()));
    }
    lp::LpProblem p;
    p.sense = e.text == "SimplexMax" ? lp::Sense::Max : lp::Sense::Min;
    const auto& c = e.children;
    switch (args.size()) {
      case 3:
        p.le_matrix = rows_arg(args[0], c[0]);
        p.le_rhs = vector_arg(args[1], c[1]);
        break;
      case 5:
        p.le_matrix = rows_arg(args[0], c[0]);
        p.eq_matrix = rows_arg(args[1], c[1]);
        p.le_rhs = vector_arg(args[2], c[2]);
        p.eq_rhs = vector_arg(args[3], c[3]);
        break;
      default:
        p.le_matrix = rows_arg(args[0], c[0]);
        p.eq_matrix = rows_arg(args[1], c[1]);
        p.ge_matrix = rows_arg(args[2], c[2]);
        p.le_rhs = vector_arg(args[3], c[3]);
        p.eq_rhs = vector_arg(args[4], c[4]);
        p.ge_rhs = vector_arg(args[5], c[5]);
        break;
    }
    p.objective = vector_arg(args.back(), c.back());
    return LpValue{lp::simplex_solve(p), space_.domain};
  }

  Value cmd_solve(const Expr& e, const std::vector<Value>& args) {
    require_arity(e, {1});
    if (space_ != kQ) fail(e.pos, "algebra mismatch: \\solve requires Q or Q[x]");
    std::vector<lp::LinearInequality> ineqs;
    std::string var;
    auto take = [&](const Value& v) {
      const auto* i = std::get_if<InequalityValue>(&v);
      if (!i) fail(e.children[0].pos, "\\solve expects a list of inequalities");
      if (!var.empty() && !i->var.empty() && i->var != var) fail(e.pos, "\\solve supports a single variable");
      if (var.empty()) var = i->var;
      ineqs.push_back(i->ineq);
    };
    if (const auto* list = std::get_if<ValueList>(&args[0])) {
      for (const auto& item : *list) take(item.value);
    } else {
      take(args[0]);
    }
    return lp::solve_univariate_linear(ineqs);
  }

  RenderOptions options_;
  Algebra space_ = kQ;
  std::vector<std::string> space_vars_;
  std::map<std::string, Value> bindings_;
  std::vector<OutputLine> output_;
};

/// Runs a script in a fresh session and returns the printed lines.
inline std::vector<std::string> evaluate(std::string_view source, RenderOptions options = {}) {
  Session session(options);
  session.run(source);
  std::vector<std::string> lines;
  for (const auto& line : session.output()) lines.push_back(line.text);
  return lines;
}

}  // namespace tropical::mathpar
