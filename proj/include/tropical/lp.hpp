#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropical/scalar.hpp"

namespace tropical::lp {

/// Dense constraint block; zero rows is a legal, empty block.
using RationalRows = std::vector<std::vector<Rational>>;

enum class Sense { Max, Min };

/// maximize / minimize c^T x subject to
///   le_matrix x <= le_rhs, eq_matrix x = eq_rhs, ge_matrix x >= ge_rhs, x >= 0.
struct LpProblem {
  RationalRows le_matrix;
  RationalRows eq_matrix;
  RationalRows ge_matrix;
  std::vector<Rational> le_rhs;
  std::vector<Rational> eq_rhs;
  std::vector<Rational> ge_rhs;
  std::vector<Rational> objective;
  Sense sense = Sense::Max;

  std::size_t variable_count() const noexcept { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

constexpr const char* to_string(LpStatus s) noexcept {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "?";
}

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;  // set when Optimal
  Rational objective;       // set when Optimal
  std::size_t pivots = 0;
  // c_j - z_j of the maximization form over structural and slack columns at
  // the final tableau; all <= 0 when Optimal
  std::vector<Rational> reduced_costs;
};

namespace detail {

enum class RowKind { Le, Eq, Ge };

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::vector<std::size_t> basis,
          std::size_t columns)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)), columns_(columns) {}

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t columns() const noexcept { return columns_; }
  const std::vector<std::size_t>& basis() const noexcept { return basis_; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }
  std::size_t pivots() const noexcept { return pivots_; }

  /// c_j - c_B^T B^-1 A_j for every column.
  std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) const {
    std::vector<Rational> out(cost.begin(), cost.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t c = 0; c < columns_; ++c) {
        if (rows_[r][c] != 0) out[c] -= cb * rows_[r][c];
      }
    }
    return out;
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) v += cost[basis_[r]] * rhs_[r];
    return v;
  }

  /// Maximizes cost over the columns flagged in `allowed` with Bland's rule.
  /// Returns false when the objective is unbounded.
  bool maximize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      const std::vector<Rational> reduced = reduced_costs(cost);
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < columns_; ++c) {
        if (allowed[c] && reduced[c] > 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& coeff = rows_[r][*entering];
        if (coeff <= 0) continue;
        Rational ratio = rhs_[r] / coeff;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    const Rational p = rows_[row][col];
    for (auto& v : rows_[row]) v /= p;
    rhs_[row] /= p;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r == row) continue;
      const Rational factor = rows_[r][col];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < columns_; ++c) {
        if (rows_[row][c] != 0) rows_[r][c] -= factor * rows_[row][c];
      }
      rhs_[r] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t row) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(row));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::size_t columns_;
  std::size_t pivots_ = 0;
};

inline void check_block(const RationalRows& m, const std::vector<Rational>& rhs, std::size_t n, const char* name) {
  if (m.size() != rhs.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(name) + ": row count differs from right-hand side length");
  }
  for (const auto& row : m) {
    if (row.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, std::string(name) + ": column count differs from objective length");
    }
  }
}

}  // namespace detail

/// Two-phase simplex over exact rationals with Bland's pivoting rule.
inline LpOutcome simplex_solve(const LpProblem& p) {
  using detail::RowKind;
  const std::size_t n = p.variable_count();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "objective has no variables");
  detail::check_block(p.le_matrix, p.le_rhs, n, "<= block");
  detail::check_block(p.eq_matrix, p.eq_rhs, n, "= block");
  detail::check_block(p.ge_matrix, p.ge_rhs, n, ">= block");

  struct Row {
    std::vector<Rational> coeffs;
    Rational rhs;
    RowKind kind;
  };
  std::vector<Row> rows;
  auto add_rows = [&rows](const RationalRows& m, const std::vector<Rational>& rhs, RowKind kind) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      Row row{m[i], rhs[i], kind};
      if (row.rhs < 0) {
        for (auto& v : row.coeffs) v = -v;
        row.rhs = -row.rhs;
        if (row.kind == RowKind::Le) {
          row.kind = RowKind::Ge;
        } else if (row.kind == RowKind::Ge) {
          row.kind = RowKind::Le;
        }
      }
      rows.push_back(std::move(row));
    }
  };
  add_rows(p.le_matrix, p.le_rhs, RowKind::Le);
  add_rows(p.eq_matrix, p.eq_rhs, RowKind::Eq);
  add_rows(p.ge_matrix, p.ge_rhs, RowKind::Ge);

  // column layout: structural | slack/surplus | artificial
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& row : rows) {
    if (row.kind != RowKind::Eq) ++slack_count;
    if (row.kind != RowKind::Le) ++artificial_count;
  }
  const std::size_t first_artificial = n + slack_count;
  const std::size_t columns = first_artificial + artificial_count;

  std::vector<std::vector<Rational>> table;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;
  std::size_t next_slack = n;
  std::size_t next_artificial = first_artificial;
  for (auto& row : rows) {
    std::vector<Rational> line(columns);
    std::copy(row.coeffs.begin(), row.coeffs.end(), line.begin());
    switch (row.kind) {
      case RowKind::Le:
        line[next_slack] = 1;
        basis.push_back(next_slack++);
        break;
      case RowKind::Ge:
        line[next_slack++] = -1;
        line[next_artificial] = 1;
        basis.push_back(next_artificial++);
        break;
      case RowKind::Eq:
        line[next_artificial] = 1;
        basis.push_back(next_artificial++);
        break;
    }
    table.push_back(std::move(line));
    rhs.push_back(row.rhs);
  }
  detail::Tableau tableau(std::move(table), std::move(rhs), std::move(basis), columns);

  LpOutcome outcome;
  if (artificial_count > 0) {
    std::vector<Rational> phase1_cost(columns);
    for (std::size_t c = first_artificial; c < columns; ++c) phase1_cost[c] = -1;
    tableau.maximize(phase1_cost, std::vector<bool>(columns, true));
    if (tableau.value(phase1_cost) < 0) {
      outcome.status = LpStatus::Infeasible;
      outcome.pivots = tableau.pivots();
      return outcome;
    }
    // artificials left in the basis sit at zero; swap them out or drop the
    // redundant row
    for (std::size_t r = tableau.row_count(); r-- > 0;) {
      if (tableau.basis()[r] < first_artificial) continue;
      std::optional<std::size_t> replacement;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (tableau.at(r, c) != 0) {
          replacement = c;
          break;
        }
      }
      if (replacement) {
        tableau.pivot(r, *replacement);
      } else {
        tableau.drop_row(r);
      }
    }
  }

  std::vector<Rational> cost(columns);
  for (std::size_t j = 0; j < n; ++j) cost[j] = p.sense == Sense::Max ? p.objective[j] : Rational(-p.objective[j]);
  std::vector<bool> allowed(columns, false);
  std::fill(allowed.begin(), allowed.begin() + static_cast<std::ptrdiff_t>(first_artificial), true);
  const bool bounded = tableau.maximize(cost, allowed);
  outcome.pivots = tableau.pivots();
  if (!bounded) {
    outcome.status = LpStatus::Unbounded;
    return outcome;
  }

  outcome.status = LpStatus::Optimal;
  outcome.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < tableau.row_count(); ++r) {
    if (tableau.basis()[r] < n) outcome.x[tableau.basis()[r]] = tableau.rhs(r);
  }
  const Rational value = tableau.value(cost);
  outcome.objective = p.sense == Sense::Max ? value : Rational(-value);
  auto reduced = tableau.reduced_costs(cost);
  reduced.resize(first_artificial);
  outcome.reduced_costs = std::move(reduced);
  return outcome;
}

// ---------------------------------------------------------------------------
// Univariate linear inequalities

enum class RelOp { Less, LessEq, Greater, GreaterEq };

/// coefficient * x + constant (op) 0
struct LinearInequality {
  Rational coefficient;
  Rational constant;
  RelOp op = RelOp::Less;
};

/// A subset of the real line bounded by rationals or ±inf; `empty` overrides
/// the bounds. An absent bound means infinite.
struct Interval {
  bool empty = false;
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval real_line() { return {}; }
  static Interval empty_set() { return Interval{true, std::nullopt, std::nullopt, false, false}; }

  bool contains(const Rational& x) const {
    if (empty) return false;
    if (lo && (x < *lo || (x == *lo && !lo_closed))) return false;
    if (hi && (x > *hi || (x == *hi && !hi_closed))) return false;
    return true;
  }

  bool operator==(const Interval&) const = default;
};

inline Interval intersect(const Interval& a, const Interval& b) {
  if (a.empty || b.empty) return Interval::empty_set();
  Interval out = a;
  if (b.lo && (!out.lo || *b.lo > *out.lo)) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else if (b.lo && *b.lo == *out.lo) {
    out.lo_closed = out.lo_closed && b.lo_closed;
  }
  if (b.hi && (!out.hi || *b.hi < *out.hi)) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else if (b.hi && *b.hi == *out.hi) {
    out.hi_closed = out.hi_closed && b.hi_closed;
  }
  if (out.lo && out.hi && (*out.lo > *out.hi || (*out.lo == *out.hi && !(out.lo_closed && out.hi_closed)))) {
    return Interval::empty_set();
  }
  return out;
}

/// Solution set of a single inequality.
inline Interval solve_one(const LinearInequality& ineq) {
  const bool strict = ineq.op == RelOp::Less || ineq.op == RelOp::Greater;
  bool upper = ineq.op == RelOp::Less || ineq.op == RelOp::LessEq;
  if (ineq.coefficient == 0) {
    const Rational& k = ineq.constant;
    bool holds = false;
    switch (ineq.op) {
      case RelOp::Less: holds = k < 0; break;
      case RelOp::LessEq: holds = k <= 0; break;
      case RelOp::Greater: holds = k > 0; break;
      case RelOp::GreaterEq: holds = k >= 0; break;
    }
    return holds ? Interval::real_line() : Interval::empty_set();
  }
  const Rational root = -ineq.constant / ineq.coefficient;
  if (ineq.coefficient < 0) upper = !upper;
  Interval out;
  if (upper) {
    out.hi = root;
    out.hi_closed = !strict;
  } else {
    out.lo = root;
    out.lo_closed = !strict;
  }
  return out;
}

/// Intersection of the solution sets of every inequality.
inline Interval solve_univariate_linear(const std::vector<LinearInequality>& ineqs) {
  Interval out = Interval::real_line();
  for (const auto& ineq : ineqs) out = intersect(out, solve_one(ineq));
  return out;
}

}  // namespace tropical::lp
