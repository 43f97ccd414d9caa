#pragma once

#include <optional>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

/// One coordinate of the solution set of a tropical inequality system.
struct IntervalBound {
  ExtScalar lower;
  ExtScalar upper;
  bool lower_closed = false;
  bool upper_closed = true;

  bool operator==(const IntervalBound&) const = default;
};

struct InequalitySolution {
  TropMatrix principal;
  std::vector<IntervalBound> intervals;
};

namespace detail {

inline void check_system(const TropMatrix& a, const TropMatrix& b) {
  check_same_algebra(a, b);
  check_tropical(a);
  if (b.cols() != 1) throw Error(ErrorKind::DimensionMismatch, "right-hand side must be a column");
  if (b.rows() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
}

/// (b⁻A)⁻. Rows of b holding the infinite element force every coordinate they
/// constrain to the infinite element, which the plain pseudo-inverse formula
/// would otherwise leave unconstrained.
inline TropMatrix principal_solution(const TropMatrix& a, const TropMatrix& b) {
  TropMatrix x = pseudo_inverse(mat_mul(pseudo_inverse(b), a));
  const ExtScalar inf = infinite_element(a.algebra());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    if (!b(j, 0).is_infinite()) continue;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(j, k).is_infinite()) continue;
      x.set(k, 0, inf);
    }
  }
  return x;
}

/// X ⊕ Y == Y, i.e. X <= Y in the semiring's own order.
inline bool semiring_leq(const TropMatrix& x, const TropMatrix& y) { return mat_oplus(x, y) == y; }

}  // namespace detail

/// Greatest solution of A x <= b (max-plus; least, numerically, of A x >= b
/// over min-plus) together with its per-coordinate interval rendering.
inline InequalitySolution solve_lai_tropic(const TropMatrix& a, const TropMatrix& b) {
  detail::check_system(a, b);
  TropMatrix principal = detail::principal_solution(a, b);
  if (!detail::semiring_leq(mat_mul(a, principal), b)) {
    throw Error(ErrorKind::NoSolution, "principal solution failed re-verification");
  }
  const Algebra& alg = a.algebra();
  std::vector<IntervalBound> intervals;
  intervals.reserve(principal.rows());
  for (std::size_t k = 0; k < principal.rows(); ++k) {
    if (alg.semiring == Semiring::MaxPlus) {
      intervals.push_back({ExtScalar::neg_inf(), principal(k, 0), false, true});
    } else {
      intervals.push_back({principal(k, 0), ExtScalar::pos_inf(), true, false});
    }
  }
  return {std::move(principal), std::move(intervals)};
}

/// A particular solution of A x = b: the principal solution, which is the
/// greatest one whenever any solution exists.
inline TropMatrix solve_lae_tropic(const TropMatrix& a, const TropMatrix& b) {
  detail::check_system(a, b);
  TropMatrix x = detail::principal_solution(a, b);
  if (mat_mul(a, x) != b) throw Error(ErrorKind::NoSolution, "the system A x = b has no solution");
  return x;
}

/// X = A^× B, the least solution of A X ⊕ B = X.
inline TropMatrix bellman_solve(const TropMatrix& a, const TropMatrix& b) {
  detail::check_same_algebra(a, b);
  if (!a.is_square() || b.rows() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "Bellman system shape");
  TropMatrix x = mat_mul(closure_block(a), b);
  if (mat_oplus(mat_mul(a, x), b) != x) throw Error(ErrorKind::NoSolution, "Bellman fixed point failed re-verification");
  return x;
}

/// Columns c of A^× with A c = c, as a generator of solutions of A x = x.
inline TropMatrix bellman_homogeneous(const TropMatrix& a) {
  const TropMatrix closure = closure_block(a);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < closure.cols(); ++k) {
    const TropMatrix c = closure.column_at(k);
    if (mat_mul(a, c) == c) keep.push_back(k);
  }
  if (keep.empty()) throw Error(ErrorKind::NoSolution, "no column of the closure solves A x = x");
  TropMatrix out(a.rows(), keep.size(), a.algebra());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, i, closure(r, keep[i]));
  }
  return out;
}

/// Without b: A^×, every column of which satisfies A x <= x. With b: A^× b,
/// which satisfies A x ⊕ b <= x.
inline TropMatrix bellman_inequality(const TropMatrix& a, const std::optional<TropMatrix>& b = std::nullopt) {
  if (!b) {
    TropMatrix closure = closure_block(a);
    if (!detail::semiring_leq(mat_mul(a, closure), closure)) {
      throw Error(ErrorKind::NoSolution, "closure failed re-verification");
    }
    return closure;
  }
  detail::check_system(a, *b);
  TropMatrix x = mat_mul(closure_block(a), *b);
  if (!detail::semiring_leq(mat_oplus(mat_mul(a, x), *b), x)) {
    throw Error(ErrorKind::NoSolution, "Bellman inequality failed re-verification");
  }
  return x;
}

}  // namespace tropical
