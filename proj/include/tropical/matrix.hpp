#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tropical/semiring.hpp"

namespace tropical {

/// Dense row-major matrix of ExtScalar tagged with its algebra.
class TropMatrix {
 public:
  /// A rows x cols matrix filled with the algebra's zero.
  TropMatrix(std::size_t rows, std::size_t cols, const Algebra& alg)
      : rows_(rows), cols_(cols), alg_(alg) {
    check_shape();
    entries_.assign(rows * cols, zero(alg));
  }

  TropMatrix(std::size_t rows, std::size_t cols, std::vector<ExtScalar> entries, const Algebra& alg)
      : rows_(rows), cols_(cols), entries_(std::move(entries)), alg_(alg) {
    check_shape();
    if (entries_.size() != rows_ * cols_) {
      throw Error(ErrorKind::DimensionMismatch, "entry count does not match the shape");
    }
    for (auto& e : entries_) e = coerce(e, alg_);
  }

  TropMatrix(std::initializer_list<std::initializer_list<ExtScalar>> rows, const Algebra& alg) : alg_(alg) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    check_shape();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
      for (const auto& e : row) entries_.push_back(coerce(e, alg_));
    }
  }

  /// Column vector from a sequence of values.
  static TropMatrix column(const std::vector<ExtScalar>& values, const Algebra& alg) {
    return TropMatrix(values.size(), 1, values, alg);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const Algebra& algebra() const noexcept { return alg_; }

  const ExtScalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Stores a value; it must already be legal for the algebra.
  void set(std::size_t r, std::size_t c, ExtScalar value) {
    check_legal(value, alg_);
    entries_[r * cols_ + c] = std::move(value);
  }

  const std::vector<ExtScalar>& entries() const noexcept { return entries_; }

  TropMatrix column_at(std::size_t c) const {
    TropMatrix out(rows_, 1, alg_);
    for (std::size_t r = 0; r < rows_; ++r) out.entries_[r] = (*this)(r, c);
    return out;
  }

  TropMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    TropMatrix out(nr, nc, alg_);
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t c = 0; c < nc; ++c) out.entries_[r * nc + c] = (*this)(r0 + r, c0 + c);
    }
    return out;
  }

  TropMatrix transposed() const {
    TropMatrix out(cols_, rows_, alg_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out.entries_[c * rows_ + r] = (*this)(r, c);
    }
    return out;
  }

  /// The same entries under another algebra; throws if any entry is illegal there.
  TropMatrix retagged(const Algebra& alg) const { return TropMatrix(rows_, cols_, entries_, alg); }

  bool operator==(const TropMatrix&) const = default;

 private:
  friend TropMatrix mat_mul(const TropMatrix&, const TropMatrix&);
  friend TropMatrix join_blocks(const TropMatrix&, const TropMatrix&, const TropMatrix&, const TropMatrix&);

  void check_shape() const {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorKind::DimensionMismatch, "matrices need at least one row and column");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtScalar> entries_;
  Algebra alg_;
};

namespace detail {
inline void check_same_algebra(const TropMatrix& a, const TropMatrix& b) {
  if (a.algebra() != b.algebra()) {
    throw Error(ErrorKind::AlgebraMismatch, std::string(a.algebra().name()) + " vs " + std::string(b.algebra().name()));
  }
}
inline void check_tropical(const TropMatrix& a) {
  if (!a.algebra().is_tropical()) throw Error(ErrorKind::AlgebraMismatch, "operation requires a tropical algebra");
}
}  // namespace detail

/// C_jk = ⊕_i A_ji ⊙ B_ik.
inline TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  detail::check_same_algebra(a, b);
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
  }
  const Algebra& alg = a.algebra();
  TropMatrix c(a.rows(), b.cols(), alg);
  for (std::size_t j = 0; j < a.rows(); ++j) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      ExtScalar acc = zero(alg);
      for (std::size_t i = 0; i < a.cols(); ++i) acc = trop_add(acc, trop_mul(a(j, i), b(i, k), alg), alg);
      c.entries_[j * c.cols_ + k] = std::move(acc);
    }
  }
  return c;
}

/// Entrywise ⊕.
inline TropMatrix mat_oplus(const TropMatrix& a, const TropMatrix& b) {
  detail::check_same_algebra(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "entrywise sum needs equal shapes");
  }
  std::vector<ExtScalar> out;
  out.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    out.push_back(trop_add(a.entries()[i], b.entries()[i], a.algebra()));
  }
  return TropMatrix(a.rows(), a.cols(), std::move(out), a.algebra());
}

/// (A⁻)_jk = -A_kj, with the infinite element fixed.
inline TropMatrix pseudo_inverse(const TropMatrix& a) {
  detail::check_tropical(a);
  TropMatrix out(a.cols(), a.rows(), a.algebra());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t k = 0; k < a.rows(); ++k) {
      const ExtScalar& v = a(k, j);
      out.set(j, k, v.is_infinite() ? v : trop_neg(v));
    }
  }
  return out;
}

inline TropMatrix diag(const std::vector<ExtScalar>& d, const Algebra& alg) {
  TropMatrix out(d.size(), d.size(), alg);
  for (std::size_t i = 0; i < d.size(); ++i) out.set(i, i, coerce(d[i], alg));
  return out;
}

inline TropMatrix identity(std::size_t n, const Algebra& alg) {
  return diag(std::vector<ExtScalar>(n, one(alg)), alg);
}

inline TropMatrix zero_matrix(std::size_t rows, std::size_t cols, const Algebra& alg) {
  return TropMatrix(rows, cols, alg);
}

/// Assembles [[r1, r2], [r3, r4]].
inline TropMatrix join_blocks(const TropMatrix& r1, const TropMatrix& r2, const TropMatrix& r3, const TropMatrix& r4) {
  const std::size_t top = r1.rows();
  const std::size_t left = r1.cols();
  TropMatrix out(top + r3.rows(), left + r2.cols(), r1.algebra());
  auto copy = [&out](const TropMatrix& src, std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < src.rows(); ++r) {
      for (std::size_t c = 0; c < src.cols(); ++c) out.entries_[(r0 + r) * out.cols_ + c0 + c] = src(r, c);
    }
  };
  copy(r1, 0, 0);
  copy(r2, 0, left);
  copy(r3, top, 0);
  copy(r4, top, left);
  return out;
}

/// Closure as the finite sum I ⊕ A ⊕ ... ⊕ A^{n-1}, followed by the
/// fixed-point check I ⊕ A·B = B. (I ⊕ A)^{n-1} equals that sum because ⊕ is
/// idempotent, so the power is taken by repeated squaring.
inline TropMatrix closure_iterative(const TropMatrix& a) {
  detail::check_tropical(a);
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "closure needs a square matrix");
  const std::size_t n = a.rows();
  const TropMatrix id = identity(n, a.algebra());
  TropMatrix result = id;
  TropMatrix base = mat_oplus(id, a);
  for (std::size_t e = n - 1; e > 0; e >>= 1) {
    if (e & 1U) result = mat_mul(result, base);
    if (e > 1) base = mat_mul(base, base);
  }
  if (mat_oplus(id, mat_mul(a, result)) != result) {
    throw Error(ErrorKind::ClosureUndefined, "matrix closure does not exist");
  }
  return result;
}

/// Embeds A in the top-left corner of the next power-of-two square matrix;
/// the border is the algebra's infinite element.
inline TropMatrix pad_to_power_of_two(const TropMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "padding needs a square matrix");
  std::size_t size = 1;
  while (size < a.rows()) size <<= 1;
  if (size == a.rows()) return a;
  TropMatrix out(size, size, a.algebra());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
  }
  return out;
}

namespace detail {

inline TropMatrix closure_recursive(const TropMatrix& m) {
  const Algebra& alg = m.algebra();
  if (m.rows() == 1) return TropMatrix({{trop_closure_scalar(m(0, 0), alg)}}, alg);
  const std::size_t h = m.rows() / 2;
  const TropMatrix e = m.block(0, 0, h, h);
  const TropMatrix f = m.block(0, h, h, h);
  const TropMatrix g = m.block(h, 0, h, h);
  const TropMatrix hh = m.block(h, h, h, h);

  const TropMatrix s = closure_recursive(e);
  const TropMatrix b = mat_mul(g, s);
  const TropMatrix r4 = closure_recursive(mat_oplus(hh, mat_mul(b, f)));
  const TropMatrix r3 = mat_mul(r4, b);
  const TropMatrix v = mat_mul(s, f);
  const TropMatrix r2 = mat_mul(v, r4);
  const TropMatrix r1 = mat_oplus(s, mat_mul(v, r3));
  return join_blocks(r1, r2, r3, r4);
}

}  // namespace detail

/// Block-recursive closure: with A = [[E, F], [G, H]] and D = H ⊕ G E^× F,
/// A^× = [[E^× ⊕ E^× F D^× G E^×, E^× F D^×], [D^× G E^×, D^×]].
/// Non-power-of-two sizes are padded with the infinite element, whose
/// border closes to the identity.
inline TropMatrix closure_block(const TropMatrix& a) {
  detail::check_tropical(a);
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "closure needs a square matrix");
  const TropMatrix padded = pad_to_power_of_two(a);
  TropMatrix full = detail::closure_recursive(padded);
  if (padded.rows() == a.rows()) return full;
  return full.block(0, 0, a.rows(), a.cols());
}

/// Multiplies every entry by a scalar (⊙ under tropical algebras).
inline TropMatrix scale(const ExtScalar& s, const TropMatrix& a) {
  std::vector<ExtScalar> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(trop_mul(s, e, a.algebra()));
  return TropMatrix(a.rows(), a.cols(), std::move(out), a.algebra());
}

/// Entrywise comparison in the numeric order: every A_jk <= B_jk.
inline bool entrywise_leq(const TropMatrix& a, const TropMatrix& b) {
  detail::check_same_algebra(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "shapes differ");
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (compare(a.entries()[i], b.entries()[i]) > 0) return false;
  }
  return true;
}

}  // namespace tropical
