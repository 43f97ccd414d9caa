#pragma once

#include <string>

#include "tropical/scalar.hpp"

namespace tropical {

/// The absorbing element of ⊕-neutral kind: -inf over max-plus, +inf over
/// min-plus, ordinary 0 over the classical algebras.
inline ExtScalar zero(const Algebra& alg) {
  switch (alg.semiring) {
    case Semiring::MaxPlus: return ExtScalar::neg_inf();
    case Semiring::MinPlus: return ExtScalar::pos_inf();
    case Semiring::ClassicalQ: return ExtScalar(0);
    case Semiring::ClassicalF64: return ExtScalar::from_double(0.0);
  }
  return ExtScalar(0);
}

/// The ⊙-identity. Tropical and classical algebras disagree: 0 vs 1.
inline ExtScalar one(const Algebra& alg) {
  if (alg.is_tropical()) return alg.domain == Domain::F64 ? ExtScalar::from_double(0.0) : ExtScalar(0);
  return alg.domain == Domain::F64 ? ExtScalar::from_double(1.0) : ExtScalar(1);
}

/// The one infinite element the algebra admits.
inline ExtScalar infinite_element(const Algebra& alg) {
  if (!alg.is_tropical()) throw Error(ErrorKind::AlgebraMismatch, std::string(alg.name()) + " has no infinite element");
  return zero(alg);
}

inline bool is_legal(const ExtScalar& a, const Algebra& alg) noexcept {
  if (a.is_infinite()) {
    if (alg.semiring == Semiring::MaxPlus) return a.infinity() == Infinity::Neg;
    if (alg.semiring == Semiring::MinPlus) return a.infinity() == Infinity::Pos;
    return false;
  }
  if (alg.domain == Domain::F64) return a.is_real();
  if (alg.domain == Domain::Z) return a.is_integer();
  return a.is_rational();
}

inline void check_legal(const ExtScalar& a, const Algebra& alg) {
  if (a.is_infinite()) {
    if (!alg.is_tropical()) {
      throw Error(ErrorKind::AlgebraMismatch, std::string(alg.name()) + " does not admit infinities");
    }
    if (!is_legal(a, alg)) {
      throw Error(ErrorKind::IllegalElement, std::string(a.is_pos_inf() ? "+inf" : "-inf") + " is not an element of " +
                                                 std::string(alg.name()));
    }
    return;
  }
  if (!is_legal(a, alg)) {
    throw Error(ErrorKind::AlgebraMismatch, "value is not in the number domain of " + std::string(alg.name()));
  }
}

/// Brings a value into the number domain of `alg`: rationals become doubles
/// under F64, doubles become exact rationals under Z/Q. Z additionally
/// rejects non-integers.
inline ExtScalar coerce(const ExtScalar& a, const Algebra& alg) {
  ExtScalar out = a;
  if (a.is_finite()) {
    if (alg.domain == Domain::F64 && a.is_rational()) {
      out = ExtScalar::from_double(to_double(a.rational()));
    } else if (alg.domain != Domain::F64 && a.is_real()) {
      out = ExtScalar(rational_from_double(a.real()));
    }
  }
  check_legal(out, alg);
  return out;
}

namespace detail {

inline void check_pair(const ExtScalar& a, const ExtScalar& b, const Algebra& alg) {
  if (a.is_infinite()) check_legal(a, alg);
  if (b.is_infinite()) check_legal(b, alg);
}

inline ExtScalar add_finite(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_rational() && b.is_rational()) return ExtScalar(Rational(a.rational() + b.rational()));
  if (a.is_real() && b.is_real()) return ExtScalar::from_double(a.real() + b.real());
  throw Error(ErrorKind::AlgebraMismatch, "mixed rational and floating-point operands");
}

inline ExtScalar mul_finite(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_rational() && b.is_rational()) return ExtScalar(Rational(a.rational() * b.rational()));
  if (a.is_real() && b.is_real()) return ExtScalar::from_double(a.real() * b.real());
  throw Error(ErrorKind::AlgebraMismatch, "mixed rational and floating-point operands");
}

}  // namespace detail

/// ⊕: max over max-plus, min over min-plus, + over the classical algebras.
inline ExtScalar trop_add(const ExtScalar& a, const ExtScalar& b, const Algebra& alg) {
  detail::check_pair(a, b, alg);
  ++op_counts().add;
  switch (alg.semiring) {
    case Semiring::MaxPlus: return compare(a, b) >= 0 ? a : b;
    case Semiring::MinPlus: return compare(a, b) <= 0 ? a : b;
    case Semiring::ClassicalQ:
    case Semiring::ClassicalF64: return detail::add_finite(a, b);
  }
  return a;
}

/// ⊙: + with the infinite element absorbing, or × over the classical algebras.
inline ExtScalar trop_mul(const ExtScalar& a, const ExtScalar& b, const Algebra& alg) {
  detail::check_pair(a, b, alg);
  ++op_counts().mul;
  if (!alg.is_tropical()) return detail::mul_finite(a, b);
  if (a.is_infinite()) return a;
  if (b.is_infinite()) return b;
  return detail::add_finite(a, b);
}

/// Multiplicative inverse in the semifield, i.e. numeric negation.
inline ExtScalar trop_neg(const ExtScalar& a) {
  if (a.is_infinite()) throw Error(ErrorKind::NoInverse, "the infinite element has no multiplicative inverse");
  ++op_counts().neg;
  if (a.is_rational()) return ExtScalar(Rational(-a.rational()));
  return ExtScalar::from_double(-a.real());
}

/// Scalar closure: the ⊙-identity when the value lies on the non-positive
/// side of the algebra's order (<= 0 max-plus, >= 0 min-plus), undefined
/// otherwise. The infinite element closes to the identity.
inline ExtScalar trop_closure_scalar(const ExtScalar& a, const Algebra& alg) {
  if (!alg.is_tropical()) throw Error(ErrorKind::AlgebraMismatch, "closure requires a tropical algebra");
  check_legal(a, alg);
  const ExtScalar identity = one(alg);
  if (a.is_infinite()) return identity;
  const auto c = compare(a, identity);
  const bool defined = alg.semiring == Semiring::MaxPlus ? c <= 0 : c >= 0;
  if (!defined) throw Error(ErrorKind::ClosureUndefined, "scalar closure does not exist");
  return identity;
}

/// True when `a ⊕ b == b`, i.e. a precedes b in the semiring's own order.
inline bool semiring_leq(const ExtScalar& a, const ExtScalar& b, const Algebra& alg) {
  switch (alg.semiring) {
    case Semiring::MaxPlus: return compare(a, b) <= 0;
    case Semiring::MinPlus: return compare(a, b) >= 0;
    default: return compare(a, b) <= 0;
  }
}

}  // namespace tropical
