#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tropical/error.hpp"

namespace tropical {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator by the GMP backend.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

enum class Semiring { MaxPlus, MinPlus, ClassicalQ, ClassicalF64 };
enum class Domain { Z, Q, F64 };

struct Algebra {
  Semiring semiring = Semiring::ClassicalQ;
  Domain domain = Domain::Q;

  constexpr bool operator==(const Algebra&) const = default;

  constexpr bool is_tropical() const noexcept {
    return semiring == Semiring::MaxPlus || semiring == Semiring::MinPlus;
  }
  constexpr bool is_exact() const noexcept { return domain != Domain::F64; }

  constexpr std::string_view name() const noexcept;
  static constexpr std::optional<Algebra> from_name(std::string_view name) noexcept;
};

inline constexpr Algebra kZMaxPlus{Semiring::MaxPlus, Domain::Z};
inline constexpr Algebra kZMinPlus{Semiring::MinPlus, Domain::Z};
inline constexpr Algebra kQMaxPlus{Semiring::MaxPlus, Domain::Q};
inline constexpr Algebra kQMinPlus{Semiring::MinPlus, Domain::Q};
inline constexpr Algebra kR64MaxPlus{Semiring::MaxPlus, Domain::F64};
inline constexpr Algebra kR64MinPlus{Semiring::MinPlus, Domain::F64};
inline constexpr Algebra kQ{Semiring::ClassicalQ, Domain::Q};
inline constexpr Algebra kR64{Semiring::ClassicalF64, Domain::F64};

namespace detail {
struct NamedAlgebra {
  std::string_view name;
  Algebra algebra;
};
inline constexpr std::array<NamedAlgebra, 8> kAlgebraNames{{
    {"ZMaxPlus", kZMaxPlus},
    {"ZMinPlus", kZMinPlus},
    {"QMaxPlus", kQMaxPlus},
    {"QMinPlus", kQMinPlus},
    {"R64MaxPlus", kR64MaxPlus},
    {"R64MinPlus", kR64MinPlus},
    {"Q", kQ},
    {"R64", kR64},
}};
}  // namespace detail

constexpr std::string_view Algebra::name() const noexcept {
  for (const auto& entry : detail::kAlgebraNames) {
    if (entry.algebra == *this) return entry.name;
  }
  return "?";
}

constexpr std::optional<Algebra> Algebra::from_name(std::string_view name) noexcept {
  for (const auto& entry : detail::kAlgebraNames) {
    if (entry.name == name) return entry.algebra;
  }
  return std::nullopt;
}

enum class Infinity : signed char { Neg = -1, Pos = 1 };

/// A finite exact rational, a finite double, or one of the two tagged
/// infinities. IEEE infinities never survive construction: they become the
/// tagged state.
class ExtScalar {
 public:
  ExtScalar() : value_(Rational(0)) {}
  ExtScalar(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  ExtScalar(int i) : value_(Rational(i)) {}        // NOLINT(google-explicit-constructor)
  ExtScalar(long long i) : value_(Rational(i)) {}  // NOLINT(google-explicit-constructor)
  explicit ExtScalar(Infinity sign) : value_(sign) {}

  static ExtScalar from_double(double d) {
    ExtScalar s;
    if (std::isinf(d)) {
      s.value_ = d < 0 ? Infinity::Neg : Infinity::Pos;
    } else {
      s.value_ = d;
    }
    return s;
  }
  static ExtScalar neg_inf() { return ExtScalar(Infinity::Neg); }
  static ExtScalar pos_inf() { return ExtScalar(Infinity::Pos); }

  bool is_finite() const noexcept { return !is_infinite(); }
  bool is_infinite() const noexcept { return std::holds_alternative<Infinity>(value_); }
  bool is_rational() const noexcept { return std::holds_alternative<Rational>(value_); }
  bool is_real() const noexcept { return std::holds_alternative<double>(value_); }
  bool is_neg_inf() const noexcept { return is_infinite() && infinity() == Infinity::Neg; }
  bool is_pos_inf() const noexcept { return is_infinite() && infinity() == Infinity::Pos; }

  Infinity infinity() const { return std::get<Infinity>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  double real() const { return std::get<double>(value_); }

  bool is_integer() const {
    return is_rational() && boost::multiprecision::denominator(rational()) == 1;
  }

  bool operator==(const ExtScalar&) const = default;

 private:
  std::variant<Rational, double, Infinity> value_;
};

/// Total order -inf < finite < +inf. Finite values of different kinds
/// (rational vs double) are not comparable.
inline std::strong_ordering compare(const ExtScalar& a, const ExtScalar& b) {
  auto rank = [](const ExtScalar& s) {
    if (s.is_neg_inf()) return -1;
    if (s.is_pos_inf()) return 1;
    return 0;
  };
  const int ra = rank(a);
  const int rb = rank(b);
  if (ra != 0 || rb != 0) return ra <=> rb;
  if (a.is_rational() && b.is_rational()) {
    const int c = a.rational().compare(b.rational());
    return c <=> 0;
  }
  if (a.is_real() && b.is_real()) {
    const double x = a.real();
    const double y = b.real();
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  throw Error(ErrorKind::AlgebraMismatch, "cannot compare a rational with a floating-point value");
}

/// Instrumented counts of scalar semiring operations on the current thread.
struct OpCounts {
  std::uint64_t add = 0;
  std::uint64_t mul = 0;
  std::uint64_t neg = 0;

  std::uint64_t total() const noexcept { return add + mul + neg; }
  bool operator==(const OpCounts&) const = default;
};

inline OpCounts& op_counts() noexcept {
  thread_local OpCounts counts;
  return counts;
}

inline void reset_op_counts() noexcept { op_counts() = {}; }

/// Parses an unsigned decimal lexeme ("12", "3.25") into an exact rational.
inline Rational parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  std::string digits(text.substr(0, dot));
  std::size_t scale = 0;
  if (dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    digits += frac;
    scale = frac.size();
  }
  if (digits.empty()) digits = "0";
  Integer num(digits);
  Integer den = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(scale));
  return Rational(num, den);
}

/// Exact conversion of a finite double into a rational.
inline Rational rational_from_double(double d) {
  if (!std::isfinite(d)) throw Error(ErrorKind::IllegalElement, "non-finite value has no rational form");
  int exponent = 0;
  double mantissa = std::frexp(d, &exponent);
  // 53 bits of mantissa fit exactly in a long long after scaling
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational r{Integer(scaled)};
  if (exponent > 0) {
    r *= Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(exponent)));
  } else if (exponent < 0) {
    r /= Rational(boost::multiprecision::pow(Integer(2), static_cast<unsigned>(-exponent)));
  }
  return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace tropical
