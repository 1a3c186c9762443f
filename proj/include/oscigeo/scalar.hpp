#pragma once

/**
 * @file scalar.hpp
 * @brief Exact arithmetic in Q(pi).
 *
 * A Scalar is a reduced rational function p(Pi)/q(Pi) with rational
 * coefficients, Pi being an indeterminate standing in for pi. Because pi is
 * transcendental, Q(Pi) and the subfield Q(pi) of the reals are isomorphic,
 * so structural equality of canonical forms is equality of real numbers and
 * the sign of a nonzero Scalar is always decidable.
 *
 * Canonical form:
 * - gcd(numerator, denominator) = 1
 * - denominator is monic
 * - zero is 0/1
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oscigeo {

using Rational = mpq_class;
using Integer = mpz_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct NotRational : std::domain_error {
  explicit NotRational(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  explicit Polynomial(const Rational& c);

  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  /// Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  Rational eval(const Rational& x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

class Scalar {
 public:
  Scalar() : num_(), den_(Rational(1)) {}
  Scalar(int v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v);  // NOLINT(google-explicit-constructor)
  Scalar(const Integer& v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  /// num/den reduced to canonical form. Throws DivisionByZero if den = 0.
  static Scalar from_fraction(Polynomial num, Polynomial den);
  static Scalar rational(long num, long den) { return Scalar(Rational(num, den)); }
  static Scalar pi();

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True iff the value does not depend on pi.
  bool is_rational() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  /// The constant value; throws NotRational otherwise.
  Rational rational_value() const;
  /// True iff the value is an integer.
  bool is_integer() const;

  /// -1, 0 or +1, decided exactly.
  int sign() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  /// Largest integer n with n <= value, decided exactly.
  Integer floor() const;

  double to_double() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  Scalar(Polynomial num, Polynomial den, bool /*already canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses the textual form, e.g. "(1/2)*pi + 3", "1/(4*pi)", "-2.5", "pi^2".
Scalar parse_scalar(std::string_view text);

/// Sign of p(pi), decided exactly.
int sign_at_pi(const Polynomial& p);

/// Rigorous rational bounds lo < pi < hi with hi - lo <= 2^-bits.
void pi_bounds(unsigned bits, Rational& lo, Rational& hi);

/// True iff s is rational and s/step is an integer. Requires step > 0.
bool in_lattice_1d(const Scalar& s, const Rational& step);

}  // namespace oscigeo
