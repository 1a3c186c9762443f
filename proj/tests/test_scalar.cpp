#include <random>

#include "doctest.h"
#include "oscigeo/scalar.hpp"
#include "oscigeo/suites.hpp"

using namespace oscigeo;

namespace {

Scalar P() { return Scalar::pi(); }
Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }

// Random element of degree <= 3 over small rationals.
Scalar random_poly_fraction(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  auto poly = [&]() {
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(sample::rational(rng));
    return Polynomial(c);
  };
  Polynomial den;
  do {
    den = poly();
  } while (den.is_zero());
  return Scalar::from_fraction(poly(), den);
}

}  // namespace

TEST_CASE("arithmetic in Q(pi)") {
  CHECK(P() + P() == q(2) * P());
  CHECK((q(1) / P()) * P() == q(1));
  CHECK((q(2) * P() + q(1)) - q(2) * P() == q(1));
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK_THROWS_AS(P() / Scalar(0), DivisionByZero);
}

TEST_CASE("rationality") {
  CHECK(q(3, 2).is_rational());
  CHECK(q(3, 2).rational_value() == Rational(3, 2));
  CHECK_FALSE(P().is_rational());
  CHECK_THROWS_AS(P().rational_value(), NotRational);
  const Scalar s = (P() * P() + P()) / (P() + q(1));
  CHECK(s == P());
  CHECK_FALSE(s.is_rational());
}

TEST_CASE("canonical form") {
  const Scalar s = (q(2) * P() + q(4)) / (q(6) * P() + q(12));
  CHECK(s == q(1, 3));
  const Scalar t = (q(3) * P()) / (q(2) * P() * P() + q(1));
  CHECK(t.denominator().leading() == Rational(1));
  CHECK(Scalar::from_fraction(t.numerator(), t.denominator()) == t);
}

TEST_CASE("in_lattice_1d") {
  CHECK(in_lattice_1d(q(1, 2), Rational(1, 2)));
  CHECK_FALSE(in_lattice_1d(P(), Rational(1, 2)));
  CHECK(in_lattice_1d(q(3, 4), Rational(1, 4)));
  CHECK_FALSE(in_lattice_1d(q(1, 3), Rational(1, 4)));
  CHECK(in_lattice_1d(q(-5, 2), Rational(1, 2)));
}

TEST_CASE("sign and floor are exact") {
  CHECK(P().sign() == 1);
  CHECK((P() - q(355, 113)).sign() == -1);
  CHECK((P() - q(333, 106)).sign() == 1);
  CHECK((q(22, 7) - P()).sign() == 1);
  CHECK(P().floor() == 3);
  CHECK((-P()).floor() == -4);
  CHECK((q(7) / (q(2) * P())).floor() == 1);
  CHECK(q(-3, 2).floor() == -2);
  CHECK(q(4).floor() == 4);
  CHECK(P() > q(3));
  CHECK(q(1) / P() < q(1, 3));
  Rational lo, hi;
  pi_bounds(200, lo, hi);
  CHECK(lo < hi);
  CHECK(hi - lo <= Rational(1, 2) / Rational(Integer(1) << 199));
}

TEST_CASE("printing and parsing") {
  CHECK(q(2).to_string() == "2");
  CHECK((q(2) * P()).to_string() == "2*pi");
  CHECK((q(1, 2) * P() + q(3)).to_string() == "(1/2)*pi + 3");
  CHECK((q(1) / (q(4) * P())).to_string() == "1/(4*pi)");
  CHECK((P() * P()).to_string() == "pi^2");
  CHECK(parse_scalar("1/(4*pi)") == q(1) / (q(4) * P()));
  CHECK(parse_scalar("(1/2)*pi + 3") == q(1, 2) * P() + q(3));
  CHECK(parse_scalar("-2.5") == q(-5, 2));
  CHECK(parse_scalar("pi^-2") == q(1) / (P() * P()));
  CHECK(parse_scalar(" 3 * (pi - 1) ") == q(3) * P() - q(3));
  CHECK(parse_scalar("-0") == q(0));
}

TEST_CASE("parse errors name the offending token") {
  try {
    parse_scalar("3 + x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == "x");
  }
  CHECK_THROWS_AS(parse_scalar("(1 + 2"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), DivisionByZero);
}

TEST_CASE("field axioms and round trip on random elements") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 150; ++i) {
    const Scalar a = random_poly_fraction(rng), b = random_poly_fraction(rng), c = random_poly_fraction(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * (Scalar(1) / a) == Scalar(1));
    CHECK(a - a == Scalar(0));
    CHECK(parse_scalar(a.to_string()) == a);
    CHECK(Scalar::from_fraction(a.numerator(), a.denominator()) == a);
    const double fa = a.to_double(), fb = b.to_double();
    CHECK(std::abs((a * b).to_double() - fa * fb) <= 1e-10 * std::max(1.0, std::abs(fa * fb)));
  }
}

TEST_CASE("lattice membership is closed under integer multiples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Scalar s(sample::rational(rng));
    const Rational step(1, 2 * (1 + i % 3));
    if (!in_lattice_1d(s, step)) continue;
    for (int m = -3; m <= 3; ++m) CHECK(in_lattice_1d(Scalar(m) * s, step));
  }
}
