#include <random>

#include "doctest.h"
#include "oscigeo/metric.hpp"
#include "oscigeo/suites.hpp"

using namespace oscigeo;

namespace {

Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }
Tangent X(int i) { return Tangent::basis(static_cast<std::size_t>(i)); }

}  // namespace

TEST_CASE("metric matrix in coordinates") {
  const Mat4<Scalar> g0 = metric_at(identity_element<Scalar>());
  CHECK(g0(0, 3) == Scalar(1));
  CHECK(g0(3, 0) == Scalar(1));
  CHECK(g0(1, 1) == Scalar(1));
  CHECK(g0(2, 2) == Scalar(1));
  CHECK(g0(0, 0) == Scalar(0));
  CHECK(g0(0, 1) == Scalar(0));
  const Mat4<Scalar> g1 = metric_at(GroupElement{0, {1, 0}, 0});
  CHECK(g1(0, 2) == q(-1, 2));
  CHECK(g1(2, 0) == q(-1, 2));
  CHECK(g1(0, 1) == Scalar(0));
}

TEST_CASE("causal types") {
  CHECK(causal_type(X(1)) == CausalType::Spacelike);
  CHECK(causal_type(X(0) - X(3)) == CausalType::Timelike);
  CHECK(causal_type(X(0) + X(1) - q(1, 2) * X(3)) == CausalType::Null);
  CHECK(causal_type(X(0) + (Scalar(1) / (q(4) * Scalar::pi())) * X(3)) == CausalType::Spacelike);
  CHECK(norm_sq(X(0) + X(3)) == Scalar(2));
}

TEST_CASE("brackets") {
  CHECK(bracket(X(0), X(1)) == X(2));
  CHECK(bracket(X(0), X(2)) == Scalar(-1) * X(1));
  CHECK(bracket(X(1), X(2)) == X(3));
  const Tangent v{1, q(2), q(-3), 4};
  CHECK(bracket(v, v).is_zero());
  CHECK(bracket(X(0) + X(1), X(2)) == Scalar(-1) * X(1) + X(3));
  for (int i = 0; i < 4; ++i) CHECK(bracket(X(3), X(i)).is_zero());
}

TEST_CASE("Jacobi identity on frame triples") {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const Tangent s = bracket(X(i), bracket(X(j), X(k))) + bracket(X(j), bracket(X(k), X(i))) +
                          bracket(X(k), bracket(X(i), X(j)));
        CHECK(s.is_zero());
      }
}

TEST_CASE("curvature algebra on frame tuples") {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        CHECK(inner(bracket(X(i), X(j)), X(k)) + inner(X(j), bracket(X(i), X(k))) == Scalar(0));
        CHECK(curvature_op(X(i), X(j), X(k)) == Scalar(-1) * curvature_op(X(j), X(i), X(k)));
        CHECK((curvature_op(X(i), X(j), X(k)) + curvature_op(X(j), X(k), X(i)) + curvature_op(X(k), X(i), X(j)))
                  .is_zero());
        CHECK(curvature_op(X(i), X(j), X(k)) == oracle::connection_curvature(X(i), X(j), X(k)));
        for (int l = 0; l < 4; ++l)
          CHECK(inner(curvature_op(X(i), X(j), X(k)), X(l)) == -inner(curvature_op(X(i), X(j), X(l)), X(k)));
      }
}

TEST_CASE("Ricci tensor") {
  const CurvatureFn R = [](const Tangent& a, const Tangent& b, const Tangent& c) { return curvature_op(a, b, c); };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Scalar expected = (i == 0 && j == 0) ? q(1, 2) : Scalar(0);
      CHECK(ricci(X(i), X(j)) == expected);
      CHECK(ricci_from_curvature(R, X(i), X(j)) == expected);
    }
  CHECK(killing_form(X(0), X(0)) == Scalar(-2));
  std::mt19937_64 rng(2);
  for (int n = 0; n < 100; ++n) {
    const Tangent v{sample::scalar(rng), sample::scalar(rng), sample::scalar(rng), sample::scalar(rng)};
    CHECK(ricci(v, v) == q(1, 2) * v[0] * v[0]);
    CHECK(ricci(v, v).sign() >= 0);
  }
}

TEST_CASE("frames are orthonormal for the metric") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 100; ++n) {
    const GroupElement p = sample::quarter_element(rng);
    CHECK(pullback(metric_at(p), frame_x_at(p)) == frame_gram<Scalar>());
    CHECK(pullback(metric_at(p), frame_e_at(p)) == frame_gram<Scalar>());
    const GroupElementF pf{std::uniform_real_distribution<double>(-5, 5)(rng), {1.5, -0.25}, 2.0};
    const Mat4<double> m = pullback(metric_at(pf), frame_x_at(pf));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(m(i, j) - frame_gram<double>()(i, j)) < 1e-12);
    const auto sig = signature(metric_at(pf));
    CHECK(sig.first == 3);
    CHECK(sig.second == 1);
  }
}

TEST_CASE("vector literals") {
  CHECK(parse_vector("a0=1,a1=0,a2=0,a3=-1/2") == Tangent{1, 0, 0, q(-1, 2)});
  CHECK(parse_vector("1, 0, 0, 1/(4*pi)") == Tangent{1, 0, 0, Scalar(1) / (q(4) * Scalar::pi())});
  CHECK(parse_vector("a3=2,a0=1,a1=0,a2=0") == Tangent{1, 0, 0, 2});
  CHECK(parse_vector(to_string(Tangent{q(1, 3), Scalar::pi(), 0, -1})) == Tangent{q(1, 3), Scalar::pi(), 0, -1});
  CHECK_THROWS_AS(parse_vector("1,2,3"), ParseError);
  try {
    parse_vector("a0=1,a1=0,a2=0,a7=1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == "a7");
  }
}
