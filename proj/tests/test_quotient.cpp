#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "oscigeo/quotient.hpp"
#include "oscigeo/suites.hpp"

using namespace oscigeo;

namespace {

Scalar P() { return Scalar::pi(); }
Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }
const std::vector<Twist> kTwists{Twist::Full, Twist::Half, Twist::Quarter};

PeriodicityVerdict verdict(const LatticeSpec& L, const Tangent& X) { return classify_geodesic(L, X).verdict; }

}  // namespace

TEST_CASE("affine integrality solver") {
  CHECK(solve_affine(q(0), q(0), 1) == Integer(1));
  CHECK(solve_affine(q(1, 2), q(0), 1) == std::nullopt);
  CHECK(solve_affine(q(1, 2), q(1, 2), 1) == Integer(1));
  CHECK(solve_affine(q(1, 2), q(1, 2), 2) == Integer(3));
  CHECK(solve_affine(q(1, 3), q(1, 6), 0) == Integer(4));
  CHECK(solve_affine(q(1, 3), q(1, 2), 0) == std::nullopt);
  CHECK(solve_affine(q(-5, 4), q(3, 4), 0) == Integer(3));
  CHECK(solve_affine(P(), q(1, 2), 0) == std::nullopt);
  CHECK(solve_affine(q(0), P(), 1) == std::nullopt);
  CHECK(solve_affine(q(0), P(), 0) == Integer(0));
  // 3 - 2pi + j pi = 3 at j = 2
  CHECK(solve_affine(q(3) - q(2) * P(), P(), 0) == Integer(2));
  CHECK(solve_affine(q(3) - q(2) * P(), P(), 3) == std::nullopt);
  CHECK(solve_affine(q(1) / P() - q(1, 2), q(-1) / (q(3) * P()), 0) == std::nullopt);
  CHECK(solve_affine(q(1) / P() + q(1, 2), q(-1) / (q(3) * P()), 0) == std::nullopt);
  CHECK(solve_affine(q(2) / P() + q(1, 2), q(-1) / (q(2) * P()), 0) == std::nullopt);
  CHECK(solve_affine(q(2) / P() + q(1), q(-1) / (q(2) * P()), 0) == Integer(4));
}

TEST_CASE("affine solver agrees with a direct scan") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    const Scalar c1 = i % 2 ? Scalar(sample::rational(rng)) : Scalar(sample::rational(rng)) / P();
    const Scalar j_true(static_cast<long>(i % 7));
    const Scalar c0 = Scalar(sample::rational(rng)) - j_true * c1 + (i % 3 == 0 ? q(1, 5) : q(0));
    std::optional<Integer> scan;
    for (long j = 0; j <= 400 && !scan; ++j)
      if ((c0 + Scalar(j) * c1).is_integer()) scan = Integer(j);
    const auto solved = solve_affine(c0, c1, 0);
    if (scan) {
      CHECK(solved == scan);
    } else if (solved) {
      CHECK(*solved > 400);
      CHECK((c0 + Scalar(*solved) * c1).is_integer());
    }
  }
}

TEST_CASE("null directions on the full-twist lattice close after one turn") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 50; ++i) {
    const Tangent X = sample::null_vector(rng);
    for (int k : {1, 2, 3}) {
      const auto v = verdict(LatticeSpec(k, Twist::Full), X);
      REQUIRE(v.kind == PeriodKind::Periodic);
      CHECK(*v.minimal_T == q(2) * P() / X[0].abs());
      CHECK(v.witness_m == Integer(1));
    }
  }
}

TEST_CASE("witness directions") {
  const LatticeSpec L(1, Twist::Full);
  const Scalar inv4pi = Scalar(1) / (q(4) * P());
  auto c = classify_geodesic(L, {1, 0, 0, inv4pi});
  CHECK(c.causal == CausalType::Spacelike);
  CHECK(c.verdict.kind == PeriodKind::Periodic);
  CHECK(*c.verdict.minimal_T == q(2) * P());
  c = classify_geodesic(L, {1, 0, 0, 1});
  CHECK(c.causal == CausalType::Spacelike);
  CHECK(c.verdict.kind == PeriodKind::NonClosed);
  CHECK_FALSE(c.verdict.minimal_T);
  c = classify_geodesic(L, {1, 0, 0, -inv4pi});
  CHECK(c.causal == CausalType::Timelike);
  CHECK(norm_sq(Tangent{1, 0, 0, -inv4pi}) == Scalar(-1) / (q(2) * P()));
  CHECK(c.verdict.kind == PeriodKind::Periodic);
  CHECK(*c.verdict.minimal_T == q(2) * P());
  c = classify_geodesic(L, {1, 0, 0, -1});
  CHECK(c.causal == CausalType::Timelike);
  CHECK(c.verdict.kind == PeriodKind::NonClosed);
}

TEST_CASE("vertical directions") {
  for (int k : {1, 2, 3}) {
    const auto v = verdict(LatticeSpec(k, Twist::Full), {0, 0, 0, 1});
    CHECK(*v.minimal_T == q(1, 2 * k));
    CHECK_FALSE(v.witness_m);
  }
  CHECK(*verdict(LatticeSpec(1, Twist::Full), {0, 0, 0, 3}).minimal_T == q(1, 6));
  CHECK(*verdict(LatticeSpec(1, Twist::Full), {0, q(2, 3), q(1, 2), 0}).minimal_T == Scalar(6));
  CHECK(*verdict(LatticeSpec(2, Twist::Half), {0, q(2, 3), 0, q(1, 5)}).minimal_T == q(15, 2));
  CHECK(verdict(LatticeSpec(1, Twist::Full), {0, 1, P(), 0}).kind == PeriodKind::NonClosed);
  CHECK(*verdict(LatticeSpec(1, Twist::Full), {0, P(), q(2) * P(), 0}).minimal_T == Scalar(1) / P());
  CHECK(verdict(LatticeSpec(1, Twist::Full), {0, 0, 0, 0}).kind == PeriodKind::StationaryPoint);
}

TEST_CASE("minimal periods") {
  CHECK(*minimal_period(LatticeSpec(1, Twist::Full), {2, 1, 0, q(-1, 4)}) == P());
  CHECK(*minimal_period(LatticeSpec(3, Twist::Full), {0, 0, 0, 1}) == q(1, 6));
  CHECK_FALSE(minimal_period(LatticeSpec(1, Twist::Full), {1, 0, 0, 1}));
  // Half twist: a0 T = pi already closes when the v-part returns to Z^2.
  const Tangent X{1, 0, 0, 0};
  CHECK(*minimal_period(LatticeSpec(1, Twist::Half), X) == P());
  CHECK(*minimal_period(LatticeSpec(1, Twist::Quarter), X) == P() / q(2));
  // v-condition fails at the half turn: -2J(a1, a2)/a0 = (-1, 1/2) is not integral.
  CHECK(*minimal_period(LatticeSpec(1, Twist::Half), {2, q(1, 2), 1, q(-5, 16)}) == P());
  CHECK(*minimal_period(LatticeSpec(1, Twist::Half), {1, q(1, 2), 1, q(-5, 8)}) == P());
  CHECK(*minimal_period(LatticeSpec(1, Twist::Half), {1, q(1, 4), 0, q(-1, 32)}) == q(2) * P());
}

TEST_CASE("every null geodesic is periodic and the verdict checks out") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 120; ++i) {
    const Tangent X = i % 10 == 9 ? Tangent{0, 0, 0, Scalar(sample::nonzero_rational(rng))} : sample::null_vector(rng);
    for (int k : {1, 2, 3})
      for (Twist tw : kTwists) {
        const LatticeSpec L(k, tw);
        const auto c = classify_geodesic(L, X);
        CHECK(c.causal == CausalType::Null);
        REQUIRE(c.verdict.kind == PeriodKind::Periodic);
        CHECK(lattice_contains(L, exp_map(*c.verdict.minimal_T * X)));
        CHECK(verify_verdict(L, X, c.verdict));
      }
  }
}

TEST_CASE("null directions with transcendental coefficients") {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 40; ++i) {
    const Scalar a0 = Scalar(sample::nonzero_rational(rng)) * (i % 2 ? P() : Scalar(1) / P());
    const Scalar a1 = Scalar(sample::rational(rng)) * P(), a2(sample::rational(rng));
    const Tangent X{a0, a1, a2, -(a1 * a1 + a2 * a2) / (q(2) * a0)};
    for (Twist tw : kTwists) {
      const LatticeSpec L(2, tw);
      const auto v = verdict(L, X);
      REQUIRE(v.kind == PeriodKind::Periodic);
      CHECK(verify_verdict(L, X, v));
    }
  }
}

TEST_CASE("rational non-null directions never close") {
  std::mt19937_64 rng(55);
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    const Tangent X{Scalar(sample::nonzero_rational(rng)), Scalar(sample::rational(rng)),
                    Scalar(sample::rational(rng)), Scalar(sample::rational(rng))};
    if (norm_sq(X).is_zero()) continue;
    ++tested;
    for (int k : {1, 2, 3})
      for (Twist tw : kTwists) {
        const auto v = verdict(LatticeSpec(k, tw), X);
        CHECK(v.kind == PeriodKind::NonClosed);
        CHECK(verify_verdict(LatticeSpec(k, tw), X, v, 32));
      }
  }
  CHECK(tested > 150);
}

TEST_CASE("periodic verdicts on mixed directions are verified by brute force") {
  std::mt19937_64 rng(56);
  int periodic = 0;
  for (int i = 0; i < 300; ++i) {
    const Scalar a0(sample::nonzero_rational(rng)), a1(sample::rational(rng)), a2(sample::rational(rng));
    const Scalar shift = i % 3 == 0 ? Scalar(sample::rational(rng)) : Scalar(sample::rational(rng)) / P();
    const Tangent X{a0, a1, a2, shift - (a1 * a1 + a2 * a2) / (q(2) * a0)};
    for (Twist tw : kTwists) {
      const LatticeSpec L(1 + i % 3, tw);
      const auto v = verdict(L, X);
      if (v.kind == PeriodKind::Periodic) {
        ++periodic;
        CHECK(verify_verdict(L, X, v));
      } else {
        CHECK(verify_verdict(L, X, v, 64));
      }
    }
  }
  CHECK(periodic > 20);
}

TEST_CASE("lattice chain: periods on larger lattices divide") {
  std::mt19937_64 rng(57);
  for (int i = 0; i < 150; ++i) {
    const Tangent X = i % 2 ? sample::null_vector(rng)
                            : Tangent{Scalar(sample::nonzero_rational(rng)), Scalar(sample::rational(rng)),
                                      Scalar(sample::rational(rng)), Scalar(sample::rational(rng)) / P()};
    const int k = 1 + i % 3;
    const auto full = verdict(LatticeSpec(k, Twist::Full), X);
    const auto half = verdict(LatticeSpec(k, Twist::Half), X);
    const auto quarter = verdict(LatticeSpec(k, Twist::Quarter), X);
    if (full.kind == PeriodKind::Periodic) {
      REQUIRE(half.kind == PeriodKind::Periodic);
      REQUIRE(quarter.kind == PeriodKind::Periodic);
      CHECK((*full.minimal_T / *half.minimal_T).is_integer());
      CHECK((*half.minimal_T / *quarter.minimal_T).is_integer());
    }
  }
}

TEST_CASE("closed implies periodic along sampled geodesics") {
  std::mt19937_64 rng(58);
  int hits = 0;
  for (int i = 0; i < 40; ++i) {
    const Scalar a0 = q(1 + i % 4, 2);
    const Scalar a1(sample::rational(rng)), a2(sample::rational(rng));
    const Tangent X = i % 2 ? Tangent{a0, a1, a2, -(a1 * a1 + a2 * a2) / (q(2) * a0)}
                            : Tangent{a0, 0, 0, Scalar(sample::rational(rng)) / P()};
    const LatticeSpec L(1 + i % 2, kTwists[static_cast<std::size_t>(i % 3)]);
    const GroupElement h = sample::quarter_element(rng);
    const Scalar du = (P() / q(2)) / a0;
    std::vector<GroupElement> pts;
    for (int j = 0; j <= 16; ++j) pts.push_back(geodesic_eval(GeodesicCurve<Scalar>{h, X}, Scalar(j) * du));
    const auto v = verdict(L, X);
    for (int s0 = 0; s0 <= 16; ++s0)
      for (int s1 = s0 + 1; s1 <= 16; ++s1) {
        if (!coset_equal(L, pts[static_cast<std::size_t>(s0)], pts[static_cast<std::size_t>(s1)])) continue;
        ++hits;
        const Scalar dt = Scalar(s1 - s0) * du;
        CHECK(lattice_contains(L, exp_map(dt * X)));
        REQUIRE(v.kind == PeriodKind::Periodic);
        CHECK((dt / *v.minimal_T).is_integer());
      }
  }
  CHECK(hits > 10);
}

TEST_CASE("classification does not depend on the base point") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 30; ++i) {
    const Tangent X = sample::null_vector(rng);
    const LatticeSpec L(2, Twist::Quarter);
    const auto v = verdict(L, X);
    const GroupElement h = sample::quarter_element(rng);
    const GroupElement end = geodesic_eval(GeodesicCurve<Scalar>{h, X}, *v.minimal_T);
    CHECK(coset_equal(L, h, end));
  }
}

TEST_CASE("projected traces") {
  const double pi = std::numbers::pi;
  const LatticeSpec L(1, Twist::Full);
  const GroupElementF h{0.3, {0.25, 0.6}, 0.1};
  const Tangent X{2, 1, 0, q(-1, 4)};
  const double T = verdict(L, X).minimal_T->to_double();
  const auto path = project_geodesic(L, h, to_float(X), T, T / 8);
  const GroupElementF a = path.front().p, b = path.back().p;
  CHECK(std::abs(a.t - b.t) < 1e-9);
  CHECK(std::abs(a.v.x - b.v.x) < 1e-9);
  CHECK(std::abs(a.v.y - b.v.y) < 1e-9);
  CHECK(std::abs(a.z - b.z) < 1e-9);
  const auto wrap = project_geodesic(L, identity_element<double>(), TangentF{1, 0, 0, 0}, 10.0, 0.5);
  for (const auto& s : wrap) {
    CHECK(s.p.t >= 0);
    CHECK(s.p.t < 2 * pi);
    CHECK(std::abs(s.p.t - std::fmod(s.s, 2 * pi)) < 1e-9);
  }
}

TEST_CASE("verdict serialisation") {
  const auto c = classify_geodesic(LatticeSpec(1, Twist::Full), {1, 1, 0, q(-1, 2)});
  const auto j = nlohmann::json::parse(to_json(c));
  CHECK(j["causal"] == "null");
  CHECK(j["kind"] == "periodic");
  CHECK(j["minimal_T"] == "2*pi");
  CHECK(j["witness_m"] == 1);
  CHECK(parse_scalar(j["minimal_T"].get<std::string>()) == q(2) * P());
  CHECK(to_text(c).rfind("null, periodic, T = 2*pi", 0) == 0);
  const auto n = nlohmann::json::parse(to_json(classify_geodesic(LatticeSpec(1, Twist::Full), {1, 0, 0, 1})));
  CHECK(n["minimal_T"].is_null());
  CHECK(n["witness_m"].is_null());
  CHECK(to_text(classify_geodesic(LatticeSpec(1, Twist::Full), {1, 0, 0, 1})) == "spacelike, non-closed");
}
