#include "oscigeo/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

namespace oscigeo {

namespace sample {

Rational rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Rational nonzero_rational(std::mt19937_64& rng) {
  for (;;) {
    Rational r = rational(rng);
    if (r != 0) return r;
  }
}

Scalar scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  const Scalar q(rational(rng));
  switch (kind(rng)) {
    case 0:
      return q * Scalar::pi();
    case 1:
      return q / Scalar::pi();
    default:
      return q;
  }
}

GroupElement quarter_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> quarter(-4, 4);
  return {Scalar(quarter(rng)) * Scalar::pi() / Scalar(2), {Scalar(rational(rng)), Scalar(rational(rng))},
          Scalar(rational(rng))};
}

Tangent null_vector(std::mt19937_64& rng) {
  const Scalar a0(nonzero_rational(rng));
  const Scalar a1(rational(rng));
  const Scalar a2(rational(rng));
  return {a0, a1, a2, -(a1 * a1 + a2 * a2) / (Scalar(2) * a0)};
}

TangentF direction(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return {d(rng), d(rng), d(rng), d(rng)};
}

}  // namespace sample

namespace oracle {

bool normalizer_by_conjugation(const LatticeSpec& L, const GroupElement& h) {
  const GroupElement hinv = g_inv(h);
  for (const auto& gamma : lattice_generators(L)) {
    if (!lattice_contains(L, inner_aut(h, gamma))) return false;
    if (!lattice_contains(L, inner_aut(hinv, gamma))) return false;
  }
  return true;
}

Tangent connection_curvature(const Tangent& x, const Tangent& y, const Tangent& z) {
  const Scalar half = Scalar::rational(1, 2);
  auto nabla = [&](const Tangent& a, const Tangent& b) { return half * bracket(a, b); };
  return nabla(x, nabla(y, z)) - nabla(y, nabla(x, z)) - nabla(bracket(x, y), z);
}

}  // namespace oracle

GeodesicComparison compare_with_rk4(const GroupElementF& h, const TangentF& X, double s_end, double step) {
  const auto path = integrate_geodesic(h, X, s_end, step, 10);
  const GeodesicCurve<double> curve{h, X};
  GeodesicComparison out;
  const double n0 = speed_sq(path.front());
  const double scale = std::max({std::abs(n0), X[0] * X[0] + X[1] * X[1] + X[2] * X[2] + X[3] * X[3], 1e-300});
  for (const auto& s : path) {
    const GroupElementF c = geodesic_eval(curve, s.s);
    const double dev = std::max({std::abs(c.t - s.p.t), std::abs(c.v.x - s.p.v.x), std::abs(c.v.y - s.p.v.y),
                                 std::abs(c.z - s.p.z)});
    out.max_deviation = std::max(out.max_deviation, dev);
    out.speed_drift = std::max(out.speed_drift, std::abs(speed_sq(s) - n0) / scale);
  }
  return out;
}

namespace {

struct Tally {
  int checks = 0;
  int failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      if (failures == 0) first = what;
      ++failures;
    }
  }

  SuiteResult result(const std::string& name) const {
    std::ostringstream os;
    os << checks - failures << "/" << checks << " checks";
    if (failures) os << "; first failure: " << first;
    return {name, failures == 0, os.str()};
  }
};

bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }

SuiteResult scalar_suite(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    const Scalar a = sample::scalar(rng), b = sample::scalar(rng), c = sample::scalar(rng);
    t.expect((a + b) + c == a + (b + c), "additive associativity");
    t.expect((a * b) * c == a * (b * c), "multiplicative associativity");
    t.expect(a * (b + c) == a * b + a * c, "distributivity");
    t.expect(a + b == b + a && a * b == b * a, "commutativity");
    if (!b.is_zero()) t.expect((a / b) * b == a, "division");
    t.expect(parse_scalar(a.to_string()) == a, "print/parse round trip of " + a.to_string());
    t.expect(approx((a + b).to_double(), a.to_double() + b.to_double(), 1e-9 * (1 + std::abs(a.to_double()) +
                                                                                 std::abs(b.to_double()))),
             "float evaluation");
    const int s = a.sign();
    t.expect((s > 0) == (a.to_double() > 0) || std::abs(a.to_double()) < 1e-12, "sign agrees with float");
  }
  return t.result("scalar");
}

SuiteResult group_suite(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed + 1);
  Tally t;
  const GroupElement e = identity_element<Scalar>();
  for (int i = 0; i < 100; ++i) {
    const GroupElement a = sample::quarter_element(rng), b = sample::quarter_element(rng),
                       c = sample::quarter_element(rng);
    t.expect(g_mul(g_mul(a, b), c) == g_mul(a, g_mul(b, c)), "G associativity");
    t.expect(g_mul(a, g_inv(a)) == e && g_mul(g_inv(a), a) == e, "G inverse");
    t.expect(n_mul(n_mul(a, b), c) == n_mul(a, n_mul(b, c)), "N associativity");
    t.expect(n_mul(a, n_inv(a)) == e, "N inverse");
    t.expect(parse_element(to_string(a)) == a, "element round trip");
    for (Twist tw : {Twist::Full, Twist::Half, Twist::Quarter}) {
      const LatticeSpec L(1 + i % 3, tw);
      const GroupElement nf = coset_normal_form(L, a);
      t.expect(coset_equal(L, nf, a), "normal form stays in the coset");
      t.expect(coset_normal_form(L, nf) == nf, "normal form idempotent");
      const GroupElement shifted = g_mul(a, lattice_generators(L)[static_cast<std::size_t>(i % 4)]);
      t.expect(coset_normal_form(L, shifted) == nf, "normal form constant on cosets");
    }
  }
  return t.result("group");
}

SuiteResult metric_suite(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed + 2);
  Tally t;
  const auto pts = sample_points(50, rng);
  for (const auto& p : pts) {
    const auto sig = signature(metric_at(p));
    t.expect(sig.first == 3 && sig.second == 1, "Lorentzian signature");
    const Mat4<double> pulled = pullback(metric_at(p), frame_x_at(p));
    const Mat4<double> gram = frame_gram<double>();
    double err = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) err = std::max(err, std::abs(pulled(i, j) - gram(i, j)));
    t.expect(err < 1e-12, "X-frame is orthonormal for the metric");
    const Mat4<double> pulled_e = pullback(metric_at(p), frame_e_at(p));
    err = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) err = std::max(err, std::abs(pulled_e(i, j) - gram(i, j)));
    t.expect(err < 1e-12, "e-frame is orthonormal for the metric");
  }
  for (int i = 0; i < 50; ++i) {
    const GroupElement p = sample::quarter_element(rng);
    t.expect(pullback(metric_at(p), frame_x_at(p)) == frame_gram<Scalar>(), "exact X-frame Gram matrix");
  }
  return t.result("metric");
}

SuiteResult bianchi_suite(const SuiteOptions& opts) {
  Tally t;
  const auto& R = opts.curvature;
  std::array<Tangent, 4> b;
  for (std::size_t i = 0; i < 4; ++i) b[i] = Tangent::basis(i);
  for (const auto& x : b)
    for (const auto& y : b) {
      for (const auto& z : b) {
        t.expect(inner(bracket(x, y), z) == -inner(y, bracket(x, z)), "ad-skew-symmetry");
        const Tangent cyc = R(x, y, z) + R(y, z, x) + R(z, x, y);
        t.expect(cyc.is_zero(), "first Bianchi identity");
        t.expect(R(x, y, z) == Scalar(-1) * R(y, x, z), "R(X,Y) = -R(Y,X)");
        t.expect(R(x, y, z) == oracle::connection_curvature(x, y, z), "curvature from the connection");
        for (const auto& w : b) {
          t.expect(inner(R(x, y, z), w) == -inner(R(x, y, w), z), "<R(X,Y)Z,W> = -<R(X,Y)W,Z>");
          t.expect(inner(R(x, y, z), w) == inner(R(z, w, x), y), "pair symmetry");
        }
      }
      t.expect(ricci_from_curvature(R, x, y) == ricci(x, y), "Ricci trace equals -1/4 Killing form");
    }
  std::mt19937_64 rng(opts.seed + 3);
  for (int i = 0; i < 100; ++i) {
    const Tangent x{Scalar(sample::rational(rng)), Scalar(sample::rational(rng)), Scalar(sample::rational(rng)),
                    Scalar(sample::rational(rng))};
    t.expect(ricci_from_curvature(R, x, x) == Scalar::rational(1, 2) * x[0] * x[0], "Ric(X,X) = a0^2 / 2");
  }
  return t.result("bianchi");
}

SuiteResult geodesic_suite(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed + 4);
  Tally t;
  const auto bases = sample_points(10, rng);
  for (const auto& h : bases) {
    const TangentF X = sample::direction(rng);
    const auto cmp = compare_with_rk4(h, X, 10.0, 1e-3);
    t.expect(cmp.max_deviation <= 1e-7, "closed form matches RK4");
    t.expect(cmp.speed_drift <= 1e-8, "speed conserved");
  }
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<int> quarter(-8, 8);
    Tangent X{Scalar(quarter(rng)) * Scalar::pi() / Scalar(2), Scalar(sample::rational(rng)),
              Scalar(sample::rational(rng)), Scalar(sample::rational(rng))};
    t.expect(exp_map(X) == exp_map_packed(X), "packed exp equals componentwise exp");
    const GroupElement g = exp_map(X);
    t.expect(g_mul(g, g) == exp_map(Scalar(2) * X), "one-parameter subgroup");
    const GroupElementF gf = exp_map(to_float(X));
    const GroupElementF ge = to_float(g);
    t.expect(approx(gf.t, ge.t, 1e-9) && approx(gf.v.x, ge.v.x, 1e-9) && approx(gf.v.y, ge.v.y, 1e-9) &&
                 approx(gf.z, ge.z, 1e-9),
             "float exp matches exact exp");
  }
  return t.result("geodesic");
}

SuiteResult isometry_suite(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed + 5);
  Tally t;
  for (auto which : {Discrete::F1, Discrete::F2, Discrete::F3}) {
    const PointMap f = [which](const GroupElementF& p) { return discrete_isometry(which, p); };
    t.expect(is_isometry_numeric(f, 20, opts.seed), "discrete isometry preserves the metric");
  }
  const auto params = sample_points(10, rng);
  for (const auto& g : params) {
    t.expect(is_isometry_numeric([g](const GroupElementF& p) { return inner_aut(g, p); }, 10, opts.seed),
             "inner automorphism preserves the metric");
    t.expect(is_isometry_numeric([g](const GroupElementF& p) { return g_mul(g, p); }, 10, opts.seed),
             "left translation preserves the metric");
    t.expect(is_isometry_numeric([g](const GroupElementF& p) { return heis_action(g.v, g.z, p); }, 10, opts.seed),
             "Heisenberg action preserves the metric");
  }
  t.expect(!is_isometry_numeric(
               [](const GroupElementF& p) {
                 return GroupElementF{2 * p.t, {2 * p.v.x, 2 * p.v.y}, 2 * p.z};
               },
               5, opts.seed),
           "scaling is rejected");
  const std::vector<Mat2<Scalar>> blocks{Mat2<Scalar>::identity(), quarter_rotation(1), {1, 0, 0, -1}};
  const std::vector<Vec2<Scalar>> ws{{0, 0}, {1, 0}, {1, 1}};
  for (int eps : {1, -1})
    for (const auto& a : blocks)
      for (const auto& w : ws) {
        const Mat4<Scalar> m = isotropy_matrix({eps, a, w});
        t.expect(ambrose_hicks_check(m), "isotropy matrix satisfies the isometry conditions");
        const auto back = extract_isotropy(m);
        t.expect(back && isotropy_matrix(*back) == m, "isotropy matrix round trip");
      }
  t.expect(!ambrose_hicks_check(Mat4<Scalar>::diagonal(2, 1, 1, 1)), "diag(2,1,1,1) rejected");
  for (int i = 0; i < 30; ++i) {
    const GroupElement g = sample::quarter_element(rng), h = sample::quarter_element(rng),
                       p = sample::quarter_element(rng);
    t.expect(inner_aut(g, p) == g_mul(g, g_mul(p, g_inv(g))), "closed-form conjugation");
    t.expect(inner_aut(g, g_mul(h, inner_aut(g_inv(g), p))) == g_mul(inner_aut(g, h), p),
             "chi_g L_h chi_g^-1 = L_chi_g(h)");
    t.expect(discrete_isometry(Discrete::F3, p) ==
                 discrete_isometry(Discrete::F1, discrete_isometry(Discrete::F2, p)),
             "f3 = f1 o f2");
    const Isometry phi = parse_isometry("L" + to_string(g) + "*f2*chi" + to_string(h) + "*f1");
    const Isometry back = to_isometry(normal_form(phi));
    t.expect(back.apply(p) == phi.apply(p), "normal form reproduces the isometry");
  }
  return t.result("isometry");
}

SuiteResult normalizer_suite(const SuiteOptions&) {
  Tally t;
  const std::vector<Scalar> quarters{0, 1, 2, 3, 4};
  const std::vector<Scalar> vs{Scalar(0), Scalar::rational(1, 4), Scalar::rational(1, 2), Scalar::rational(3, 4),
                               Scalar(1)};
  const std::vector<Scalar> zs{Scalar(0), Scalar::rational(1, 4)};
  for (int k : {1, 2})
    for (Twist tw : {Twist::Full, Twist::Half, Twist::Quarter}) {
      const LatticeSpec L(k, tw);
      for (const auto& q : quarters)
        for (const auto& x : vs)
          for (const auto& y : vs)
            for (const auto& z : zs) {
              const GroupElement h{q * Scalar::pi() / Scalar(2), {x, y}, z};
              t.expect(normalizer_contains(L, h) == oracle::normalizer_by_conjugation(L, h),
                       "normalizer predicate vs conjugation at " + to_string(L) + " " + to_string(h));
            }
    }
  return t.result("normalizer");
}

SuiteResult periodicity_suite(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed + 6);
  Tally t;
  const std::vector<Twist> twists{Twist::Full, Twist::Half, Twist::Quarter};
  for (int i = 0; i < 40; ++i) {
    const Tangent X = sample::null_vector(rng);
    for (int k : {1, 2, 3})
      for (Twist tw : twists) {
        const LatticeSpec L(k, tw);
        const auto c = classify_geodesic(L, X);
        t.expect(c.causal == CausalType::Null && c.verdict.kind == PeriodKind::Periodic,
                 "null geodesic periodic: " + to_string(X));
        t.expect(verify_verdict(L, X, c.verdict), "verdict verified: " + to_string(X));
      }
  }
  const LatticeSpec L1(1, Twist::Full);
  const Scalar four_pi = Scalar(4) * Scalar::pi();
  const auto expect_kind = [&](const Tangent& X, CausalType causal, PeriodKind kind, const std::string& what) {
    const auto c = classify_geodesic(L1, X);
    t.expect(c.causal == causal && c.verdict.kind == kind && verify_verdict(L1, X, c.verdict, 64), what);
  };
  expect_kind({1, 0, 0, Scalar(1) / four_pi}, CausalType::Spacelike, PeriodKind::Periodic, "closed spacelike");
  expect_kind({1, 0, 0, 1}, CausalType::Spacelike, PeriodKind::NonClosed, "non-closed spacelike");
  expect_kind({1, 0, 0, Scalar(-1) / four_pi}, CausalType::Timelike, PeriodKind::Periodic, "closed timelike");
  expect_kind({1, 0, 0, -1}, CausalType::Timelike, PeriodKind::NonClosed, "non-closed timelike");
  for (int i = 0; i < 40; ++i) {
    const Tangent X{Scalar(sample::nonzero_rational(rng)), Scalar(sample::rational(rng)),
                    Scalar(sample::rational(rng)), Scalar(sample::rational(rng))};
    if (norm_sq(X).is_zero()) continue;
    for (Twist tw : twists)
      t.expect(classify_geodesic(LatticeSpec(1 + i % 3, tw), X).verdict.kind == PeriodKind::NonClosed,
               "rational non-null direction does not close");
  }
  for (int i = 0; i < 40; ++i) {
    const Tangent X = i % 2 ? sample::null_vector(rng)
                            : Tangent{Scalar(sample::nonzero_rational(rng)), Scalar(sample::rational(rng)),
                                      Scalar(sample::rational(rng)), Scalar(sample::rational(rng)) / Scalar::pi()};
    const int k = 1 + i % 3;
    const auto base = classify_geodesic(LatticeSpec(k, Twist::Full), X).verdict;
    if (base.kind != PeriodKind::Periodic) continue;
    for (Twist tw : {Twist::Half, Twist::Quarter}) {
      const auto finer = classify_geodesic(LatticeSpec(k, tw), X).verdict;
      t.expect(finer.kind == PeriodKind::Periodic && (*base.minimal_T / *finer.minimal_T).is_integer(),
               "larger lattice period divides: " + to_string(X));
    }
  }
  return t.result("periodicity");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"scalar",   "group",    "metric",     "bianchi",
                                              "geodesic", "isometry", "normalizer", "periodicity"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  static const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>> table{
      {"scalar", scalar_suite},     {"group", group_suite},       {"metric", metric_suite},
      {"bianchi", bianchi_suite},   {"geodesic", geodesic_suite}, {"isometry", isometry_suite},
      {"normalizer", normalizer_suite}, {"periodicity", periodicity_suite}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  try {
    return it->second(opts);
  } catch (const std::exception& ex) {
    return {name, false, std::string("exception: ") + ex.what()};
  }
}

}  // namespace oscigeo
