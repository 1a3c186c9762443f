#include "oscigeo/quotient.hpp"

#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>

#include "json.hpp"

namespace oscigeo {

std::string to_string(PeriodKind k) {
  switch (k) {
    case PeriodKind::Periodic:
      return "periodic";
    case PeriodKind::NonClosed:
      return "non-closed";
    case PeriodKind::StationaryPoint:
      return "stationary";
  }
  return "non-closed";
}

namespace {

Integer least_at_least(const Integer& j0, const Integer& modulus, const Integer& j_min) {
  Integer diff = j0 - j_min;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), diff.get_mpz_t(), modulus.get_mpz_t());
  return j_min + r;
}

std::optional<Integer> solve_rational(const Rational& c0, const Rational& c1, const Integer& j_min) {
  Integer q;
  mpz_lcm(q.get_mpz_t(), c0.get_den_mpz_t(), c1.get_den_mpz_t());
  const Integer b = c0.get_num() * (q / c0.get_den());
  const Integer a = c1.get_num() * (q / c1.get_den());
  // a j + b = 0 (mod q)
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
  if (!mpz_divisible_p(b.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
  const Integer a1 = a / g;
  const Integer b1 = b / g;
  const Integer q1 = q / g;
  Integer inv = 0;
  if (q1 != 1) mpz_invert(inv.get_mpz_t(), a1.get_mpz_t(), q1.get_mpz_t());
  Integer j0 = -b1 * inv;
  return least_at_least(j0, q1, j_min);
}

std::optional<Integer> solve_irrational(const Scalar& c0, const Scalar& c1, const Integer& j_min) {
  // c0 + j c1 = N as an identity of polynomials in pi:
  //   P0 D1 + j P1 D0 - N D0 D1 = 0.
  const Polynomial u = c0.numerator() * c1.denominator();
  const Polynomial v = c1.numerator() * c0.denominator();
  const Polynomial w = c0.denominator() * c1.denominator();
  const std::size_t rows =
      static_cast<std::size_t>(std::max({u.degree(), v.degree(), w.degree()}) + 1);
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t b = a + 1; b < rows; ++b) {
      const Rational det = w.coeff(a) * v.coeff(b) - v.coeff(a) * w.coeff(b);
      if (det == 0) continue;
      const Rational j = (u.coeff(a) * w.coeff(b) - w.coeff(a) * u.coeff(b)) / det;
      const Rational n = (u.coeff(a) * v.coeff(b) - v.coeff(a) * u.coeff(b)) / det;
      for (std::size_t i = 0; i < rows; ++i)
        if (u.coeff(i) + j * v.coeff(i) - n * w.coeff(i) != 0) return std::nullopt;
      if (j.get_den() != 1 || n.get_den() != 1) return std::nullopt;
      if (j.get_num() < j_min) return std::nullopt;
      return j.get_num();
    }
  }
  // v and w proportional would make c1 rational.
  throw std::logic_error("solve_affine: degenerate irrational slope");
}

}  // namespace

std::optional<Integer> solve_affine(const Scalar& c0, const Scalar& c1, const Integer& j_min) {
  if (c1.is_zero()) {
    if (c0.is_integer()) return j_min;
    return std::nullopt;
  }
  if (c1.is_rational()) {
    if (!c0.is_rational()) return std::nullopt;
    return solve_rational(c0.rational_value(), c1.rational_value(), j_min);
  }
  return solve_irrational(c0, c1, j_min);
}

namespace {

PeriodicityVerdict classify_vertical(const LatticeSpec& L, const Tangent& X) {
  // T a1 in Z, T a2 in Z, T a3 in (1/2k) Z: T in (s_i / |a_i|) Z for each nonzero a_i.
  const std::array<Scalar, 3> steps{Scalar(1), Scalar(1), Scalar(L.z_step())};
  std::optional<Scalar> base;
  Integer num_lcm = 1;
  Integer den_gcd = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Scalar& a = X[i + 1];
    if (a.is_zero()) continue;
    const Scalar u = steps[i] / a.abs();
    if (!base) base = u;
    const Scalar ratio = u / *base;
    if (!ratio.is_rational()) return {PeriodKind::NonClosed, std::nullopt, std::nullopt};
    const Rational r = ratio.rational_value();
    mpz_lcm(num_lcm.get_mpz_t(), num_lcm.get_mpz_t(), r.get_num_mpz_t());
    mpz_gcd(den_gcd.get_mpz_t(), den_gcd.get_mpz_t(), r.get_den_mpz_t());
  }
  const Scalar T = *base * Scalar(Rational(num_lcm, den_gcd));
  return {PeriodKind::Periodic, T, std::nullopt};
}

PeriodicityVerdict classify_rotating(const LatticeSpec& L, const Tangent& X) {
  const Scalar &a0 = X[0], &a1 = X[1], &a2 = X[2];
  const int sigma = a0.sign();
  const Scalar abs_a0 = a0.abs();
  const int c = L.quarter_turns_per_step();
  const int rho = 4 / c;
  const Scalar step = L.t_step();
  const Scalar two_k(2 * L.k);
  const Scalar sq = a1 * a1 + a2 * a2;
  // z(T) = A m + B_r
  const Scalar A = norm_sq(X) * step / (Scalar(2) * a0 * abs_a0);
  std::optional<Integer> best;
  for (int r = 0; r < rho; ++r) {
    const int n = (((sigma * c * r) % 4) + 4) % 4;
    const Mat2<Scalar> rot = quarter_rotation(n);
    const Scalar& cs = rot.m00;
    const Scalar& sn = rot.m10;
    const Scalar vx = (a1 * sn + a2 * (cs - Scalar(1))) / a0;
    const Scalar vy = (a2 * sn + a1 * (Scalar(1) - cs)) / a0;
    if (!vx.is_integer() || !vy.is_integer()) continue;
    const Scalar B = Scalar::rational(-1, 2) * sq * sn / (a0 * a0);
    // m = r + rho j
    const Scalar c0 = two_k * (A * Scalar(r) + B);
    const Scalar c1 = two_k * A * Scalar(rho);
    const Integer j_min = r == 0 ? 1 : 0;
    const auto j = solve_affine(c0, c1, j_min);
    if (!j) continue;
    const Integer m = Integer(r) + Integer(rho) * *j;
    if (!best || m < *best) best = m;
  }
  if (!best) return {PeriodKind::NonClosed, std::nullopt, std::nullopt};
  return {PeriodKind::Periodic, step * Scalar(*best) / abs_a0, *best};
}

}  // namespace

Classification classify_geodesic(const LatticeSpec& L, const Tangent& X) {
  Classification out;
  out.causal = causal_type(X);
  if (X.is_zero()) {
    out.verdict = {PeriodKind::StationaryPoint, std::nullopt, std::nullopt};
  } else if (X[0].is_zero()) {
    out.verdict = classify_vertical(L, X);
  } else {
    out.verdict = classify_rotating(L, X);
  }
  return out;
}

std::optional<Scalar> minimal_period(const LatticeSpec& L, const Tangent& X) {
  return classify_geodesic(L, X).verdict.minimal_T;
}

namespace {

bool closes_at(const LatticeSpec& L, const Tangent& X, const Scalar& T) {
  return lattice_contains(L, exp_map(T * X));
}

/// Spacing of the admissible grid for T, as in verify_verdict.
std::optional<Scalar> candidate_step(const LatticeSpec& L, const Tangent& X) {
  if (!X[0].is_zero()) return L.t_step() / X[0].abs();
  const std::array<Scalar, 3> steps{Scalar(1), Scalar(1), Scalar(L.z_step())};
  for (std::size_t i = 0; i < 3; ++i)
    if (!X[i + 1].is_zero()) return steps[i] / X[i + 1].abs();
  return std::nullopt;
}

}  // namespace

bool verify_verdict(const LatticeSpec& L, const Tangent& X, const PeriodicityVerdict& v, long scan_limit) {
  if (X.is_zero()) return v.kind == PeriodKind::StationaryPoint;
  if (v.kind == PeriodKind::StationaryPoint) return false;
  const Scalar du = *candidate_step(L, X);
  if (v.kind == PeriodKind::NonClosed) {
    for (long m = 1; m <= scan_limit; ++m)
      if (closes_at(L, X, du * Scalar(m))) return false;
    return true;
  }
  if (!v.minimal_T || v.minimal_T->sign() <= 0) return false;
  const Scalar& T = *v.minimal_T;
  if (!closes_at(L, X, T)) return false;
  const Scalar ratio = T / du;
  if (!ratio.is_integer()) return false;
  const Integer top = ratio.rational_value().get_num();
  if (top > scan_limit) return false;
  if (v.witness_m && *v.witness_m != top) return false;
  for (long m = 1; m < top.get_si(); ++m)
    if (closes_at(L, X, du * Scalar(m))) return false;
  return true;
}

std::vector<PathSample> project_geodesic(const LatticeSpec& L, const GroupElementF& h, const TangentF& X,
                                         double s_end, double step) {
  if (!(step > 0)) throw InvalidStep();
  const auto n = static_cast<std::size_t>(std::ceil(std::abs(s_end) / step - 1e-9));
  const GeodesicCurve<double> curve{h, X};
  std::vector<PathSample> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double s = n == 0 ? 0.0 : s_end * static_cast<double>(i) / static_cast<double>(n);
    out.push_back({s, coset_normal_form(L, geodesic_eval(curve, s)), {}});
  }
  return out;
}

std::string to_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["causal"] = to_string(c.causal);
  j["kind"] = to_string(c.verdict.kind);
  j["minimal_T"] = c.verdict.minimal_T ? nlohmann::ordered_json(c.verdict.minimal_T->to_string()) : nullptr;
  j["witness_m"] = c.verdict.witness_m ? nlohmann::ordered_json(c.verdict.witness_m->get_si()) : nullptr;
  return j.dump();
}

std::string to_text(const Classification& c) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << to_string(c.causal) << ", " << to_string(c.verdict.kind);
  if (c.verdict.minimal_T)
    os << ", T = " << *c.verdict.minimal_T << " (" << std::setprecision(17) << c.verdict.minimal_T->to_double()
       << ")";
  return os.str();
}

}  // namespace oscigeo
