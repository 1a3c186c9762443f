#include "oscigeo/lattice.hpp"

#include <cmath>
#include <numbers>

namespace oscigeo {

LatticeSpec::LatticeSpec(int k_, Twist twist_) : k(k_), twist(twist_) {
  if (k < 1) throw std::invalid_argument("lattice parameter k must be >= 1");
}

int LatticeSpec::quarter_turns_per_step() const {
  switch (twist) {
    case Twist::Full:
      return 4;
    case Twist::Half:
      return 2;
    case Twist::Quarter:
      return 1;
  }
  return 4;
}

Scalar LatticeSpec::t_step() const { return Scalar::pi() * Scalar(Rational(quarter_turns_per_step(), 2)); }

double LatticeSpec::t_step_float() const { return std::numbers::pi * quarter_turns_per_step() / 2.0; }

std::string to_string(Twist tw) {
  switch (tw) {
    case Twist::Full:
      return "full";
    case Twist::Half:
      return "half";
    case Twist::Quarter:
      return "quarter";
  }
  return "full";
}

std::string to_string(const LatticeSpec& L) { return "k=" + std::to_string(L.k) + ",twist=" + to_string(L.twist); }

LatticeSpec parse_lattice(std::string_view text) {
  std::optional<int> k;
  std::optional<Twist> tw;
  std::string s(text);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(pos, end - pos);
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("lattice item must be key=value", item);
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    if (key == "k") {
      try {
        std::size_t used = 0;
        int v = std::stoi(val, &used);
        if (used != val.size() || v < 1) throw std::invalid_argument(val);
        k = v;
      } catch (const std::exception&) {
        throw ParseError("lattice k must be a positive integer", val);
      }
    } else if (key == "twist") {
      if (val == "full" || val == "0" || val == "2pi") {
        tw = Twist::Full;
      } else if (val == "half" || val == "pi") {
        tw = Twist::Half;
      } else if (val == "quarter" || val == "pi/2") {
        tw = Twist::Quarter;
      } else {
        throw ParseError("unknown twist", val);
      }
    } else {
      throw ParseError("unknown lattice key", key);
    }
    pos = end + 1;
  }
  if (!k) throw ParseError("lattice spec is missing k", std::string(text));
  return {*k, tw.value_or(Twist::Full)};
}

bool lattice_contains(const LatticeSpec& L, const GroupElement& g) {
  return (g.t / L.t_step()).is_integer() && g.v.x.is_integer() && g.v.y.is_integer() &&
         in_lattice_1d(g.z, L.z_step());
}

GroupElement coset_normal_form(const LatticeSpec& L, const GroupElement& g) {
  const Scalar step = L.t_step();
  const Integer n = (g.t / step).floor();
  const Scalar t = g.t - Scalar(n) * step;
  // g * (-n step, 0, 0) only shifts t.
  const Mat2<Scalar> rot = rotation(t);
  const Vec2<Scalar> u = rot.transpose() * g.v;
  const Vec2<Scalar> m{Scalar(u.x.floor()), Scalar(u.y.floor())};
  // (t, v, z) * (0, -m, 0)
  const Vec2<Scalar> rm = rot * m;
  Vec2<Scalar> v = g.v - rm;
  Scalar z = g.z - Scalar::rational(1, 2) * j_form(g.v, rm);
  // central correction
  const Scalar zs(L.z_step());
  const Integer j = (z / zs).floor();
  z -= Scalar(j) * zs;
  return {t, v, z};
}

GroupElementF coset_normal_form(const LatticeSpec& L, const GroupElementF& g) {
  const double step = L.t_step_float();
  double t = g.t - std::floor(g.t / step) * step;
  if (t >= step) t -= step;
  if (t < 0) t = 0;
  const Mat2<double> rot = rotation(t);
  const Vec2<double> u = rot.transpose() * g.v;
  Vec2<double> m{std::floor(u.x), std::floor(u.y)};
  if (u.x - m.x >= 1.0) m.x += 1.0;
  if (u.y - m.y >= 1.0) m.y += 1.0;
  const Vec2<double> rm = rot * m;
  const Vec2<double> v = g.v - rm;
  double z = g.z - 0.5 * j_form(g.v, rm);
  const double zs = 1.0 / (2.0 * L.k);
  z -= std::floor(z / zs) * zs;
  if (z >= zs) z -= zs;
  if (z < 0) z = 0;
  return {t, v, z};
}

bool coset_equal(const LatticeSpec& L, const GroupElement& g1, const GroupElement& g2) {
  return lattice_contains(L, g_mul(g_inv(g1), g2));
}

namespace {

bool in_half_w(const Vec2<Scalar>& v) {
  // (1/2)W: 2x, 2y integers of equal parity
  const Scalar x2 = Scalar(2) * v.x;
  const Scalar y2 = Scalar(2) * v.y;
  if (!x2.is_integer() || !y2.is_integer()) return false;
  Integer d = x2.rational_value().get_num() - y2.rational_value().get_num();
  return mpz_even_p(d.get_mpz_t()) != 0;
}

}  // namespace

bool normalizer_contains(const LatticeSpec& L, const GroupElement& h) {
  if (!quarter_turns(h.t)) return false;
  switch (L.twist) {
    case Twist::Full:
      return in_lattice_1d(h.v.x, L.z_step()) && in_lattice_1d(h.v.y, L.z_step());
    case Twist::Half:
      return in_lattice_1d(h.v.x, Rational(1, 2)) && in_lattice_1d(h.v.y, Rational(1, 2));
    case Twist::Quarter:
      if (L.k % 2 == 1) return h.v.x.is_integer() && h.v.y.is_integer();
      return in_half_w(h.v);
  }
  return false;
}

bool chi_kernel_contains(const LatticeSpec& L, const GroupElement& h) {
  return normalizer_contains(L, h) && (h.t / (Scalar(2) * Scalar::pi())).is_integer() && h.v.x.is_zero() &&
         h.v.y.is_zero();
}

bool tau_kernel_contains(const LatticeSpec& L, const GroupElement& h) {
  return (h.t / (Scalar(2) * Scalar::pi())).is_integer() && h.v.x.is_zero() && h.v.y.is_zero() &&
         in_lattice_1d(h.z, L.z_step());
}

bool n_coset_equal(int k, const GroupElement& a, const GroupElement& b) {
  return lattice_contains(LatticeSpec(k, Twist::Full), n_mul(a, n_inv(b)));
}

}  // namespace oscigeo
