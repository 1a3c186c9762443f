#include "oscigeo/geodesic.hpp"

#include <cmath>
#include <iomanip>
#include <locale>
#include <ostream>
#include <sstream>

namespace oscigeo {

namespace {

constexpr double kStraightLineThreshold = 1e-12;

// theta - sin(theta), accurate near 0.
double theta_minus_sin(double th) {
  if (std::abs(th) < 1e-3) {
    const double t2 = th * th;
    return th * t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0));
  }
  return th - std::sin(th);
}

}  // namespace

GroupElement exp_map(const Tangent& x) {
  const Scalar &a0 = x[0], &a1 = x[1], &a2 = x[2], &a3 = x[3];
  if (a0.is_zero()) return {Scalar(0), {a1, a2}, a3};
  const Scalar s = sine(a0);
  const Scalar c = cosine(a0);
  const Scalar sq = a1 * a1 + a2 * a2;
  GroupElement g;
  g.t = a0;
  g.v.x = a1 / a0 * s + a2 / a0 * c - a2 / a0;
  g.v.y = -(a1 / a0) * c + a2 / a0 * s + a1 / a0;
  g.z = Scalar::rational(1, 2) * ((sq / a0 + Scalar(2) * a3) - sq / (a0 * a0) * s);
  return g;
}

GroupElementF exp_map(const TangentF& x) {
  const double a0 = x[0], a1 = x[1], a2 = x[2], a3 = x[3];
  if (std::abs(a0) < kStraightLineThreshold) return {0.0, {a1, a2}, a3};
  const double s = std::sin(a0);
  const double h = std::sin(0.5 * a0);
  const double one_minus_c = 2.0 * h * h;
  const double sq = a1 * a1 + a2 * a2;
  GroupElementF g;
  g.t = a0;
  g.v.x = (a1 * s - a2 * one_minus_c) / a0;
  g.v.y = (a1 * one_minus_c + a2 * s) / a0;
  g.z = a3 + 0.5 * sq * theta_minus_sin(a0) / (a0 * a0);
  return g;
}

GroupElement exp_map_packed(const Tangent& x) {
  const Scalar &a0 = x[0], &a1 = x[1], &a2 = x[2], &a3 = x[3];
  if (a0.is_zero()) return {Scalar(0), {a1, a2}, a3};
  const Vec2<Scalar> jv = apply_j(Vec2<Scalar>{a1, a2});
  const Vec2<Scalar> w = rotation(a0) * jv - jv;
  const Scalar inv = Scalar(1) / a0;
  const Scalar sq = a1 * a1 + a2 * a2;
  return {a0, inv * w, a3 + Scalar::rational(1, 2) * (sq / a0) * (Scalar(1) - sine(a0) / a0)};
}

GroupElementF exp_map_packed(const TangentF& x) {
  const double a0 = x[0], a1 = x[1], a2 = x[2], a3 = x[3];
  if (std::abs(a0) < kStraightLineThreshold) return {0.0, {a1, a2}, a3};
  const Vec2<double> jv = apply_j(Vec2<double>{a1, a2});
  const Vec2<double> w = rotation(a0) * jv - jv;
  const double sq = a1 * a1 + a2 * a2;
  return {a0, (1.0 / a0) * w, a3 + 0.5 * (sq / a0) * (1.0 - std::sin(a0) / a0)};
}

GroupElement geodesic_eval(const GeodesicCurve<Scalar>& c, const Scalar& s) {
  return g_mul(c.base, exp_map(s * c.direction));
}

GroupElementF geodesic_eval(const GeodesicCurve<double>& c, double s) {
  return g_mul(c.base, exp_map(s * c.direction));
}

namespace {

using State = std::array<double, 8>;

State rhs(const State& y) {
  const double tp = y[4], xp = y[5], yp = y[6];
  return {y[4], y[5], y[6], y[7], 0.0, -tp * yp, tp * xp, 0.5 * tp * (y[1] * xp + y[2] * yp)};
}

State axpy(const State& y, double h, const State& k) {
  State r;
  for (std::size_t i = 0; i < 8; ++i) r[i] = y[i] + h * k[i];
  return r;
}

PathSample to_sample(double s, const State& y) {
  return {s, {y[0], {y[1], y[2]}, y[3]}, {y[4], y[5], y[6], y[7]}};
}

}  // namespace

std::vector<PathSample> integrate_geodesic_coords(const GroupElementF& h, const std::array<double, 4>& velocity,
                                                  double s_end, double step, std::size_t stride) {
  if (!(step > 0)) throw InvalidStep();
  if (stride == 0) stride = 1;
  const auto n = static_cast<std::size_t>(std::ceil(std::abs(s_end) / step - 1e-9));
  State y{h.t, h.v.x, h.v.y, h.z, velocity[0], velocity[1], velocity[2], velocity[3]};
  std::vector<PathSample> out;
  out.push_back(to_sample(0.0, y));
  if (n == 0) return out;
  const double dh = s_end / static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const State k1 = rhs(y);
    const State k2 = rhs(axpy(y, 0.5 * dh, k1));
    const State k3 = rhs(axpy(y, 0.5 * dh, k2));
    const State k4 = rhs(axpy(y, dh, k3));
    for (std::size_t j = 0; j < 8; ++j) y[j] += dh / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    if (i % stride == 0 || i == n) out.push_back(to_sample(dh * static_cast<double>(i), y));
  }
  return out;
}

std::vector<PathSample> integrate_geodesic(const GroupElementF& h, const TangentF& x, double s_end, double step,
                                           std::size_t stride) {
  return integrate_geodesic_coords(h, push_to_coordinates(h, x), s_end, step, stride);
}

double speed_sq(const PathSample& sample) {
  const Mat4<double> g = metric_at(sample.p);
  double acc = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) acc += sample.velocity[i] * g(i, j) * sample.velocity[j];
  return acc;
}

void write_csv(std::ostream& os, const std::vector<PathSample>& path) {
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf << std::setprecision(17);
  buf << "s,t,x,y,z\n";
  for (const auto& p : path) buf << p.s << ',' << p.p.t << ',' << p.p.v.x << ',' << p.p.v.y << ',' << p.p.z << '\n';
  os << buf.str();
}

std::string to_json(const std::vector<PathSample>& path) {
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf << std::setprecision(17) << '[';
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& p = path[i];
    if (i) buf << ',';
    buf << '[' << p.s << ',' << p.p.t << ',' << p.p.v.x << ',' << p.p.v.y << ',' << p.p.z << ']';
  }
  buf << ']';
  return buf.str();
}

}  // namespace oscigeo
