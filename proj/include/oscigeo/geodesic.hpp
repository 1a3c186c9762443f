#pragma once

/**
 * @file geodesic.hpp
 * @brief Closed-form geodesics gamma(s) = h exp(sX) and an RK4 oracle.
 *
 * For X = sum a_i X_i with a0 != 0 and theta = a0 s:
 *
 *   t(s) = theta
 *   x(s) = (a1/a0) sin theta + (a2/a0) cos theta - a2/a0
 *   y(s) = -(a1/a0) cos theta + (a2/a0) sin theta + a1/a0
 *   z(s) = 1/2 [ ((a1^2 + a2^2)/a0 + 2 a3) s - ((a1^2 + a2^2)/a0^2) sin theta ]
 *
 * and for a0 = 0 the curve is the straight line (0, a1 s, a2 s, a3 s).
 *
 * The exact layer evaluates these only when theta lies in (pi/2)Z; the float
 * layer uses the cancellation-free rearrangement
 *   x = (a1 sin theta - 2 a2 sin^2(theta/2)) / a0,
 *   z = a3 s + 1/2 (a1^2 + a2^2) (theta - sin theta) / a0^2.
 */

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscigeo/group.hpp"
#include "oscigeo/metric.hpp"

namespace oscigeo {

struct InvalidStep : std::invalid_argument {
  InvalidStep() : std::invalid_argument("integration step must be positive") {}
};

/// exp(X) from the componentwise geodesic formulas at s = 1.
GroupElement exp_map(const Tangent& x);
GroupElementF exp_map(const TangentF& x);

/// exp(X) from the packed vector form
///   (a0, (1/a0)(R(a0)J - J)(a1, a2)^T, a3 + 1/2 ((a1^2 + a2^2)/a0)(1 - sin(a0)/a0)).
GroupElement exp_map_packed(const Tangent& x);
GroupElementF exp_map_packed(const TangentF& x);

template <class T>
struct GeodesicCurve {
  BasicElement<T> base;
  TangentVector<T> direction;
};

/// h exp(sX).
GroupElement geodesic_eval(const GeodesicCurve<Scalar>& c, const Scalar& s);
GroupElementF geodesic_eval(const GeodesicCurve<double>& c, double s);

struct PathSample {
  double s = 0;
  GroupElementF p;
  std::array<double, 4> velocity{};  // (t', x', y', z')
};

/// Fixed-step classical RK4 on
///   t'' = 0, x'' = -t' y', y'' = t' x', z'' = 1/2 t' (x x' + y y'),
/// starting at h with the coordinate velocity of X at h. The step is adjusted
/// down so an integer number of steps lands on s_end; every `stride`-th state
/// (and the last) is recorded. Negative s_end integrates backwards.
std::vector<PathSample> integrate_geodesic(const GroupElementF& h, const TangentF& x, double s_end, double step,
                                           std::size_t stride = 1);

/// Same, from an explicit coordinate velocity.
std::vector<PathSample> integrate_geodesic_coords(const GroupElementF& h, const std::array<double, 4>& velocity,
                                                  double s_end, double step, std::size_t stride = 1);

/// <gamma', gamma'> in coordinates.
double speed_sq(const PathSample& sample);

/// "s,t,x,y,z" with 17 significant digits, LF line endings, classic locale.
void write_csv(std::ostream& os, const std::vector<PathSample>& path);
/// JSON array of [s, t, x, y, z].
std::string to_json(const std::vector<PathSample>& path);

}  // namespace oscigeo
