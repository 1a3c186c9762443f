#pragma once

/**
 * @file metric.hpp
 * @brief The bi-invariant Lorentzian metric, brackets, curvature and Ricci.
 *
 * Tangent vectors are coefficient quadruples in the left-invariant frame
 * X0..X3 with
 *
 *   [X0, X1] = X2,  [X0, X2] = -X1,  [X1, X2] = X3,  X3 central,
 *   <X0, X3> = <X1, X1> = <X2, X2> = 1, all other pairings 0.
 *
 * In coordinates (t, x, y, z):
 *
 *   g = dt (dz + 1/2 y dx - 1/2 x dy) + dx^2 + dy^2.
 */

#include <array>
#include <functional>
#include <string>
#include <utility>

#include "oscigeo/group.hpp"
#include "oscigeo/linalg.hpp"

namespace oscigeo {

template <class T>
struct TangentVector {
  std::array<T, 4> a{};

  TangentVector() { a.fill(T(0)); }
  TangentVector(T a0, T a1, T a2, T a3) : a{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  static TangentVector basis(std::size_t i) {
    TangentVector v;
    v.a[i] = T(1);
    return v;
  }

  const T& operator[](std::size_t i) const { return a[i]; }
  T& operator[](std::size_t i) { return a[i]; }

  bool is_zero() const { return a[0] == T(0) && a[1] == T(0) && a[2] == T(0) && a[3] == T(0); }

  friend TangentVector operator+(const TangentVector& x, const TangentVector& y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
  }
  friend TangentVector operator-(const TangentVector& x, const TangentVector& y) {
    return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
  }
  friend TangentVector operator*(const T& s, const TangentVector& x) { return {s * x[0], s * x[1], s * x[2], s * x[3]}; }
  friend bool operator==(const TangentVector& x, const TangentVector& y) { return x.a == y.a; }
};

using Tangent = TangentVector<Scalar>;
using TangentF = TangentVector<double>;

TangentF to_float(const Tangent& X);

/// "a0=1,a1=0,a2=0,a3=-1/2" or "1, 0, 0, -1/2".
Tangent parse_vector(std::string_view text);
std::string to_string(const Tangent& X);

template <class T>
T inner(const TangentVector<T>& x, const TangentVector<T>& y) {
  return x[1] * y[1] + x[2] * y[2] + x[0] * y[3] + x[3] * y[0];
}

/// a1^2 + a2^2 + 2 a0 a3
template <class T>
T norm_sq(const TangentVector<T>& x) {
  return inner(x, x);
}

enum class CausalType { Null, Spacelike, Timelike };
std::string to_string(CausalType c);

/// Exact sign test on the norm.
CausalType causal_type(const Tangent& x);

template <class T>
TangentVector<T> bracket(const TangentVector<T>& x, const TangentVector<T>& y) {
  return {T(0), x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0], x[1] * y[2] - x[2] * y[1]};
}

/// R(X,Y)Z = -1/4 [[X,Y],Z]
template <class T>
TangentVector<T> curvature_op(const TangentVector<T>& x, const TangentVector<T>& y, const TangentVector<T>& z) {
  return (T(-1) / T(4)) * bracket(bracket(x, y), z);
}

/// Matrix of ad(X) in the X-frame (column j is [X, Xj]).
template <class T>
Mat4<T> ad_matrix(const TangentVector<T>& x) {
  Mat4<T> m = Mat4<T>::zero();
  for (std::size_t j = 0; j < 4; ++j) {
    auto col = bracket(x, TangentVector<T>::basis(j));
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = col[i];
  }
  return m;
}

/// B(X,Y) = tr(ad X o ad Y)
template <class T>
T killing_form(const TangentVector<T>& x, const TangentVector<T>& y) {
  return (ad_matrix(x) * ad_matrix(y)).trace();
}

/// Ric = -1/4 B
template <class T>
T ricci(const TangentVector<T>& x, const TangentVector<T>& y) {
  return T(-1) / T(4) * killing_form(x, y);
}

using CurvatureFn = std::function<Tangent(const Tangent&, const Tangent&, const Tangent&)>;

/// Ric(X,Y) = tr(Z -> R(Z,X)Y), from an arbitrary curvature operator.
Scalar ricci_from_curvature(const CurvatureFn& curv, const Tangent& x, const Tangent& y);

/// Gram matrix of the X-frame (and of the e-frame of N): constant.
template <class T>
Mat4<T> frame_gram() {
  Mat4<T> g = Mat4<T>::zero();
  g(0, 3) = T(1);
  g(3, 0) = T(1);
  g(1, 1) = T(1);
  g(2, 2) = T(1);
  return g;
}

/// Coordinate matrix of g at p, rows/cols ordered (dt, dx, dy, dz).
template <class T>
Mat4<T> metric_at(const BasicElement<T>& p) {
  Mat4<T> g = Mat4<T>::zero();
  const T half = T(1) / T(2);
  g(0, 1) = g(1, 0) = half * p.v.y;
  g(0, 2) = g(2, 0) = -half * p.v.x;
  g(0, 3) = g(3, 0) = T(1);
  g(1, 1) = T(1);
  g(2, 2) = T(1);
  return g;
}

/// Columns are X0(p)..X3(p) in coordinates.
template <class T>
Mat4<T> frame_x_at(const BasicElement<T>& p) {
  const T c = cosine(p.t);
  const T s = sine(p.t);
  const T half = T(1) / T(2);
  const T& x = p.v.x;
  const T& y = p.v.y;
  Mat4<T> f = Mat4<T>::zero();
  f(0, 0) = T(1);
  f(1, 1) = c;
  f(2, 1) = s;
  f(3, 1) = half * (x * s - y * c);
  f(1, 2) = -s;
  f(2, 2) = c;
  f(3, 2) = half * (x * c + y * s);
  f(3, 3) = T(1);
  return f;
}

/// Columns are e0(p)..e3(p) in coordinates (left-invariant frame of N).
template <class T>
Mat4<T> frame_e_at(const BasicElement<T>& p) {
  const T half = T(1) / T(2);
  Mat4<T> f = Mat4<T>::identity();
  f(3, 1) = -half * p.v.y;
  f(3, 2) = half * p.v.x;
  return f;
}

/// F^T G F
template <class T>
Mat4<T> pullback(const Mat4<T>& g, const Mat4<T>& f) {
  return f.transpose() * g * f;
}

/// Coordinate velocity of the left-invariant field X at p.
template <class T>
std::array<T, 4> push_to_coordinates(const BasicElement<T>& p, const TangentVector<T>& x) {
  return frame_x_at(p) * x.a;
}

/// (positive, negative) eigenvalue counts of a symmetric matrix.
std::pair<int, int> signature(const Mat4<double>& g);

}  // namespace oscigeo
