#pragma once

/**
 * @file group.hpp
 * @brief The oscillator group G, the nilpotent group N and the Heisenberg
 *        group H3, all on the same point set R^4.
 *
 * One element type serves every group; the group law is chosen by the
 * operation (g_mul for G, n_mul for N; H3 is the t = 0 slice of either).
 *
 *   G:  (t,v,z)(t',v',z') = (t+t', v + R(t)v', z + z' + 1/2 v^T J R(t) v')
 *   N:  (t,v,z)(t',v',z') = (t+t', v + v',     z + z' + 1/2 v^T J v')
 *
 * Elements are templated on the coordinate field: Scalar for the exact layer,
 * double for numeric paths. Exact rotations exist only at angles in
 * (pi/2)Z; anything else raises ExactRotationUnavailable.
 */

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "oscigeo/linalg.hpp"
#include "oscigeo/scalar.hpp"

namespace oscigeo {

struct ExactRotationUnavailable : std::domain_error {
  explicit ExactRotationUnavailable(const std::string& what) : std::domain_error(what) {}
};

/// Number of quarter turns in [0, 4) if angle lies in (pi/2)Z.
std::optional<int> quarter_turns(const Scalar& angle);

Mat2<Scalar> rotation(const Scalar& angle);
inline Mat2<double> rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c, -s, s, c};
}
/// R(n * pi/2) exactly.
Mat2<Scalar> quarter_rotation(int n);

Scalar sine(const Scalar& angle);
Scalar cosine(const Scalar& angle);
inline double sine(double angle) { return std::sin(angle); }
inline double cosine(double angle) { return std::cos(angle); }

/// S(x, y) = (-x, y)
template <class T>
Mat2<T> reflection_s() {
  return {T(-1), T(0), T(0), T(1)};
}

template <class T>
struct BasicElement {
  T t{};
  Vec2<T> v{};
  T z{};

  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return a.t == b.t && a.v == b.v && a.z == b.z;
  }
};

using GroupElement = BasicElement<Scalar>;
using GroupElementF = BasicElement<double>;

template <class T>
BasicElement<T> identity_element() {
  return {T(0), {T(0), T(0)}, T(0)};
}

template <class T>
BasicElement<T> g_mul(const BasicElement<T>& a, const BasicElement<T>& b) {
  const Vec2<T> rv = rotation(a.t) * b.v;
  return {a.t + b.t, a.v + rv, a.z + b.z + T(1) / T(2) * j_form(a.v, rv)};
}

template <class T>
BasicElement<T> g_inv(const BasicElement<T>& a) {
  const T neg_t = -a.t;
  return {neg_t, -(rotation(neg_t) * a.v), -a.z};
}

template <class T>
BasicElement<T> n_mul(const BasicElement<T>& a, const BasicElement<T>& b) {
  return {a.t + b.t, a.v + b.v, a.z + b.z + T(1) / T(2) * j_form(a.v, b.v)};
}

template <class T>
BasicElement<T> n_inv(const BasicElement<T>& a) {
  return {-a.t, -a.v, -a.z};
}

GroupElementF to_float(const GroupElement& g);

/// "(t; x, y; z)" with Scalar syntax in each slot.
GroupElement parse_element(std::string_view text);
std::string to_string(const GroupElement& g);

}  // namespace oscigeo
