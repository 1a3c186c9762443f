#pragma once

// Fixed-size vectors and matrices over an arbitrary field type (Scalar or
// double). Only what the group and frame computations need.

#include <array>
#include <cstddef>

namespace oscigeo {

template <class T>
struct Vec2 {
  T x{};
  T y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const T& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

template <class T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.x + a.y * b.y;
}

/// J(x, y) = (y, -x), the fixed quarter-turn matrix ((0 1) (-1 0)).
template <class T>
Vec2<T> apply_j(const Vec2<T>& v) {
  return {v.y, -v.x};
}

/// a^T J b
template <class T>
T j_form(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class T>
struct Mat2 {
  // row-major
  T m00{}, m01{}, m10{}, m11{};

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

  Vec2<T> operator*(const Vec2<T>& v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11, m10 * o.m00 + m11 * o.m10,
            m10 * o.m01 + m11 * o.m11};
  }
  Mat2 transpose() const { return {m00, m10, m01, m11}; }
  T det() const { return m00 * m11 - m01 * m10; }
  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11;
  }
};

template <class T>
struct Mat4 {
  std::array<std::array<T, 4>, 4> e{};

  static Mat4 zero() {
    Mat4 r;
    for (auto& row : r.e) row.fill(T(0));
    return r;
  }
  static Mat4 identity() {
    Mat4 r = zero();
    for (std::size_t i = 0; i < 4; ++i) r.e[i][i] = T(1);
    return r;
  }
  static Mat4 diagonal(const T& d0, const T& d1, const T& d2, const T& d3) {
    Mat4 r = zero();
    r.e[0][0] = d0;
    r.e[1][1] = d1;
    r.e[2][2] = d2;
    r.e[3][3] = d3;
    return r;
  }

  T& operator()(std::size_t i, std::size_t j) { return e[i][j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e[i][j]; }

  Mat4 operator*(const Mat4& o) const {
    Mat4 r = zero();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) r.e[i][j] += e[i][k] * o.e[k][j];
    return r;
  }
  std::array<T, 4> operator*(const std::array<T, 4>& v) const {
    std::array<T, 4> r;
    r.fill(T(0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k) r[i] += e[i][k] * v[k];
    return r;
  }
  Mat4 transpose() const {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r.e[i][j] = e[j][i];
    return r;
  }
  T trace() const { return e[0][0] + e[1][1] + e[2][2] + e[3][3]; }
  friend bool operator==(const Mat4& a, const Mat4& b) { return a.e == b.e; }
};

}  // namespace oscigeo
