#pragma once

/**
 * @file isometry.hpp
 * @brief Isometries of G: isotropy matrices, inner automorphisms, the
 *        discrete isometries f1, f2, f3 and the Heisenberg action.
 *
 * Every isometry factors as L_g o chi_h o f with f in {id, f1, f2, f3}.
 * Isometries are carried as a composition chain of primitives and can be
 * brought to that normal form from their value and frame differential at e.
 *
 * The frame differential of a map phi at p is the 4x4 matrix sending the
 * X-frame at p to the X-frame at phi(p). For an isotropy element it has the
 * block form
 *
 *      (  eps              0            0  )
 *      (  w                A            0  )
 *      ( -eps |w|^2 / 2   -eps w^T A   eps )
 *
 * with A in O(2) and w in R^2.
 *
 * The discrete isometries are
 *   f1(t, v, z) = (-t, S v, -z),       S(x, y) = (-x, y)
 *   f2(t, v, z) = (-t, R(-t) v, -z)
 *   f3 = f1 o f2: (t, v, z) -> (t, R(t) S v, z)
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oscigeo/lattice.hpp"
#include "oscigeo/metric.hpp"

namespace oscigeo {

struct NotOrthogonal : std::domain_error {
  NotOrthogonal() : std::domain_error("isotropy block is not orthogonal") {}
};

struct IsotropyElement {
  int eps = 1;
  Mat2<Scalar> a_tilde = Mat2<Scalar>::identity();
  Vec2<Scalar> w{Scalar(0), Scalar(0)};
};

Mat4<Scalar> isotropy_matrix(const IsotropyElement& el);

/// Recovers (eps, A, w) if the matrix lies exactly in the isotropy family.
std::optional<IsotropyElement> extract_isotropy(const Mat4<Scalar>& m);

/// Ad(t, v): eps = 1, A = R(t), w = J v. Requires t in (pi/2)Z.
Mat4<Scalar> ad_group_matrix(const GroupElement& g);
Mat4<double> ad_group_matrix(const GroupElementF& g);

/// A[[X,Y],Z] = [[AX,AY],AZ] and <AX,AY> = <X,Y> on all frame tuples.
bool ambrose_hicks_check(const Mat4<Scalar>& a);

/// chi_g(x) = g x g^-1 in closed form.
template <class T>
BasicElement<T> inner_aut(const BasicElement<T>& g, const BasicElement<T>& x) {
  const Mat2<T> r0 = rotation(g.t);
  const Mat2<T> r = rotation(x.t);
  const Vec2<T>& v0 = g.v;
  const Vec2<T> r0v = r0 * x.v;
  const Vec2<T> rv0 = r * v0;
  const T half = T(1) / T(2);
  return {x.t, v0 + r0v - rv0, x.z + half * j_form(v0, r0v) - half * j_form(v0, rv0) - half * j_form(r0v, rv0)};
}

enum class Discrete { F1, F2, F3 };

template <class T>
BasicElement<T> discrete_isometry(Discrete which, const BasicElement<T>& p) {
  switch (which) {
    case Discrete::F1:
      return {-p.t, {-p.v.x, p.v.y}, -p.z};
    case Discrete::F2:
      return {-p.t, rotation(T(-p.t)) * p.v, -p.z};
    case Discrete::F3:
      return {p.t, rotation(p.t) * Vec2<T>{-p.v.x, p.v.y}, p.z};
  }
  return p;
}

/// (v', z') . (t, v, z) = (t, v - R(t) v', z - z' - 1/2 v^T J R(t) v'),
/// the same as right multiplication by (0, -v', -z').
template <class T>
BasicElement<T> heis_action(const Vec2<T>& vp, const T& zp, const BasicElement<T>& p) {
  const Vec2<T> rv = rotation(p.t) * vp;
  return {p.t, p.v - rv, p.z - zp - T(1) / T(2) * j_form(p.v, rv)};
}

/// Product in H3: (v1, z1)(v2, z2) = (v1 + v2, z1 + z2 + 1/2 v1^T J v2).
template <class T>
std::pair<Vec2<T>, T> heis_compose(const std::pair<Vec2<T>, T>& a, const std::pair<Vec2<T>, T>& b) {
  return {a.first + b.first, a.second + b.second + T(1) / T(2) * j_form(a.first, b.first)};
}

enum class Component { Identity, F1, F2, F3 };
std::string to_string(Component c);

struct IsoPrimitive {
  enum class Kind { Translate, Inner, F1, F2, F3 };
  Kind kind = Kind::Translate;
  GroupElement g = identity_element<Scalar>();
};

/// A composition of primitives; chain[0] is applied last.
class Isometry {
 public:
  Isometry() = default;
  explicit Isometry(std::vector<IsoPrimitive> chain) : chain_(std::move(chain)) {}

  static Isometry translation(const GroupElement& g);
  static Isometry inner(const GroupElement& h);
  static Isometry discrete(Discrete which);

  /// this o other
  Isometry operator*(const Isometry& other) const;

  const std::vector<IsoPrimitive>& chain() const { return chain_; }

  GroupElement apply(const GroupElement& p) const;
  GroupElementF apply(const GroupElementF& p) const;

  /// Frame differential at p, exact (chain rule over the primitives).
  Mat4<Scalar> frame_differential(const GroupElement& p) const;

 private:
  std::vector<IsoPrimitive> chain_;
};

/// "L(t;x,y;z)", "chi(t;x,y;z)", "f1", "f2", "f3", joined by "*".
Isometry parse_isometry(std::string_view text);
std::string to_string(const Isometry& iso);

struct IsometryNormalForm {
  GroupElement g;  // translation part, phi(e)
  GroupElement h;  // inner part, defined up to the center
  Component component = Component::Identity;
};

/// phi = L_g o chi_h o f_c with h normalised to z = 0.
IsometryNormalForm normal_form(const Isometry& iso);
Isometry to_isometry(const IsometryNormalForm& nf);

/// Frame differential at e of f_c.
Mat4<Scalar> component_differential(Component c);

/// Frame differential of an arbitrary float map at p by central differences.
using PointMap = std::function<GroupElementF(const GroupElementF&)>;
Mat4<double> numeric_frame_differential(const PointMap& map, const GroupElementF& p, double h = 1e-6);

/// J^T G(map(p)) J == G(p) entrywise within tol at each sample, J by central
/// differences with step 1e-6.
bool is_isometry_numeric(const PointMap& map, const std::vector<GroupElementF>& points, double tol = 1e-6);
bool is_isometry_numeric(const PointMap& map, int samples, std::uint64_t seed, double tol = 1e-6);

/// Random points in [-pi, pi] x [-2, 2]^2 x [-2, 2].
std::vector<GroupElementF> sample_points(int n, std::mt19937_64& rng);

/// Left translations always; inner parts iff h normalizes the lattice;
/// f2- and f3-components never; f1-components iff the inner part does.
bool fiber_preserving(const LatticeSpec& L, const Isometry& iso);

/// phi(p gamma) Lambda == phi(p) Lambda for every sample p and lattice generator gamma.
bool descends(const LatticeSpec& L, const Isometry& phi, const std::vector<GroupElement>& points);

/// phi and psi agree on G/Lambda at the given points.
bool induced_equal(const LatticeSpec& L, const Isometry& phi, const Isometry& psi,
                   const std::vector<GroupElement>& points);

/// Generators of Lambda: (t_step,0,0), (0,(1,0),0), (0,(0,1),0), (0,0,1/2k).
std::vector<GroupElement> lattice_generators(const LatticeSpec& L);

}  // namespace oscigeo
