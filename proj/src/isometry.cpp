#include "oscigeo/isometry.hpp"

#include <Eigen/Dense>

#include <cctype>
#include <numbers>
#include <sstream>

namespace oscigeo {

namespace {

bool orthogonal(const Mat2<Scalar>& a) { return a * a.transpose() == Mat2<Scalar>::identity(); }

Tangent column(const Mat4<Scalar>& m, std::size_t j) { return {m(0, j), m(1, j), m(2, j), m(3, j)}; }

Tangent apply(const Mat4<Scalar>& m, const Tangent& x) {
  Tangent r;
  r.a = m * x.a;
  return r;
}

}  // namespace

Mat4<Scalar> isotropy_matrix(const IsotropyElement& el) {
  if (!orthogonal(el.a_tilde) || (el.eps != 1 && el.eps != -1)) throw NotOrthogonal();
  const Scalar eps(el.eps);
  const Mat2<Scalar>& a = el.a_tilde;
  const Vec2<Scalar>& w = el.w;
  Mat4<Scalar> m = Mat4<Scalar>::zero();
  m(0, 0) = eps;
  m(1, 0) = w.x;
  m(2, 0) = w.y;
  m(1, 1) = a.m00;
  m(1, 2) = a.m01;
  m(2, 1) = a.m10;
  m(2, 2) = a.m11;
  m(3, 0) = -eps * Scalar::rational(1, 2) * dot(w, w);
  m(3, 1) = -eps * (w.x * a.m00 + w.y * a.m10);
  m(3, 2) = -eps * (w.x * a.m01 + w.y * a.m11);
  m(3, 3) = eps;
  return m;
}

std::optional<IsotropyElement> extract_isotropy(const Mat4<Scalar>& m) {
  IsotropyElement el;
  if (m(0, 0) == Scalar(1)) {
    el.eps = 1;
  } else if (m(0, 0) == Scalar(-1)) {
    el.eps = -1;
  } else {
    return std::nullopt;
  }
  el.w = {m(1, 0), m(2, 0)};
  el.a_tilde = {m(1, 1), m(1, 2), m(2, 1), m(2, 2)};
  if (!orthogonal(el.a_tilde)) return std::nullopt;
  if (isotropy_matrix(el) != m) return std::nullopt;
  return el;
}

Mat4<Scalar> ad_group_matrix(const GroupElement& g) {
  return isotropy_matrix({1, rotation(g.t), apply_j(g.v)});
}

Mat4<double> ad_group_matrix(const GroupElementF& g) {
  const Mat2<double> r = rotation(g.t);
  const Vec2<double> w = apply_j(g.v);
  Mat4<double> m = Mat4<double>::zero();
  m(0, 0) = 1;
  m(1, 0) = w.x;
  m(2, 0) = w.y;
  m(1, 1) = r.m00;
  m(1, 2) = r.m01;
  m(2, 1) = r.m10;
  m(2, 2) = r.m11;
  m(3, 0) = -0.5 * dot(w, w);
  m(3, 1) = -(w.x * r.m00 + w.y * r.m10);
  m(3, 2) = -(w.x * r.m01 + w.y * r.m11);
  m(3, 3) = 1;
  return m;
}

bool ambrose_hicks_check(const Mat4<Scalar>& a) {
  for (std::size_t i = 0; i < 4; ++i) {
    const Tangent ai = column(a, i);
    for (std::size_t j = 0; j < 4; ++j) {
      const Tangent aj = column(a, j);
      if (inner(ai, aj) != inner(Tangent::basis(i), Tangent::basis(j))) return false;
      for (std::size_t l = 0; l < 4; ++l) {
        const Tangent lhs = apply(a, bracket(bracket(Tangent::basis(i), Tangent::basis(j)), Tangent::basis(l)));
        const Tangent rhs = bracket(bracket(ai, aj), column(a, l));
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

std::string to_string(Component c) {
  switch (c) {
    case Component::Identity:
      return "id";
    case Component::F1:
      return "f1";
    case Component::F2:
      return "f2";
    case Component::F3:
      return "f3";
  }
  return "id";
}

Isometry Isometry::translation(const GroupElement& g) { return Isometry({{IsoPrimitive::Kind::Translate, g}}); }
Isometry Isometry::inner(const GroupElement& h) { return Isometry({{IsoPrimitive::Kind::Inner, h}}); }

Isometry Isometry::discrete(Discrete which) {
  switch (which) {
    case Discrete::F1:
      return Isometry({{IsoPrimitive::Kind::F1, {}}});
    case Discrete::F2:
      return Isometry({{IsoPrimitive::Kind::F2, {}}});
    case Discrete::F3:
      return Isometry({{IsoPrimitive::Kind::F3, {}}});
  }
  return {};
}

Isometry Isometry::operator*(const Isometry& other) const {
  std::vector<IsoPrimitive> c = chain_;
  c.insert(c.end(), other.chain_.begin(), other.chain_.end());
  return Isometry(std::move(c));
}

namespace {

template <class T>
BasicElement<T> apply_primitive(const IsoPrimitive& prim, const BasicElement<T>& g, const BasicElement<T>& p) {
  switch (prim.kind) {
    case IsoPrimitive::Kind::Translate:
      return g_mul(g, p);
    case IsoPrimitive::Kind::Inner:
      return inner_aut(g, p);
    case IsoPrimitive::Kind::F1:
      return discrete_isometry(Discrete::F1, p);
    case IsoPrimitive::Kind::F2:
      return discrete_isometry(Discrete::F2, p);
    case IsoPrimitive::Kind::F3:
      return discrete_isometry(Discrete::F3, p);
  }
  return p;
}

Mat4<Scalar> primitive_differential(const IsoPrimitive& prim, const GroupElement& p) {
  switch (prim.kind) {
    case IsoPrimitive::Kind::Translate:
      return Mat4<Scalar>::identity();
    case IsoPrimitive::Kind::Inner:
      return ad_group_matrix(prim.g);
    case IsoPrimitive::Kind::F1:
      return Mat4<Scalar>::diagonal(-1, -1, 1, -1);
    case IsoPrimitive::Kind::F2:
      return isotropy_matrix({-1, rotation(p.t), apply_j(p.v)});
    case IsoPrimitive::Kind::F3: {
      const Scalar c = cosine(p.t);
      const Scalar s = sine(p.t);
      return isotropy_matrix({1, {-c, s, s, c}, {-p.v.y, -p.v.x}});
    }
  }
  return Mat4<Scalar>::identity();
}

}  // namespace

GroupElement Isometry::apply(const GroupElement& p) const {
  GroupElement q = p;
  for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) q = apply_primitive(*it, it->g, q);
  return q;
}

GroupElementF Isometry::apply(const GroupElementF& p) const {
  GroupElementF q = p;
  for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) q = apply_primitive(*it, to_float(it->g), q);
  return q;
}

Mat4<Scalar> Isometry::frame_differential(const GroupElement& p) const {
  GroupElement q = p;
  Mat4<Scalar> d = Mat4<Scalar>::identity();
  for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
    d = primitive_differential(*it, q) * d;
    q = apply_primitive(*it, it->g, q);
  }
  return d;
}

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

Isometry parse_isometry(std::string_view text) {
  std::vector<IsoPrimitive> chain;
  const std::string all = trim(text);
  if (all.empty() || all == "id") return {};
  int depth = 0;
  std::size_t start = 0;
  std::vector<std::string> parts;
  for (std::size_t i = 0; i <= all.size(); ++i) {
    if (i < all.size() && all[i] == '(') ++depth;
    if (i < all.size() && all[i] == ')') --depth;
    if (i == all.size() || (all[i] == '*' && depth == 0)) {
      parts.push_back(trim(std::string_view(all).substr(start, i - start)));
      start = i + 1;
    }
  }
  for (const auto& part : parts) {
    if (part == "f1") {
      chain.push_back({IsoPrimitive::Kind::F1, {}});
    } else if (part == "f2") {
      chain.push_back({IsoPrimitive::Kind::F2, {}});
    } else if (part == "f3") {
      chain.push_back({IsoPrimitive::Kind::F3, {}});
    } else if (part == "id") {
      continue;
    } else if (part.starts_with("L(")) {
      chain.push_back({IsoPrimitive::Kind::Translate, parse_element(part.substr(1))});
    } else if (part.starts_with("chi(")) {
      chain.push_back({IsoPrimitive::Kind::Inner, parse_element(part.substr(3))});
    } else {
      throw ParseError("unknown isometry factor '" + part + "'", part);
    }
  }
  return Isometry(std::move(chain));
}

std::string to_string(const Isometry& iso) {
  if (iso.chain().empty()) return "id";
  std::string out;
  for (const auto& p : iso.chain()) {
    if (!out.empty()) out += "*";
    switch (p.kind) {
      case IsoPrimitive::Kind::Translate:
        out += "L" + to_string(p.g);
        break;
      case IsoPrimitive::Kind::Inner:
        out += "chi" + to_string(p.g);
        break;
      case IsoPrimitive::Kind::F1:
        out += "f1";
        break;
      case IsoPrimitive::Kind::F2:
        out += "f2";
        break;
      case IsoPrimitive::Kind::F3:
        out += "f3";
        break;
    }
  }
  return out;
}

Mat4<Scalar> component_differential(Component c) {
  switch (c) {
    case Component::Identity:
      return Mat4<Scalar>::identity();
    case Component::F1:
      return Mat4<Scalar>::diagonal(-1, -1, 1, -1);
    case Component::F2:
      return Mat4<Scalar>::diagonal(-1, 1, 1, -1);
    case Component::F3:
      return Mat4<Scalar>::diagonal(1, -1, 1, 1);
  }
  return Mat4<Scalar>::identity();
}

IsometryNormalForm normal_form(const Isometry& iso) {
  IsometryNormalForm nf;
  nf.g = iso.apply(identity_element<Scalar>());
  const Mat4<Scalar> d = iso.frame_differential(identity_element<Scalar>());
  const auto el = extract_isotropy(d);
  if (!el) throw std::logic_error("frame differential at e is not an isotropy matrix");
  const bool rot = el->a_tilde.det() == Scalar(1);
  if (el->eps == 1)
    nf.component = rot ? Component::Identity : Component::F3;
  else
    nf.component = rot ? Component::F2 : Component::F1;
  // The component differentials are involutions.
  const auto inner_part = extract_isotropy(d * component_differential(nf.component));
  const Mat2<Scalar>& a = inner_part->a_tilde;
  int n = 0;
  for (; n < 4; ++n)
    if (quarter_rotation(n) == a) break;
  if (n == 4) throw ExactRotationUnavailable("inner part is not a quarter turn");
  const Vec2<Scalar>& w = inner_part->w;
  nf.h = {Scalar(n) * Scalar::pi() / Scalar(2), {-w.y, w.x}, Scalar(0)};
  return nf;
}

Isometry to_isometry(const IsometryNormalForm& nf) {
  Isometry out = Isometry::translation(nf.g) * Isometry::inner(nf.h);
  switch (nf.component) {
    case Component::Identity:
      return out;
    case Component::F1:
      return out * Isometry::discrete(Discrete::F1);
    case Component::F2:
      return out * Isometry::discrete(Discrete::F2);
    case Component::F3:
      return out * Isometry::discrete(Discrete::F3);
  }
  return out;
}

namespace {

Eigen::Matrix4d to_eigen(const Mat4<double>& m) {
  Eigen::Matrix4d r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = m(i, j);
  return r;
}

std::array<double, 4> coords(const GroupElementF& p) { return {p.t, p.v.x, p.v.y, p.z}; }
GroupElementF element(const std::array<double, 4>& c) { return {c[0], {c[1], c[2]}, c[3]}; }

Eigen::Matrix4d coordinate_jacobian(const PointMap& map, const GroupElementF& p, double h) {
  Eigen::Matrix4d jac;
  const auto base = coords(p);
  for (int j = 0; j < 4; ++j) {
    auto plus = base;
    auto minus = base;
    plus[j] += h;
    minus[j] -= h;
    const auto fp = coords(map(element(plus)));
    const auto fm = coords(map(element(minus)));
    for (int i = 0; i < 4; ++i) jac(i, j) = (fp[i] - fm[i]) / (2 * h);
  }
  return jac;
}

}  // namespace

Mat4<double> numeric_frame_differential(const PointMap& map, const GroupElementF& p, double h) {
  const Eigen::Matrix4d jac = coordinate_jacobian(map, p, h);
  const Eigen::Matrix4d f_in = to_eigen(frame_x_at(p));
  const Eigen::Matrix4d f_out = to_eigen(frame_x_at(map(p)));
  const Eigen::Matrix4d d = f_out.inverse() * jac * f_in;
  Mat4<double> out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = d(static_cast<int>(i), static_cast<int>(j));
  return out;
}

bool is_isometry_numeric(const PointMap& map, const std::vector<GroupElementF>& points, double tol) {
  for (const auto& p : points) {
    const Eigen::Matrix4d jac = coordinate_jacobian(map, p, 1e-6);
    const Eigen::Matrix4d pulled = jac.transpose() * to_eigen(metric_at(map(p))) * jac;
    const Eigen::Matrix4d diff = pulled - to_eigen(metric_at(p));
    if (diff.cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

std::vector<GroupElementF> sample_points(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  std::vector<GroupElementF> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    GroupElementF p;
    p.t = ang(rng);
    p.v.x = box(rng);
    p.v.y = box(rng);
    p.z = box(rng);
    out.push_back(p);
  }
  return out;
}

bool is_isometry_numeric(const PointMap& map, int samples, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  return is_isometry_numeric(map, sample_points(samples, rng), tol);
}

bool fiber_preserving(const LatticeSpec& L, const Isometry& iso) {
  bool discrete = false;
  for (const auto& p : iso.chain()) discrete = discrete || (p.kind != IsoPrimitive::Kind::Translate &&
                                                           p.kind != IsoPrimitive::Kind::Inner);
  if (!discrete) {
    // L_g commutes past chi_h up to a translation, so only the inner parts matter.
    GroupElement h = identity_element<Scalar>();
    for (const auto& p : iso.chain())
      if (p.kind == IsoPrimitive::Kind::Inner) h = g_mul(h, p.g);
    return normalizer_contains(L, h);
  }
  const IsometryNormalForm nf = normal_form(iso);
  if (nf.component == Component::F2 || nf.component == Component::F3) return false;
  return normalizer_contains(L, nf.h);
}

std::vector<GroupElement> lattice_generators(const LatticeSpec& L) {
  return {{L.t_step(), {Scalar(0), Scalar(0)}, Scalar(0)},
          {Scalar(0), {Scalar(1), Scalar(0)}, Scalar(0)},
          {Scalar(0), {Scalar(0), Scalar(1)}, Scalar(0)},
          {Scalar(0), {Scalar(0), Scalar(0)}, Scalar(L.z_step())}};
}

bool descends(const LatticeSpec& L, const Isometry& phi, const std::vector<GroupElement>& points) {
  const auto gens = lattice_generators(L);
  for (const auto& p : points) {
    const GroupElement fp = phi.apply(p);
    for (const auto& gamma : gens) {
      if (!coset_equal(L, phi.apply(g_mul(p, gamma)), fp)) return false;
      if (!coset_equal(L, phi.apply(g_mul(p, g_inv(gamma))), fp)) return false;
    }
  }
  return true;
}

bool induced_equal(const LatticeSpec& L, const Isometry& phi, const Isometry& psi,
                   const std::vector<GroupElement>& points) {
  for (const auto& p : points)
    if (!coset_equal(L, phi.apply(p), psi.apply(p))) return false;
  return true;
}

}  // namespace oscigeo
