#include "oscigeo/metric.hpp"

#include <Eigen/Eigenvalues>

#include <sstream>

namespace oscigeo {

TangentF to_float(const Tangent& X) { return {X[0].to_double(), X[1].to_double(), X[2].to_double(), X[3].to_double()}; }

std::string to_string(CausalType c) {
  switch (c) {
    case CausalType::Null:
      return "null";
    case CausalType::Spacelike:
      return "spacelike";
    case CausalType::Timelike:
      return "timelike";
  }
  return "null";
}

CausalType causal_type(const Tangent& x) {
  const int s = norm_sq(x).sign();
  if (s == 0) return CausalType::Null;
  return s > 0 ? CausalType::Spacelike : CausalType::Timelike;
}

Scalar ricci_from_curvature(const CurvatureFn& curv, const Tangent& x, const Tangent& y) {
  Scalar tr = 0;
  for (std::size_t i = 0; i < 4; ++i) tr += curv(Tangent::basis(i), x, y)[i];
  return tr;
}

namespace {

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Tangent parse_vector(std::string_view text) {
  auto parts = split_top_level(text);
  if (parts.size() != 4)
    throw ParseError("tangent vector needs four components: \"" + std::string(text) + "\"", std::string(text));
  Tangent X;
  std::array<bool, 4> seen{};
  for (std::size_t i = 0; i < 4; ++i) {
    std::string item = trimmed(parts[i]);
    std::size_t slot = i;
    auto eq = item.find('=');
    if (eq != std::string::npos) {
      std::string key = trimmed(item.substr(0, eq));
      if (key.size() != 2 || key[0] != 'a' || key[1] < '0' || key[1] > '3')
        throw ParseError("unknown vector component '" + key + "'", key);
      slot = static_cast<std::size_t>(key[1] - '0');
      item = trimmed(item.substr(eq + 1));
    }
    if (seen[slot]) throw ParseError("duplicate vector component a" + std::to_string(slot), item);
    seen[slot] = true;
    X[slot] = parse_scalar(item);
  }
  return X;
}

std::string to_string(const Tangent& X) {
  std::ostringstream os;
  os << "a0=" << X[0] << ",a1=" << X[1] << ",a2=" << X[2] << ",a3=" << X[3];
  return os.str();
}

std::pair<int, int> signature(const Mat4<double>& g) {
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = g(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(m, Eigen::EigenvaluesOnly);
  int pos = 0;
  int neg = 0;
  for (int i = 0; i < 4; ++i) {
    if (es.eigenvalues()(i) > 1e-12) ++pos;
    if (es.eigenvalues()(i) < -1e-12) ++neg;
  }
  return {pos, neg};
}

}  // namespace oscigeo
