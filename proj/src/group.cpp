#include "oscigeo/group.hpp"

#include <cctype>
#include <sstream>

namespace oscigeo {

std::optional<int> quarter_turns(const Scalar& angle) {
  Scalar q = angle * Scalar(2) / Scalar::pi();
  if (!q.is_integer()) return std::nullopt;
  Integer n = q.rational_value().get_num();
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), 4);
  return static_cast<int>(r.get_si());
}

Mat2<Scalar> quarter_rotation(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0:
      return {1, 0, 0, 1};
    case 1:
      return {0, -1, 1, 0};
    case 2:
      return {-1, 0, 0, -1};
    default:
      return {0, 1, -1, 0};
  }
}

Mat2<Scalar> rotation(const Scalar& angle) {
  auto n = quarter_turns(angle);
  if (!n) throw ExactRotationUnavailable("rotation angle " + angle.to_string() + " is not in (pi/2)Z");
  return quarter_rotation(*n);
}

Scalar sine(const Scalar& angle) { return rotation(angle).m10; }
Scalar cosine(const Scalar& angle) { return rotation(angle).m00; }

GroupElementF to_float(const GroupElement& g) {
  return {g.t.to_double(), {g.v.x.to_double(), g.v.y.to_double()}, g.z.to_double()};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GroupElement parse_element(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("group element must look like (t; x, y; z): \"" + std::string(text) + "\"", std::string(s));
  s = s.substr(1, s.size() - 2);
  auto semi1 = s.find(';');
  auto semi2 = semi1 == std::string_view::npos ? semi1 : s.find(';', semi1 + 1);
  if (semi2 == std::string_view::npos)
    throw ParseError("group element needs two ';' separators: \"" + std::string(text) + "\"", std::string(s));
  std::string_view mid = s.substr(semi1 + 1, semi2 - semi1 - 1);
  auto comma = mid.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("group element needs 'x, y' between the ';': \"" + std::string(text) + "\"", std::string(mid));
  GroupElement g;
  g.t = parse_scalar(s.substr(0, semi1));
  g.v.x = parse_scalar(mid.substr(0, comma));
  g.v.y = parse_scalar(mid.substr(comma + 1));
  g.z = parse_scalar(s.substr(semi2 + 1));
  return g;
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  os << "(" << g.t << "; " << g.v.x << ", " << g.v.y << "; " << g.z << ")";
  return os.str();
}

}  // namespace oscigeo
