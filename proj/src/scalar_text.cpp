// Text form of Scalars: printer and recursive-descent parser.

#include <cctype>
#include <numeric>
#include <sstream>

#include "oscigeo/scalar.hpp"

namespace oscigeo {

namespace {

std::string rational_text(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string poly_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += rational_text(mag);
      continue;
    }
    if (mag != 1) {
      out += mag.get_den() == 1 ? rational_text(mag) + "*" : "(" + rational_text(mag) + ")*";
    }
    out += "pi";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

int term_count(const Polynomial& p) {
  int n = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++n;
  return n;
}

// Scales num/den by a positive rational so both have coprime integer coefficients.
void clear_denominators(Polynomial& num, Polynomial& den) {
  Integer l = 1;
  for (const auto* p : {&num, &den})
    for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto* p : {&num, &den})
    for (const auto& c : p->coeffs()) {
      Rational scaled = c * l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
    }
  Rational f(l, g);
  f.canonicalize();
  num = num.scaled(f);
  den = den.scaled(f);
}

}  // namespace

std::string Scalar::to_string() const {
  if (den_.degree() == 0) return poly_text(num_);
  Polynomial n = num_;
  Polynomial d = den_;
  clear_denominators(n, d);
  std::string ns = poly_text(n);
  if (term_count(n) > 1) ns = "(" + ns + ")";
  std::string ds = poly_text(d);
  const bool bare = term_count(d) == 1 && d.leading() == 1;
  if (!bare) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected token");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::string tok = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("<end>");
    if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      std::size_t e = pos_;
      while (e < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[e])) || text_[e] == '.')) ++e;
      tok = std::string(text_.substr(pos_, e - pos_));
    }
    throw ParseError(what + " '" + tok + "' in scalar \"" + std::string(text_) + "\"", tok);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) throw DivisionByZero();
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!accept('^')) return base;
    skip_ws();
    bool neg = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent at");
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e > 64) fail("exponent too large at");
    Scalar r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    if (neg) {
      if (r.is_zero()) throw DivisionByZero();
      r = Scalar(1) / r;
    }
    return r;
  }

  Scalar atom() {
    skip_ws();
    if (accept('(')) {
      Scalar v = expr();
      if (!accept(')')) fail("expected ')' at");
      return v;
    }
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word == "pi") return Scalar::pi();
      pos_ = start;
      fail("unknown identifier");
    }
    fail("unexpected token");
  }

  Scalar number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Integer whole = start == pos_ ? Integer(0) : Integer(std::string(text_.substr(start, pos_ - start)));
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (fs == pos_ && start + 1 == pos_) {
        pos_ = start;
        fail("malformed number");
      }
      std::string frac(text_.substr(fs, pos_ - fs));
      Integer scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      Integer f = frac.empty() ? Integer(0) : Integer(frac);
      Rational r(Integer(whole * scale + f), scale);
      r.canonicalize();
      return Scalar(r);
    }
    return Scalar(whole);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace oscigeo
