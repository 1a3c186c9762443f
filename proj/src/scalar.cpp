#include "oscigeo/scalar.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace oscigeo {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v != 0) coeffs_.push_back(std::move(v));
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = a.coeffs_;
  const int db = b.degree();
  const int da = a.degree();
  std::vector<Rational> quot(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, Rational(0));
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / b.leading();
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs_[j];
  }
  q = Polynomial(std::move(quot));
  r = Polynomial(std::move(rem));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.is_zero() ? r : r.scaled(1 / r.leading());
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading());
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// ---------------------------------------------------------------------------
// Bounds on pi

namespace {

// floor(2^prec / x) summed as the alternating arctan(1/x) series. Returns the
// scaled approximation and the number of terms; the error is below 2*terms+1.
Integer arctan_inv_scaled(unsigned long x, unsigned prec, unsigned long& terms) {
  Integer power = (Integer(1) << prec) / x;
  const Integer x2 = Integer(x) * x;
  Integer sum = 0;
  terms = 0;
  for (unsigned long n = 0; power != 0; ++n) {
    Integer term = power / (2 * n + 1);
    if (n % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power /= x2;
    ++terms;
  }
  return sum;
}

}  // namespace

void pi_bounds(unsigned bits, Rational& lo, Rational& hi) {
  static std::mutex mu;
  static std::map<unsigned, std::pair<Rational, Rational>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(bits); it != cache.end()) {
      lo = it->second.first;
      hi = it->second.second;
      return;
    }
  }
  const unsigned prec = bits + 40;
  unsigned long n5 = 0;
  unsigned long n239 = 0;
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
  Integer scaled = 16 * arctan_inv_scaled(5, prec, n5) - 4 * arctan_inv_scaled(239, prec, n239);
  Integer err = 16 * (2 * Integer(n5) + 1) + 4 * (2 * Integer(n239) + 1);
  Integer denom = Integer(1) << prec;
  Rational l(Integer(scaled - err), denom);
  Rational h(Integer(scaled + err), denom);
  l.canonicalize();
  h.canonicalize();
  std::lock_guard lock(mu);
  cache.emplace(bits, std::make_pair(l, h));
  lo = l;
  hi = h;
}

namespace {

// Enclosure of p over [lo, hi] with 0 < lo.
void enclose(const Polynomial& p, const Rational& lo, const Rational& hi, Rational& pmin, Rational& pmax) {
  pmin = 0;
  pmax = 0;
  Rational plo = 1;
  Rational phi = 1;
  for (const auto& c : p.coeffs()) {
    if (c > 0) {
      pmin += c * plo;
      pmax += c * phi;
    } else if (c < 0) {
      pmin += c * phi;
      pmax += c * plo;
    }
    plo *= lo;
    phi *= hi;
  }
}

}  // namespace

int sign_at_pi(const Polynomial& p) {
  if (p.is_zero()) return 0;
  if (p.degree() == 0) return sgn(p.leading());
  // p(pi) != 0 since pi is transcendental, so refinement terminates.
  for (unsigned bits = 64;; bits *= 2) {
    Rational lo, hi, pmin, pmax;
    pi_bounds(bits, lo, hi);
    enclose(p, lo, hi, pmin, pmax);
    if (pmin > 0) return 1;
    if (pmax < 0) return -1;
  }
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Rational& v) : num_(v), den_(Rational(1)) {}

Scalar Scalar::from_fraction(Polynomial num, Polynomial den) {
  Scalar s(std::move(num), std::move(den), false);
  s.canonicalize();
  return s;
}

Scalar Scalar::pi() {
  return Scalar(Polynomial::monomial(Rational(1), 1), Polynomial(Rational(1)), true);
}

void Scalar::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      Polynomial q, r;
      Polynomial::divmod(num_, g, q, r);
      num_ = std::move(q);
      Polynomial::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  if (den_.leading() != 1) {
    Rational inv = 1 / den_.leading();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw NotRational("value depends on pi: " + to_string());
  return num_.coeff(0);
}

bool Scalar::is_integer() const {
  if (!is_rational()) return false;
  return num_.coeff(0).get_den() == 1;
}

int Scalar::sign() const { return sign_at_pi(num_) * sign_at_pi(den_); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer Scalar::floor() const {
  if (is_rational()) {
    Rational v = num_.coeff(0);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
  }
  double d = to_double();
  Integer n(std::floor(d));
  while ((*this - Scalar(n)).sign() < 0) n -= 1;
  while ((*this - Scalar(Integer(n + 1))).sign() >= 0) n += 1;
  return n;
}

double Scalar::to_double() const {
  if (is_rational()) return num_.coeff(0).get_d();
  Rational lo, hi;
  pi_bounds(128, lo, hi);
  Rational v = num_.eval(lo) / den_.eval(lo);
  return v.get_d();
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

bool in_lattice_1d(const Scalar& s, const Rational& step) {
  if (!s.is_rational()) return false;
  Rational q = s.rational_value() / step;
  return q.get_den() == 1;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace oscigeo
