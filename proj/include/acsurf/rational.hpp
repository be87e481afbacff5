#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace acsurf {

// Exact rational number over arbitrary-precision integers.
// Canonical form is maintained at all times: gcd(num, den) = 1 and den > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}          // NOLINT: implicit by design
  Rational(const mpz_class& n) : v_(n) {}
  Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with optional leading minus on p; q must be positive
  // after reduction. Anything else is rejected.
  static Rational parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const {
    std::string out = v_.get_num().get_str();
    if (v_.get_den() != 1) out += "/" + v_.get_den().get_str();
    return out;
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(const mpq_class& q) : v_(q) {}
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational Rational::parse(const std::string& s) {
  auto is_int_literal = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = (allow_sign && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int_literal(s, true)) throw std::invalid_argument("bad rational literal: " + s);
    return Rational(mpz_class(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!is_int_literal(p, true) || !is_int_literal(q, false))
    throw std::invalid_argument("bad rational literal: " + s);
  mpz_class den(q);
  if (den == 0) throw std::invalid_argument("bad rational literal (zero denominator): " + s);
  return Rational(mpz_class(p), den);
}

using QVector = std::vector<Rational>;

}  // namespace acsurf
