#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acsurf/rational.hpp"

namespace acsurf {

inline bool is_zero_coef(const Rational& c) { return c.is_zero(); }

// Univariate polynomial over the rationals, coefficient c_[i] on t^i.
// Trailing zero coefficients are stripped; the zero polynomial has degree -1.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coef(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& t) const;

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  Poly1 scaled(const Rational& s) const;

  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "t") const;

 private:
  std::vector<Rational> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

// Quotient and remainder of a by b over the rationals; b must be nonzero.
struct Poly1DivMod {
  Poly1 quotient, remainder;
};
Poly1DivMod divmod(const Poly1& a, const Poly1& b);

// Exact quotient; throws std::logic_error if the remainder is nonzero.
Poly1 exact_div(const Poly1& a, const Poly1& b);

// Monic greatest common divisor; gcd(0, b) is monic b.
Poly1 poly_gcd(Poly1 a, Poly1 b);

// Bivariate polynomial over a coefficient ring C, sparse by exponent pair.
// C needs addition, Rational scaling, and an is_zero_coef overload. All the
// geometry here is linear in the coefficients, so C * C never occurs.
template <typename C>
class Poly2T {
 public:
  using Terms = std::map<std::pair<unsigned, unsigned>, C>;

  Poly2T() = default;

  void add_term(unsigned i, unsigned j, const C& c) {
    if (is_zero_coef(c)) return;
    auto [it, fresh] = terms_.try_emplace({i, j}, c);
    if (!fresh) {
      it->second = it->second + c;
      if (is_zero_coef(it->second)) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Valuation at the origin: minimal total degree of a term.
  unsigned order() const {
    unsigned best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      unsigned t = e.first + e.second;
      if (first || t < best) best = t;
      first = false;
    }
    if (first) throw std::logic_error("order of the zero polynomial");
    return best;
  }

  unsigned degree() const {
    unsigned best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e.first + e.second);
    return best;
  }

  friend Poly2T operator+(const Poly2T& a, const Poly2T& b) {
    Poly2T out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e.first, e.second, c);
    return out;
  }

  Poly2T scaled(const Rational& s) const {
    Poly2T out;
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.add_term(e.first, e.second, s * c);
    return out;
  }

  // Substitution x -> x + a, y -> y + b (recentres the origin).
  Poly2T translated(const Rational& a, const Rational& b) const {
    Poly2T out;
    for (const auto& [e, c] : terms_) {
      std::vector<Rational> xs = binomial_row(e.first, a);
      std::vector<Rational> ys = binomial_row(e.second, b);
      for (unsigned k = 0; k <= e.first; ++k)
        for (unsigned l = 0; l <= e.second; ++l) {
          Rational s = xs[k] * ys[l];
          if (!s.is_zero()) out.add_term(k, l, s * c);
        }
    }
    return out;
  }

  // First blow-up chart (x, y) = (u, u v): term x^i y^j -> u^(i+j) v^j.
  Poly2T blow_up_first() const {
    Poly2T out;
    for (const auto& [e, c] : terms_) out.add_term(e.first + e.second, e.second, c);
    return out;
  }

  // Second blow-up chart (x, y) = (s t, t): term x^i y^j -> s^i t^(i+j).
  Poly2T blow_up_second() const {
    Poly2T out;
    for (const auto& [e, c] : terms_) out.add_term(e.first, e.first + e.second, c);
    return out;
  }

  // Exact division by x^m.
  Poly2T divide_first_power(unsigned m) const {
    Poly2T out;
    for (const auto& [e, c] : terms_) {
      if (e.first < m) throw std::logic_error("division by a power not dividing all terms");
      out.add_term(e.first - m, e.second, c);
    }
    return out;
  }

  // Exact division by y^m.
  Poly2T divide_second_power(unsigned m) const {
    Poly2T out;
    for (const auto& [e, c] : terms_) {
      if (e.second < m) throw std::logic_error("division by a power not dividing all terms");
      out.add_term(e.first, e.second - m, c);
    }
    return out;
  }

 private:
  Terms terms_;

  // Row of the expansion (x + a)^n: coefficient of x^k is C(n,k) a^(n-k).
  static std::vector<Rational> binomial_row(unsigned n, const Rational& a) {
    std::vector<Rational> row(n + 1);
    row[n] = Rational(1);
    if (n > 0 && a.is_zero()) return row;
    Rational binom(1), power(1);
    for (unsigned k = n; k-- > 0;) {
      binom *= Rational(static_cast<long>(k) + 1);
      binom /= Rational(static_cast<long>(n - k));
      power *= a;
      row[k] = binom * power;
    }
    return row;
  }
};

using Poly2 = Poly2T<Rational>;

// Restriction to the line {x = 0}: a polynomial in y.
Poly1 restrict_first_zero(const Poly2& p);
// Restriction to the line {y = 0}: a polynomial in x.
Poly1 restrict_second_zero(const Poly2& p);
Rational eval(const Poly2& p, const Rational& x, const Rational& y);

// Plane projective curve: a nonzero homogeneous form in x, y, z of the given
// degree with rational coefficients.
class PlaneCurve {
 public:
  using Exponents = std::array<unsigned, 3>;

  PlaneCurve(unsigned degree, std::map<Exponents, Rational> terms);

  unsigned degree() const { return degree_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coef(unsigned i, unsigned j, unsigned k) const;

  Rational eval(const Rational& x, const Rational& y, const Rational& z) const;

  friend PlaneCurve operator*(const PlaneCurve& a, const PlaneCurve& b);
  friend PlaneCurve operator+(const PlaneCurve& a, const PlaneCurve& b);
  PlaneCurve scaled(const Rational& s) const;

  friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  // Affine models. Chart 'z': (x, y) -> F(x, y, 1); chart 'y': (x, z) ->
  // F(x, 1, z); chart 'x': (y, z) -> F(1, y, z).
  Poly2 dehomogenized(char chart) const;

  std::string str() const;

 private:
  unsigned degree_;
  std::map<Exponents, Rational> terms_;
};

// Convenience builder: terms as (i, j, k, coefficient) tuples.
PlaneCurve make_curve(unsigned degree,
                      const std::vector<std::tuple<unsigned, unsigned, unsigned, Rational>>& t);

// True iff the curve has no singular projective point over the complex
// numbers. Decided exactly: the partials span all forms of degree
// 3(d-1) - 2 iff they have no common zero (Euler's relation folds the curve
// itself into the condition). Lines are smooth by convention.
bool is_smooth(const PlaneCurve& f);

// Resultant of two polynomials in y with coefficients in Q[x], given as
// vectors of Poly1 indexed by the y-power. Both inputs must have positive
// y-degree with nonzero leading entries.
Poly1 resultant_y(const std::vector<Poly1>& f, const std::vector<Poly1>& g);

}  // namespace acsurf
