#include "acsurf/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace acsurf {

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    mpz_class q = n / d;
    if (q != d) out.push_back(q);
  }
  return out;
}

// Clears denominators and the numerator content; the result has coprime
// integer coefficients and the same roots.
Poly1 primitive_integer(const Poly1& p) {
  mpz_class lcm_den = 1;
  for (int i = 0; i <= p.degree(); ++i)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), p.coef(static_cast<std::size_t>(i)).den().get_mpz_t());
  mpz_class content = 0;
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 1);
  for (int i = 0; i <= p.degree(); ++i) {
    Rational v = p.coef(static_cast<std::size_t>(i)) * Rational(lcm_den);
    c[static_cast<std::size_t>(i)] = v;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.num().get_mpz_t());
  }
  if (content == 0) return Poly1();
  for (auto& v : c) v /= Rational(content);
  return Poly1(std::move(c));
}

}  // namespace

RationalRoots rational_roots(const Poly1& p) {
  if (p.is_zero()) throw std::invalid_argument("root search on the zero polynomial");
  RationalRoots out;

  Poly1 cur = primitive_integer(p);

  // Factor out the root at zero first so the constant coefficient is nonzero.
  unsigned at_zero = 0;
  while (!cur.is_constant() && cur.coef(0).is_zero()) {
    std::vector<Rational> c;
    for (int i = 1; i <= cur.degree(); ++i) c.push_back(cur.coef(static_cast<std::size_t>(i)));
    cur = Poly1(std::move(c));
    ++at_zero;
  }
  if (at_zero > 0) out.roots.push_back({Rational(0), at_zero});

  if (!cur.is_constant()) {
    // Any rational root p/q in lowest terms has p dividing the constant
    // coefficient and q dividing the leading one. Degrees here are tiny, so
    // trial division over all candidates is exact and cheap.
    auto ps = positive_divisors(cur.coef(0).num());
    auto qs = positive_divisors(cur.lead().num());
    std::vector<Rational> candidates;
    for (const auto& num : ps)
      for (const auto& den : qs) {
        candidates.push_back(Rational(num, den));
        candidates.push_back(Rational(-num, den));
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& r : candidates) {
      unsigned mult = 0;
      while (!cur.is_constant() && cur.eval(r).is_zero()) {
        cur = divmod(cur, Poly1(std::vector<Rational>{-r, Rational(1)})).quotient;
        ++mult;
      }
      if (mult > 0) out.roots.push_back({r, mult});
      if (cur.is_constant()) break;
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.residual = cur;
  return out;
}

}  // namespace acsurf
