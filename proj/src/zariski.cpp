#include "acsurf/zariski.hpp"

#include <stdexcept>

namespace acsurf {

namespace {

// Pairings of the divisor with coefficients x against every component:
// (gram * x)_i = (sum_j x_j C_j) . C_i.
QVector pairings(const CurveConfig& c, const QVector& x) { return c.gram().apply(x); }

}  // namespace

bool is_nef_within(const CurveConfig& c, const QVector& d) {
  if (d.size() != c.size())
    throw std::invalid_argument("coefficient vector length does not match configuration");
  for (const Rational& p : pairings(c, d))
    if (p.sign() < 0) return false;
  return true;
}

ZariskiResult zariski_decompose(const CurveConfig& c, const QVector& d) {
  std::size_t n = c.size();
  if (d.size() != n)
    throw std::invalid_argument("coefficient vector length does not match configuration");
  bool any = false;
  for (const Rational& x : d) {
    if (x.sign() < 0) throw std::invalid_argument("coefficients must be non-negative");
    if (x.sign() > 0) any = true;
  }
  if (!any) throw std::invalid_argument("coefficients must not all vanish");

  // Fujita iteration: S accumulates every component the current candidate P
  // meets negatively; N is re-solved on S so that P is orthogonal to S.
  std::vector<bool> in_s(n, false);
  QVector nvec(n);
  const QVector d_pairings = pairings(c, d);

  while (true) {
    QVector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = d[i] - nvec[i];
    QVector pp = pairings(c, p);

    bool grew = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_s[i] && pp[i].sign() < 0) {
        in_s[i] = true;
        grew = true;
      }
    }
    if (!grew) break;

    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (in_s[i]) s.push_back(i);

    QMatrix block(s.size(), s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) block.at(a, b) = c.gram().at(s[a], s[b]);
    if (definiteness(block) != Definiteness::negative_definite)
      throw std::runtime_error("no Zariski decomposition within configuration");

    // (d - n).C_j = 0 on S, in coordinates: block * n_S = (gram d)_S.
    QVector rhs(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) rhs[a] = d_pairings[s[a]];
    auto sol = solve(block, rhs);
    if (!sol) throw std::logic_error("definite system without a solution");
    nvec.assign(n, Rational(0));
    for (std::size_t a = 0; a < s.size(); ++a) nvec[s[a]] = (*sol)[a];
  }

  ZariskiResult r;
  r.negative_part = nvec;
  r.positive_part.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.positive_part[i] = d[i] - nvec[i];
  for (std::size_t i = 0; i < n; ++i)
    if (nvec[i].sign() > 0) r.negative_support.push_back(i);

  // The loop invariant guarantees these; a failure here is a library bug.
  QVector pp = pairings(c, r.positive_part);
  for (std::size_t i = 0; i < n; ++i) {
    if (pp[i].sign() < 0) throw std::logic_error("positive part meets a component negatively");
    if (nvec[i].sign() < 0) throw std::logic_error("negative part has a negative coefficient");
    if (in_s[i] && !pp[i].is_zero())
      throw std::logic_error("positive part not orthogonal to the support");
  }
  return r;
}

}  // namespace acsurf
