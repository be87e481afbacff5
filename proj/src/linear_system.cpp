#include "acsurf/linear_system.hpp"

#include <stdexcept>

#include "acsurf/qmatrix.hpp"

namespace acsurf {

namespace {

// Linear form in the unknown curve coefficients. Addition and rational
// scaling are all Poly2T ever asks of a coefficient type.
struct LinForm {
  QVector v;
};

LinForm operator+(const LinForm& a, const LinForm& b) {
  LinForm out = a;
  for (std::size_t i = 0; i < b.v.size(); ++i) out.v[i] += b.v[i];
  return out;
}

LinForm operator*(const Rational& s, const LinForm& a) {
  LinForm out = a;
  for (auto& c : out.v) c *= s;
  return out;
}

bool is_zero_coef(const LinForm& a) {
  for (const auto& c : a.v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

using PolyL = Poly2T<LinForm>;

template <typename C>
Poly2T<C> keep_order_at_least(const Poly2T<C>& p, unsigned m) {
  Poly2T<C> out;
  for (const auto& [e, c] : p.terms())
    if (e.first + e.second >= m) out.add_term(e.first, e.second, c);
  return out;
}

std::vector<std::vector<std::size_t>> children_of(const Cluster& cl) {
  std::vector<std::vector<std::size_t>> out(cl.points.size());
  for (std::size_t i = 0; i < cl.points.size(); ++i)
    if (!cl.points[i].is_root) out[cl.points[i].parent].push_back(i);
  return out;
}

struct ConditionWalk {
  const Cluster& cl;
  const std::vector<std::vector<std::size_t>>& kids;
  std::vector<QVector>& rows;

  // cur is centred at the point: collect the vanishing conditions of order
  // below the assigned multiplicity, drop those terms, and push the virtual
  // transform into both blow-up charts for the children.
  void at_point(std::size_t idx, const PolyL& cur) {
    unsigned m = cl.points[idx].multiplicity;
    for (const auto& [e, c] : cur.terms())
      if (e.first + e.second < m) rows.push_back(c.v);
    PolyL vt = keep_order_at_least(cur, m);
    bool want_a = false, want_b = false;
    for (std::size_t k : kids.at(idx)) {
      if (cl.points[k].chart == 'A') want_a = true;
      else want_b = true;
    }
    PolyL ca, cb;
    if (want_a) ca = vt.blow_up_first().divide_first_power(m);
    if (want_b) cb = vt.blow_up_second().divide_second_power(m);
    for (std::size_t k : kids.at(idx)) {
      if (cl.points[k].chart == 'A')
        at_point(k, ca.translated(Rational(0), cl.points[k].coord));
      else
        at_point(k, cb);
    }
  }
};

// The generic degree-d curve, dehomogenised into the chart of a root point
// and recentred there. Unknown t is the coefficient of the t-th monomial.
PolyL generic_at_root(unsigned degree, std::size_t unknowns, const ClusterPoint& p) {
  char chart = root_chart(p.proj);
  auto [a, b] = root_affine(p.proj);
  PolyL out;
  std::size_t t = 0;
  for (unsigned i = 0; i <= degree; ++i)
    for (unsigned j = 0; i + j <= degree; ++j, ++t) {
      unsigned k = degree - i - j;
      LinForm e;
      e.v.assign(unknowns, Rational(0));
      e.v[t] = Rational(1);
      switch (chart) {
        case 'z': out.add_term(i, j, e); break;
        case 'y': out.add_term(i, k, e); break;
        default: out.add_term(j, k, e); break;
      }
    }
  return out.translated(a, b);
}

}  // namespace

std::size_t linear_system_dim(unsigned degree, const Cluster& cl) {
  validate_cluster(cl);
  std::size_t unknowns = static_cast<std::size_t>(degree + 1) * (degree + 2) / 2;
  auto kids = children_of(cl);
  std::vector<QVector> rows;
  ConditionWalk walk{cl, kids, rows};
  for (std::size_t i = 0; i < cl.points.size(); ++i)
    if (cl.points[i].is_root) walk.at_point(i, generic_at_root(degree, unknowns, cl.points[i]));

  QMatrix m(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) m.at(r, c) = rows[r][c];
  return unknowns - rank(m);
}

bool satisfies_cluster(const PlaneCurve& curve, const Cluster& cl) {
  validate_cluster(cl);
  auto kids = children_of(cl);

  struct Walk {
    const Cluster& cl;
    const std::vector<std::vector<std::size_t>>& kids;

    bool at_point(std::size_t idx, const Poly2& cur) const {
      unsigned m = cl.points[idx].multiplicity;
      if (cur.is_zero() || cur.order() < m) return false;
      Poly2 ca, cb;
      for (std::size_t k : kids.at(idx)) {
        if (cl.points[k].chart == 'A' && ca.is_zero())
          ca = cur.blow_up_first().divide_first_power(m);
        if (cl.points[k].chart == 'B' && cb.is_zero())
          cb = cur.blow_up_second().divide_second_power(m);
      }
      for (std::size_t k : kids.at(idx)) {
        bool ok = cl.points[k].chart == 'A'
                      ? at_point(k, ca.translated(Rational(0), cl.points[k].coord))
                      : at_point(k, cb);
        if (!ok) return false;
      }
      return true;
    }
  };

  Walk walk{cl, kids};
  for (std::size_t i = 0; i < cl.points.size(); ++i) {
    if (!cl.points[i].is_root) continue;
    char chart = root_chart(cl.points[i].proj);
    auto [a, b] = root_affine(cl.points[i].proj);
    if (!walk.at_point(i, curve.dehomogenized(chart).translated(a, b))) return false;
  }
  return true;
}

}  // namespace acsurf
