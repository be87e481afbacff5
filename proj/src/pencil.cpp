#include "acsurf/pencil.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "acsurf/roots.hpp"

namespace acsurf {

namespace {

DivisorClass padded(DivisorClass d, std::size_t rank) {
  d.coords.resize(rank, Rational(0));
  return d;
}

bool vanishes_at_origin(const Poly2& p) { return p.terms().find({0, 0}) == p.terms().end(); }

// Substitution x -> x + lambda * y.
Poly2 shear_x(const Poly2& p, const Rational& lambda) {
  Poly2 out;
  for (const auto& [e, c] : p.terms()) {
    Rational binom(1), power(1);
    for (unsigned k = e.first + 1; k-- > 0;) {
      if (k < e.first) {
        binom *= Rational(static_cast<long>(k) + 1);
        binom /= Rational(static_cast<long>(e.first - k));
        power *= lambda;
      }
      Rational s = binom * power;
      if (!s.is_zero()) out.add_term(k, e.second + e.first - k, s * c);
    }
  }
  return out;
}

std::vector<Poly1> by_y_power(const Poly2& p) {
  std::size_t dy = 0;
  for (const auto& [e, c] : p.terms()) dy = std::max<std::size_t>(dy, e.second);
  std::vector<std::vector<Rational>> rows(dy + 1);
  for (const auto& [e, c] : p.terms()) {
    auto& row = rows[e.second];
    if (row.size() <= e.first) row.resize(e.first + 1, Rational(0));
    row[e.first] = c;
  }
  std::vector<Poly1> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return out;
}

Poly1 eval_x(const std::vector<Poly1>& rows, const Rational& x0) {
  std::vector<Rational> c;
  c.reserve(rows.size());
  for (const auto& r : rows) c.push_back(r.eval(x0));
  return Poly1(std::move(c));
}

// Top-degree part of an affine polynomial, evaluated on (t, 1).
Poly1 top_form(const Poly2& p) {
  unsigned d = p.degree();
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
  for (const auto& [e, v] : p.terms())
    if (e.first + e.second == d) c[e.first] = v;
  return Poly1(std::move(c));
}

// Restriction to the line at infinity as a polynomial in t = x/y, plus
// whether the form vanishes identically there and its value at (1:0:0).
struct InfinityData {
  Poly1 on_line;      // F(t, 1, 0)
  bool line_in_curve; // F(x, y, 0) == 0
  bool through_x;     // F(1, 0, 0) == 0
};

InfinityData infinity_data(const PlaneCurve& f) {
  std::vector<Rational> c(static_cast<std::size_t>(f.degree()) + 1, Rational(0));
  bool any = false;
  for (const auto& [e, v] : f.terms()) {
    if (e[2] != 0) continue;
    c[e[0]] = v;
    any = true;
  }
  Poly1 on_line(std::move(c));
  bool through_x = f.coef(f.degree(), 0, 0).is_zero();
  return {std::move(on_line), !any, through_x};
}

[[noreturn]] void irrational_error(const std::string& where, const Poly1& residual) {
  throw std::runtime_error("irrational base point " + where + " (residual factor " +
                           residual.str() + ")");
}

// All common rational points of two curves without common component, in a
// deterministic order: affine points sorted by coordinates, then points on
// the line at infinity sorted by t = x/y, then (1:0:0). Throws when the
// curves share a component or when a common point is not rational.
std::vector<std::array<Rational, 3>> common_points(const PlaneCurve& F, const PlaneCurve& G) {
  InfinityData inf_f = infinity_data(F);
  InfinityData inf_g = infinity_data(G);
  if (inf_f.line_in_curve && inf_g.line_in_curve)
    throw std::runtime_error("pencil generators share a common component");

  std::vector<std::array<Rational, 3>> out;

  // Affine part. A shear x -> x + lambda*y makes both leading y-coefficients
  // constant, so every root of the resultant supports a genuine common zero.
  Poly2 f2 = F.dehomogenized('z');
  Poly2 g2 = G.dehomogenized('z');
  if (f2.degree() > 0 && g2.degree() > 0) {
    Poly1 tf = top_form(f2), tg = top_form(g2);
    Rational lambda(0);
    for (long k = 0;; ++k) {
      lambda = Rational((k % 2 == 0) ? k / 2 : -(k / 2 + 1));
      if (!tf.eval(lambda).is_zero() && !tg.eval(lambda).is_zero()) break;
    }
    auto fv = by_y_power(shear_x(f2, lambda));
    auto gv = by_y_power(shear_x(g2, lambda));
    Poly1 res = resultant_y(fv, gv);
    if (res.is_zero()) throw std::runtime_error("pencil generators share a common component");
    auto rx = rational_roots(res);
    if (!rx.fully_split()) irrational_error("in the affine chart", rx.residual);
    std::vector<std::pair<Rational, Rational>> affine;
    for (const auto& [x0, mx] : rx.roots) {
      Poly1 h = poly_gcd(eval_x(fv, x0), eval_x(gv, x0));
      auto ry = rational_roots(h);
      if (!ry.fully_split()) irrational_error("in the affine chart", ry.residual);
      for (const auto& [y0, my] : ry.roots) affine.push_back({x0 + lambda * y0, y0});
    }
    std::sort(affine.begin(), affine.end());
    for (const auto& [a, b] : affine) out.push_back({a, b, Rational(1)});
  }

  // Points at infinity. When one generator contains the whole line, the
  // common points there are the other generator's intersections with it.
  std::vector<Rational> ts;
  bool origin_x = false;
  auto take_roots = [&](const Poly1& h) {
    auto r = rational_roots(h);
    if (!r.fully_split()) irrational_error("on the line at infinity", r.residual);
    for (const auto& [t0, m] : r.roots) ts.push_back(t0);
  };
  if (inf_f.line_in_curve) {
    take_roots(inf_g.on_line);
    origin_x = inf_g.through_x;
  } else if (inf_g.line_in_curve) {
    take_roots(inf_f.on_line);
    origin_x = inf_f.through_x;
  } else {
    Poly1 h = poly_gcd(inf_f.on_line, inf_g.on_line);
    if (h.degree() > 0) take_roots(h);
    origin_x = inf_f.through_x && inf_g.through_x;
  }
  std::sort(ts.begin(), ts.end());
  for (const auto& t : ts) out.push_back({t, Rational(1), Rational(0)});
  if (origin_x) out.push_back({Rational(1), Rational(0), Rational(0)});

  for (auto& p : out) p = normalize_proj(p);
  return out;
}

std::string proj_label(const std::array<Rational, 3>& p) {
  return "(" + p[0].str() + ":" + p[1].str() + ":" + p[2].str() + ")";
}

LocalFrame root_frame(const PencilState& st, const std::array<Rational, 3>& p) {
  char chart = root_chart(p);
  auto [a, b] = root_affine(p);
  LocalFrame fr;
  fr.f = st.f.dehomogenized(chart).translated(a, b);
  fr.g = st.g.dehomogenized(chart).translated(a, b);
  for (const auto& m : st.members)
    fr.member_eqs.push_back(m.curve.dehomogenized(chart).translated(a, b));
  return fr;
}

unsigned common_order(const LocalFrame& fr) {
  return std::min(fr.f.is_zero() ? 0u : fr.f.order(), fr.g.is_zero() ? 0u : fr.g.order());
}

PendingSite make_root_site(const PencilState& st, const std::array<Rational, 3>& p) {
  PendingSite site{root_frame(st, p), ClusterPoint{}};
  site.record.is_root = true;
  site.record.proj = p;
  site.record.label = proj_label(p);
  site.record.multiplicity = common_order(site.frame);
  return site;
}

PendingSite make_child_site(const PencilState& st, const ClusterPoint& rec) {
  if (rec.parent >= st.frames.size())
    throw std::invalid_argument("cluster point refers to a line that is not blown up yet");
  const auto& [fa, fb] = st.frames[rec.parent];
  PendingSite site{LocalFrame{}, rec};
  if (rec.chart == 'A') {
    site.frame.f = fa.f.translated(Rational(0), rec.coord);
    site.frame.g = fa.g.translated(Rational(0), rec.coord);
    for (const auto& m : fa.member_eqs) site.frame.member_eqs.push_back(m.translated(Rational(0), rec.coord));
    for (const auto& [i, e] : fa.exceptional_eqs)
      site.frame.exceptional_eqs.push_back({i, e.translated(Rational(0), rec.coord)});
  } else {
    site.frame = fb;
  }
  if (site.record.label.empty()) {
    std::ostringstream os;
    os << "E" << (rec.parent + 1) << ":v=";
    if (rec.chart == 'A') os << rec.coord.str();
    else os << "inf";
    site.record.label = os.str();
  }
  return site;
}

// Core blow-up step shared by discovery and replay.
PencilState blow_site(PencilState st, const PendingSite& site, bool discover) {
  unsigned m = common_order(site.frame);
  std::string parent_chart;
  if (!site.record.is_root) {
    std::ostringstream os;
    os << "E" << (site.record.parent + 1) << ":" << site.record.chart;
    parent_chart = os.str();
  }
  st.ambient = blow_up(st.ambient, site.record.label, parent_chart);
  std::size_t rank = st.ambient.rank();
  std::size_t new_index = st.cluster.points.size();

  st.fiber = padded(std::move(st.fiber), rank);
  st.fiber.coords[rank - 1] = Rational(-static_cast<long>(m));
  for (auto& c : st.member_classes) c = padded(std::move(c), rank);
  for (auto& c : st.exceptional_classes) c = padded(std::move(c), rank);

  for (std::size_t i = 0; i < st.member_classes.size(); ++i) {
    unsigned ord = site.frame.member_eqs[i].is_zero() ? 0u : site.frame.member_eqs[i].order();
    st.member_classes[i].coords[rank - 1] = Rational(-static_cast<long>(ord));
  }
  for (const auto& [idx, eq] : site.frame.exceptional_eqs) {
    unsigned ord = eq.is_zero() ? 0u : eq.order();
    if (ord > 0)
      st.exceptional_classes[idx].coords[rank - 1] -= Rational(static_cast<long>(ord));
  }

  st.cluster.points.push_back(site.record);
  st.exceptional_classes.push_back(st.ambient.basis_class(rank - 1));

  LocalFrame fa, fb;
  fa.f = site.frame.f.blow_up_first().divide_first_power(m);
  fa.g = site.frame.g.blow_up_first().divide_first_power(m);
  fb.f = site.frame.f.blow_up_second().divide_second_power(m);
  fb.g = site.frame.g.blow_up_second().divide_second_power(m);
  for (const auto& me : site.frame.member_eqs) {
    unsigned ord = me.is_zero() ? 0u : me.order();
    fa.member_eqs.push_back(me.blow_up_first().divide_first_power(ord));
    fb.member_eqs.push_back(me.blow_up_second().divide_second_power(ord));
  }
  for (const auto& [idx, eq] : site.frame.exceptional_eqs) {
    unsigned ord = eq.is_zero() ? 0u : eq.order();
    fa.exceptional_eqs.push_back({idx, eq.blow_up_first().divide_first_power(ord)});
    fb.exceptional_eqs.push_back({idx, eq.blow_up_second().divide_second_power(ord)});
  }
  Poly2 ua, ub;
  ua.add_term(1, 0, Rational(1));
  ub.add_term(0, 1, Rational(1));
  fa.exceptional_eqs.push_back({new_index, ua});
  fb.exceptional_eqs.push_back({new_index, ub});
  st.frames.push_back({fa, fb});

  if (!discover) return st;

  // Base points of the blown-up pencil on the new line: common roots of the
  // two restrictions in the first chart, plus the far point of the line when
  // both transforms pass through it.
  std::vector<PendingSite> kids;
  Poly1 rf = restrict_first_zero(fa.f);
  Poly1 rg = restrict_first_zero(fa.g);
  if (rf.is_zero() && rg.is_zero())
    throw std::logic_error("generators remained divisible after dividing the common order");
  Poly1 h = poly_gcd(rf, rg);
  if (h.degree() > 0) {
    auto rr = rational_roots(h);
    if (!rr.fully_split())
      irrational_error("on the line of " + site.record.label, rr.residual);
    for (const auto& [v0, mult] : rr.roots) {
      ClusterPoint rec;
      rec.is_root = false;
      rec.parent = new_index;
      rec.chart = 'A';
      rec.coord = v0;
      PendingSite kid = make_child_site(st, rec);
      kid.record.multiplicity = common_order(kid.frame);
      kids.push_back(std::move(kid));
    }
  }
  if (vanishes_at_origin(fb.f) && vanishes_at_origin(fb.g)) {
    ClusterPoint rec;
    rec.is_root = false;
    rec.parent = new_index;
    rec.chart = 'B';
    PendingSite kid = make_child_site(st, rec);
    kid.record.multiplicity = common_order(kid.frame);
    kids.push_back(std::move(kid));
  }
  st.pending.insert(st.pending.begin(), std::make_move_iterator(kids.begin()),
                    std::make_move_iterator(kids.end()));
  return st;
}

bool proportional(const PlaneCurve& a, const PlaneCurve& b) {
  if (a.degree() != b.degree()) return false;
  const auto& [e0, c0] = *a.terms().begin();
  auto it = b.terms().find(e0);
  if (it == b.terms().end()) return false;
  return b == a.scaled(it->second / c0);
}

// Certified irreducibility over the complex numbers: lines always, conics by
// the rank of the symmetric matrix, higher degrees by smoothness. Singular
// factors of degree three or more are refused rather than guessed.
void certify_irreducible(const PlaneCurve& c, const std::string& label) {
  if (c.degree() == 1) return;
  if (c.degree() == 2) {
    QMatrix m(3, 3);
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < 3; ++j) {
        PlaneCurve::Exponents e{0, 0, 0};
        e[i] += 1;
        e[j] += 1;
        Rational co = c.coef(e[0], e[1], e[2]);
        m.at(i, j) = (i == j) ? co : co / Rational(2);
      }
    if (rank(m) == 3) return;
    throw std::invalid_argument("member factor " + label + " is a degenerate conic");
  }
  if (is_smooth(c)) return;
  throw std::invalid_argument("cannot certify irreducibility of singular member factor " + label);
}

}  // namespace

void validate_cluster(const Cluster& c) {
  std::set<std::string> root_keys;
  std::set<std::string> child_keys;
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const auto& p = c.points[i];
    if (p.multiplicity == 0) throw std::invalid_argument("cluster multiplicity must be positive");
    if (p.is_root) {
      std::string key = proj_label(normalize_proj(p.proj));
      if (!root_keys.insert(key).second) throw std::invalid_argument("duplicate cluster point " + key);
      continue;
    }
    if (p.parent >= i) throw std::invalid_argument("cluster child must come after its parent");
    if (p.chart != 'A' && p.chart != 'B') throw std::invalid_argument("unknown cluster chart");
    std::string key = std::to_string(p.parent) + "/" + p.chart +
                      (p.chart == 'A' ? "/" + p.coord.str() : "");
    if (!child_keys.insert(key).second)
      throw std::invalid_argument("duplicate cluster point on line " + std::to_string(p.parent + 1));
  }
}

char root_chart(const std::array<Rational, 3>& p) {
  if (!p[2].is_zero()) return 'z';
  if (!p[1].is_zero()) return 'y';
  if (!p[0].is_zero()) return 'x';
  throw std::invalid_argument("zero projective triple");
}

std::pair<Rational, Rational> root_affine(const std::array<Rational, 3>& p) {
  switch (root_chart(p)) {
    case 'z': return {p[0] / p[2], p[1] / p[2]};
    case 'y': return {p[0] / p[1], p[2] / p[1]};
    default: return {p[1] / p[0], p[2] / p[0]};
  }
}

std::array<Rational, 3> normalize_proj(const std::array<Rational, 3>& p) {
  mpz_class lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
  mpz_class gcd = 0;
  std::array<mpz_class, 3> ints;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational v = p[i] * Rational(lcm);
    ints[i] = v.num();
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (gcd == 0) throw std::invalid_argument("zero projective triple");
  int lead_sign = 0;
  for (const auto& v : ints)
    if (v != 0) {
      lead_sign = sgn(v);
      break;
    }
  if (lead_sign < 0) gcd = -gcd;
  std::array<Rational, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = Rational(mpz_class(ints[i] / gcd));
  return out;
}

PencilState make_pencil(const PlaneCurve& f, const PlaneCurve& g,
                        std::vector<MemberFactor> member) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("pencil generators must have equal degree");
  if (proportional(f, g)) throw std::invalid_argument("pencil generators are proportional");

  unsigned d = f.degree();
  if (!member.empty()) {
    unsigned total = 0;
    for (const auto& m : member) {
      if (m.multiplicity == 0) throw std::invalid_argument("member factor with zero multiplicity");
      certify_irreducible(m.curve, m.label);
      total += m.multiplicity * m.curve.degree();
    }
    if (total != d) throw std::invalid_argument("member factor degrees do not sum to the pencil degree");
    for (std::size_t i = 0; i < member.size(); ++i)
      for (std::size_t j = i + 1; j < member.size(); ++j)
        if (proportional(member[i].curve, member[j].curve))
          throw std::invalid_argument("member factors must be distinct curves");

    // The factored member must lie in the pencil: solve mu*f + nu*g = product.
    PlaneCurve prod = member[0].curve;
    for (unsigned k = 1; k < member[0].multiplicity; ++k) prod = prod * member[0].curve;
    for (std::size_t i = 1; i < member.size(); ++i)
      for (unsigned k = 0; k < member[i].multiplicity; ++k) prod = prod * member[i].curve;
    std::vector<PlaneCurve::Exponents> monos;
    for (unsigned i = 0; i <= d; ++i)
      for (unsigned j = 0; i + j <= d; ++j) monos.push_back({i, j, d - i - j});
    QMatrix m(monos.size(), 2);
    QVector rhs(monos.size());
    for (std::size_t r = 0; r < monos.size(); ++r) {
      m.at(r, 0) = f.coef(monos[r][0], monos[r][1], monos[r][2]);
      m.at(r, 1) = g.coef(monos[r][0], monos[r][1], monos[r][2]);
      rhs[r] = prod.coef(monos[r][0], monos[r][1], monos[r][2]);
    }
    if (!solve(m, rhs)) throw std::invalid_argument("registered member does not lie in the pencil");
  }

  PencilState st{f,
                 g,
                 std::move(member),
                 SurfaceLattice::plane(),
                 DivisorClass(QVector{Rational(static_cast<long>(d))}),
                 Cluster{},
                 {},
                 {},
                 {},
                 {}};
  for (const auto& m : st.members)
    st.member_classes.push_back(
        DivisorClass(QVector{Rational(static_cast<long>(m.curve.degree()))}));

  for (const auto& p : common_points(f, g)) st.pending.push_back(make_root_site(st, p));
  return st;
}

std::vector<ClusterPoint> pencil_base_points(const PencilState& st) {
  std::vector<ClusterPoint> out;
  out.reserve(st.pending.size());
  for (const auto& s : st.pending) out.push_back(s.record);
  return out;
}

PencilState blow_up_base_point(const PencilState& st, std::size_t pending_index) {
  if (pending_index >= st.pending.size())
    throw std::out_of_range("no pending base point with that index");
  PencilState next = st;
  PendingSite site = std::move(next.pending[pending_index]);
  next.pending.erase(next.pending.begin() + static_cast<std::ptrdiff_t>(pending_index));
  return blow_site(std::move(next), site, true);
}

PencilState resolve_pencil(PencilState st) {
  // Each step blows up a genuine base point, which lowers the fiber
  // self-intersection by at least one; degree^2 steps bound the loop.
  std::size_t guard = static_cast<std::size_t>(st.f.degree()) * st.f.degree() + st.pending.size() + 1;
  while (!st.pending.empty()) {
    if (guard-- == 0) throw std::logic_error("resolution failed to terminate");
    st = blow_up_base_point(st, 0);
  }
  if (!fiber_self_intersection(st).is_zero())
    throw std::logic_error("base locus bookkeeping out of balance");
  return st;
}

PencilState resolve_prescribed(const PlaneCurve& f, const PlaneCurve& g,
                               std::vector<MemberFactor> member, const Cluster& target) {
  validate_cluster(target);
  PencilState st = make_pencil(f, g, std::move(member));
  st.pending.clear();
  for (const auto& rec : target.points) {
    PendingSite site = rec.is_root ? make_root_site(st, normalize_proj(rec.proj))
                                   : make_child_site(st, rec);
    site.record.multiplicity = rec.multiplicity;
    if (!rec.label.empty()) site.record.label = rec.label;
    st = blow_site(std::move(st), site, false);
  }
  return st;
}

Rational fiber_self_intersection(const PencilState& st) {
  return intersect(st.ambient, st.fiber, st.fiber);
}

MemberFiber member_fiber_decomposition(const PencilState& st, const DivisorClass& target) {
  if (st.members.empty()) throw std::invalid_argument("no member registered with the pencil");
  std::size_t rank = st.ambient.rank();
  if (target.rank() != rank) throw std::invalid_argument("target class has the wrong rank");

  DivisorClass rest = target;
  for (std::size_t i = 0; i < st.members.size(); ++i)
    rest = rest - Rational(static_cast<long>(st.members[i].multiplicity)) * st.member_classes[i];

  std::size_t n = st.exceptional_classes.size();
  QMatrix m(rank, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < rank; ++i) m.at(i, j) = st.exceptional_classes[j].coords[i];
  auto sol = solve(m, rest.coords);
  if (!sol) throw std::runtime_error("member does not decompose over the blown-up lines");
  for (const auto& a : *sol)
    if (!a.is_integer() || a.sign() < 0)
      throw std::runtime_error("member decomposition has a non-effective coefficient");

  std::vector<ConfigComponent> comps;
  std::vector<DivisorClass> classes;
  std::vector<mpz_class> mults;
  const DivisorClass& K = st.ambient.canonical();
  for (std::size_t i = 0; i < st.members.size(); ++i) {
    comps.push_back({st.members[i].label, st.member_classes[i],
                     intersect(st.ambient, st.member_classes[i], st.member_classes[i]),
                     intersect(st.ambient, K, st.member_classes[i])});
    classes.push_back(st.member_classes[i]);
    mults.push_back(mpz_class(static_cast<long>(st.members[i].multiplicity)));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if ((*sol)[j].is_zero()) continue;
    const DivisorClass& c = st.exceptional_classes[j];
    std::string label = st.ambient.basis_labels()[j + 1] + "c";
    comps.push_back({label, c, intersect(st.ambient, c, c), intersect(st.ambient, K, c)});
    classes.push_back(c);
    mults.push_back((*sol)[j].num());
  }

  QMatrix gram(comps.size(), comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j)
      gram.at(i, j) = intersect(st.ambient, classes[i], classes[j]);

  // Exactness certificate: the weighted component sum must reproduce the
  // target on the nose.
  DivisorClass check(QVector(rank, Rational(0)));
  for (std::size_t i = 0; i < comps.size(); ++i)
    check = check + Rational(mults[i]) * classes[i];
  if (!(check == target)) throw std::logic_error("component decomposition failed to certify");

  return {CurveConfig(std::move(comps), gram, st.ambient), std::move(mults)};
}

MemberFiber degenerate_member_config(const PencilState& st) {
  if (!st.resolved() || !fiber_self_intersection(st).is_zero())
    throw std::invalid_argument("pencil is not fully resolved");
  return member_fiber_decomposition(st, st.fiber);
}

std::vector<Rational> exceptional_line_crossings(const PencilState& st, std::size_t point_index) {
  if (point_index >= st.frames.size())
    throw std::out_of_range("no blown-up point with that index");
  const LocalFrame& fa = st.frames[point_index].first;
  std::vector<Rational> out;
  auto collect = [&out](const Poly2& p) {
    Poly1 r = restrict_first_zero(p);
    if (r.is_zero() || r.is_constant()) return;
    for (const auto& [v, m] : rational_roots(r).roots) out.push_back(v);
  };
  collect(fa.f);
  collect(fa.g);
  for (const auto& m : fa.member_eqs) collect(m);
  for (const auto& [i, e] : fa.exceptional_eqs)
    if (i != point_index) collect(e);
  for (const auto& p : st.cluster.points)
    if (!p.is_root && p.parent == point_index && p.chart == 'A') out.push_back(p.coord);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace acsurf
