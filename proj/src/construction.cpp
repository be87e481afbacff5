#include "acsurf/construction.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "acsurf/linear_system.hpp"
#include "acsurf/poly.hpp"
#include "acsurf/zariski.hpp"

namespace acsurf {

namespace {

PlaneCurve line_z() { return make_curve(1, {{0, 0, 1, Rational(1)}}); }

PlaneCurve quadric_xz_yy() {
  return make_curve(2, {{1, 0, 1, Rational(1)}, {0, 2, 0, Rational(-1)}});
}

std::string join_marks(const std::vector<mpz_class>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

std::vector<mpz_class> sorted_copy(std::vector<mpz_class> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Packages a resolved pencil whose degenerate member is the anticanonical
// curve. The boundary decomposition and the classifier verdict are computed
// here; callers gate on the verdict.
ConstructedSurface package(PencilState st, bool twisted, std::optional<Rational> twist_q) {
  DivisorClass anti =
      DivisorClass(QVector(st.ambient.rank())) - st.ambient.canonical();
  MemberFiber mf = member_fiber_decomposition(st, anti);
  DynkinVerdict verdict = classify_affine_dynkin(mf.config);
  std::size_t h0 = linear_system_dim(3, st.cluster);
  return ConstructedSurface{std::move(st),     std::move(mf.config),
                            std::move(mf.multiplicities), std::move(anti),
                            std::move(verdict), h0,
                            twisted,            std::move(twist_q)};
}

// Depth of a cluster point: number of blow-ups separating it from the plane.
std::size_t cluster_depth(const Cluster& cl, std::size_t i) {
  std::size_t d = 0;
  while (!cl.points[i].is_root) {
    i = cl.points[i].parent;
    ++d;
  }
  return d;
}

}  // namespace

ConstructedSurface construct_e8(const Rational& a, const Rational& b) {
  Rational disc = Rational(4) * a * a * a + Rational(27) * b * b;
  if (disc.is_zero())
    throw std::invalid_argument(
        "the cubic y^2 z = x^3 + a x z^2 + b z^3 is singular: 4a^3 + 27b^2 = 0");
  PlaneCurve cubic = make_curve(3, {{0, 2, 1, Rational(1)},
                                    {3, 0, 0, Rational(-1)},
                                    {1, 0, 2, -a},
                                    {0, 0, 3, -b}});
  PlaneCurve g = line_z() * line_z() * line_z();
  PencilState st = resolve_pencil(make_pencil(cubic, g, {{line_z(), 3, "L"}}));
  ConstructedSurface s = package(std::move(st), false, std::nullopt);
  if (s.verdict.kind != DynkinVerdict::Kind::E_affine || s.verdict.index != 8)
    throw std::runtime_error("boundary of the cubic-plus-triple-line pencil is not the "
                             "expected one-branch affine diagram: " +
                             s.verdict.name());
  return s;
}

ConstructedSurface construct_d8(const PlaneCurve& m) {
  if (m.degree() != 1)
    throw std::invalid_argument("the scaling factor must be a linear form");
  PlaneCurve l = line_z(), q = quadric_xz_yy();
  PlaneCurve cubic = l * l * l + m * q;
  if (!is_smooth(cubic))
    throw std::invalid_argument("the cubic z^3 + M (xz - y^2) is singular for M = " +
                                m.str() + "; choose a different linear form");
  PencilState st =
      resolve_pencil(make_pencil(cubic, l * q, {{l, 1, "L"}, {q, 1, "Q"}}));
  ConstructedSurface s = package(std::move(st), false, std::nullopt);
  if (s.verdict.kind != DynkinVerdict::Kind::D_affine || s.verdict.index != 8)
    throw std::runtime_error("boundary of the pencil over the split member is not the "
                             "expected two-branch affine diagram: " +
                             s.verdict.name());
  return s;
}

const std::vector<PlaneCurve>& d8_linear_form_candidates() {
  static const std::vector<PlaneCurve> candidates = [] {
    auto form = [](long a, long b, long c) {
      std::vector<std::tuple<unsigned, unsigned, unsigned, Rational>> terms;
      if (a) terms.push_back({1, 0, 0, Rational(a)});
      if (b) terms.push_back({0, 1, 0, Rational(b)});
      if (c) terms.push_back({0, 0, 1, Rational(c)});
      return make_curve(1, terms);
    };
    return std::vector<PlaneCurve>{form(1, 0, 1),  form(1, 0, -1), form(1, 0, 2),
                                   form(1, 0, 0),  form(2, 0, 1),  form(1, 1, 1)};
  }();
  return candidates;
}

ConstructedSurface construct_d8() {
  std::string failures;
  for (const PlaneCurve& m : d8_linear_form_candidates()) {
    try {
      return construct_d8(m);
    } catch (const std::exception& e) {
      failures += std::string(failures.empty() ? "" : "; ") + m.str() + ": " + e.what();
    }
  }
  throw std::runtime_error("no candidate linear form produced a valid surface (" +
                           failures + ")");
}

ConstructedSurface twist_nontorsion(const ConstructedSurface& s, const Rational& q) {
  if (s.h0_antiK != 2)
    throw std::invalid_argument(
        "the surface does not carry a pencil of anticanonical curves to twist");

  // The section to move: the deepest exceptional line meeting the boundary
  // exactly once and still contractible. Root centers cannot move along a
  // blown-up line, so they are not candidates.
  const Cluster& cl = s.tower.cluster;
  std::optional<std::size_t> section;
  std::size_t best_depth = 0;
  for (std::size_t i = 0; i < s.tower.exceptional_classes.size(); ++i) {
    const DivisorClass& e = s.tower.exceptional_classes[i];
    if (intersect(s.tower.ambient, e, e) != Rational(-1)) continue;
    if (intersect(s.tower.ambient, s.boundary_class, e) != Rational(1)) continue;
    if (cl.points[i].is_root) continue;
    std::size_t d = cluster_depth(cl, i);
    if (!section || d >= best_depth) {
      section = i;
      best_depth = d;
    }
  }
  if (!section)
    throw std::runtime_error(
        "no movable exceptional curve meets the boundary exactly once");

  const ClusterPoint& old_center = cl.points[*section];
  std::size_t parent = old_center.parent;
  std::vector<Rational> excluded = exceptional_line_crossings(s.tower, parent);
  if (std::find(excluded.begin(), excluded.end(), q) != excluded.end()) {
    std::string list;
    for (const Rational& r : excluded) list += (list.empty() ? "" : ", ") + r.str();
    throw std::invalid_argument("q = " + q.str() +
                                " lies on the boundary or on the original center; "
                                "forbidden positions on this line: " +
                                list);
  }

  // Leaf surgery: drop the section's center, reindex, append the new one.
  Cluster moved;
  for (std::size_t i = 0; i < cl.points.size(); ++i) {
    if (i == *section) continue;
    ClusterPoint p = cl.points[i];
    if (!p.is_root && p.parent > *section) --p.parent;
    moved.points.push_back(std::move(p));
  }
  std::size_t new_parent = parent > *section ? parent - 1 : parent;
  moved.points.push_back(ClusterPoint{false, {}, new_parent, 'A', q, 1, "Q"});

  PencilState rep = resolve_prescribed(s.tower.f, s.tower.g, s.tower.members, moved);
  ConstructedSurface out = package(std::move(rep), true, q);
  if (out.verdict.kind != s.verdict.kind || out.verdict.index != s.verdict.index ||
      sorted_copy(out.marks) != sorted_copy(s.marks))
    throw std::runtime_error("moving the center to q = " + q.str() +
                             " changed the boundary configuration from " +
                             s.verdict.name() + " " + join_marks(s.marks) + " to " +
                             out.verdict.name() + " " + join_marks(out.marks));
  return out;
}

namespace {

// Runs checks in order; the first failure freezes the rest as skipped so a
// bad input flips exactly one report entry.
class CheckRunner {
 public:
  void run(const std::string& name,
           const std::function<std::pair<bool, std::string>()>& body) {
    if (stopped_) {
      report_.checks.push_back({name, "skipped", "not evaluated after an earlier failure"});
      return;
    }
    try {
      auto [ok, detail] = body();
      report_.checks.push_back({name, ok ? "passed" : "failed", detail});
      if (!ok) stopped_ = true;
    } catch (const std::exception& e) {
      report_.checks.push_back({name, "failed", e.what()});
      stopped_ = true;
    }
  }

  void skip(const std::string& name, const std::string& why) {
    report_.checks.push_back({name, "skipped", why});
  }

  bool stopped() const { return stopped_; }

  VerificationReport finish() {
    report_.overall = true;
    for (const auto& c : report_.checks)
      if (c.status == "failed") report_.overall = false;
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  bool stopped_ = false;
};

}  // namespace

VerificationReport verify_hypotheses(const HypothesisInput& in) {
  CheckRunner r;
  const SurfaceLattice& l = in.lattice;
  const CurveConfig& b = in.boundary;
  DivisorClass k = l.canonical();

  r.run("boundary is connected", [&]() -> std::pair<bool, std::string> {
    if (b.size() == 0) return {false, "no components"};
    return {is_connected(b), "dual graph on " + std::to_string(b.size()) + " nodes"};
  });

  r.run("no component is exceptional of the first kind",
        [&]() -> std::pair<bool, std::string> {
          auto idx = first_kind_exceptionals(b);
          if (idx.empty()) return {true, "no (-1)-curve of genus zero in the boundary"};
          std::string who;
          for (std::size_t i : idx)
            who += (who.empty() ? "" : ", ") + b.components()[i].label;
          return {false, "contractible components: " + who};
        });

  r.run("intersection matrix is negative semidefinite with primitive kernel marks",
        [&]() -> std::pair<bool, std::string> {
          SemidefReport rep = semidefiniteness_report(b);
          if (rep.kind != SemidefReport::Kind::semidefinite_with_generator)
            return {false, rep.kind == SemidefReport::Kind::negative_definite
                               ? "matrix is negative definite, kernel is trivial"
                               : rep.reason};
          for (const mpz_class& m : rep.generator)
            if (m <= 0) return {false, "kernel generator has a non-positive entry"};
          if (rep.generator != in.marks)
            return {false, "kernel generator " + join_marks(rep.generator) +
                               " differs from the recorded marks " + join_marks(in.marks)};
          mpz_class g = 0;
          for (const mpz_class& m : rep.generator) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
          if (g != 1) return {false, "marks are not primitive, gcd " + g.get_str()};
          return {true, "kernel marks " + join_marks(rep.generator) + ", gcd 1"};
        });

  r.run("every component has anticanonical degree zero",
        [&]() -> std::pair<bool, std::string> {
          for (const auto& c : b.components())
            if (!c.k_degree.is_zero())
              return {false, c.label + " has canonical degree " + c.k_degree.str()};
          return {true, "canonical degree zero on all " + std::to_string(b.size()) +
                            " components"};
        });

  r.run("marked components sum to the anticanonical class",
        [&]() -> std::pair<bool, std::string> {
          DivisorClass sum{QVector(l.rank())};
          for (std::size_t i = 0; i < b.size(); ++i) {
            if (!b.components()[i].cls)
              return {false, b.components()[i].label + " carries no lattice class"};
            sum = sum + Rational(in.marks[i]) * *b.components()[i].cls;
          }
          if (sum.coords != in.boundary_class.coords)
            return {false, "marked sum differs from the recorded boundary class"};
          DivisorClass anti = DivisorClass(QVector(l.rank())) - k;
          if (sum.coords != anti.coords)
            return {false, "boundary class differs from -K"};
          return {true, "sum of marked components equals -K"};
        });

  r.run("canonical class has self-intersection zero",
        [&]() -> std::pair<bool, std::string> {
          Rational k2 = intersect(l, k, k);
          return {k2.is_zero(), "K^2 = " + k2.str()};
        });

  r.run("lattice has rank ten", [&]() -> std::pair<bool, std::string> {
    return {l.rank() == 10, "rank " + std::to_string(l.rank())};
  });

  r.run("Noether identity holds", [&]() -> std::pair<bool, std::string> {
    NoetherReport rep = noether_check(l);
    return {rep.holds, "K^2 + (2 + rank) = " + rep.total.str()};
  });

  r.run("configuration is an affine D8 or E8 diagram",
        [&]() -> std::pair<bool, std::string> {
          DynkinVerdict v = classify_affine_dynkin(b);
          bool ok = (v.kind == DynkinVerdict::Kind::D_affine ||
                     v.kind == DynkinVerdict::Kind::E_affine) &&
                    v.index == 8;
          return {ok, v.kind == DynkinVerdict::Kind::none ? v.reason : v.name()};
        });

  r.run("boundary has exactly nine components",
        [&]() -> std::pair<bool, std::string> {
          return {b.size() == 9, std::to_string(b.size()) + " components"};
        });

  r.run("boundary divisor is its own positive part",
        [&]() -> std::pair<bool, std::string> {
          QVector d(b.size());
          for (std::size_t i = 0; i < b.size(); ++i) d[i] = Rational(in.marks[i]);
          ZariskiResult z = zariski_decompose(b, d);
          for (const Rational& n : z.negative_part)
            if (!n.is_zero()) return {false, "negative part is nonzero"};
          return {z.positive_part == d, "negative part vanishes"};
        });

  if (!in.cluster && !r.stopped()) {
    r.skip("anticanonical systems are one-dimensional",
           "no base point cluster supplied, dimension check not applicable");
  } else {
    r.run("anticanonical systems are one-dimensional",
          [&]() -> std::pair<bool, std::string> {
            std::string dims;
            bool ok = true;
            for (unsigned n = 1; n <= in.depth; ++n) {
              Cluster scaled = *in.cluster;
              for (auto& p : scaled.points) p.multiplicity *= n;
              std::size_t h0 = linear_system_dim(3 * n, scaled);
              dims += (dims.empty() ? "" : ", ") + std::to_string(h0);
              if (h0 != 1) ok = false;
            }
            return {ok, "h0 of curves of degree 3n through the n-fold cluster, n = 1.." +
                            std::to_string(in.depth) + ": " + dims};
          });
  }

  r.run("Euler characteristic of every boundary multiple is one",
        [&]() -> std::pair<bool, std::string> {
          for (unsigned n = 0; n <= in.depth; ++n) {
            Rational chi = euler_char(l, Rational(static_cast<long>(n)) * in.boundary_class);
            if (chi != Rational(1))
              return {false, "chi(n D) = " + chi.str() + " at n = " + std::to_string(n)};
          }
          return {true, "chi(n D) = 1 for n = 0.." + std::to_string(in.depth)};
        });

  return r.finish();
}

VerificationReport verify_hypotheses(const ConstructedSurface& s, unsigned depth) {
  return verify_hypotheses(HypothesisInput{s.tower.ambient, s.boundary, s.marks,
                                           s.boundary_class, s.tower.cluster, depth});
}

std::vector<SweepEntry> sweep_q(const ConstructedSurface& s, const std::vector<Rational>& qs,
                                unsigned depth) {
  std::vector<SweepEntry> out;
  out.reserve(qs.size());
  for (const Rational& q : qs) {
    try {
      ConstructedSurface t = twist_nontorsion(s, q);
      VerificationReport rep = verify_hypotheses(t, depth);
      out.push_back(SweepEntry{q, "", std::move(rep), t.kind(), t.marks,
                               t.boundary.gram(), "undecided"});
    } catch (const std::exception& e) {
      out.push_back(SweepEntry{q, e.what(), std::nullopt, "", {}, QMatrix(), "undecided"});
    }
  }
  return out;
}

}  // namespace acsurf
