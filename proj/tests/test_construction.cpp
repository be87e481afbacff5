#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "acsurf/construction.hpp"
#include "acsurf/linear_system.hpp"
#include "acsurf/poly.hpp"
#include "test_support.hpp"

using namespace acsurf;

namespace {

std::vector<mpz_class> sorted_marks(std::vector<mpz_class> v) {
  std::sort(v.begin(), v.end());
  return v;
}

mpz_class marks_gcd(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& m : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
  return g;
}

SurfaceLattice nine_blowups() {
  SurfaceLattice l = SurfaceLattice::plane();
  for (int i = 1; i <= 9; ++i) l = blow_up(l, "p" + std::to_string(i));
  return l;
}

// components from classes, with self-intersections and canonical degrees
// computed in the ambient lattice
CurveConfig config_from_classes(const SurfaceLattice& l,
                                const std::vector<DivisorClass>& classes) {
  std::vector<ConfigComponent> comps;
  QMatrix gram(classes.size(), classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    comps.push_back(ConfigComponent{"C" + std::to_string(i + 1), classes[i],
                                    intersect(l, classes[i], classes[i]),
                                    intersect(l, l.canonical(), classes[i])});
    for (std::size_t j = 0; j < classes.size(); ++j)
      gram.at(i, j) = intersect(l, classes[i], classes[j]);
  }
  return CurveConfig(std::move(comps), std::move(gram), l);
}

DivisorClass basis_vec(std::size_t rank, std::initializer_list<std::pair<std::size_t, long>> entries) {
  QVector v(rank);
  for (auto [i, c] : entries) v[i] = Rational(c);
  return DivisorClass(std::move(v));
}

void check_surface_battery(const ConstructedSurface& s) {
  CHECK(s.lattice().rank() == 10);
  CHECK(intersect(s.lattice(), s.boundary_class, s.boundary_class).is_zero());
  DivisorClass anti =
      DivisorClass(QVector(10)) - s.lattice().canonical();
  CHECK(s.boundary_class.coords == anti.coords);
  REQUIRE(s.boundary.size() == 9);
  CHECK(marks_gcd(s.marks) == 1);
  for (std::size_t i = 0; i < 9; ++i) {
    const auto& c = s.boundary.components()[i];
    CHECK(c.self_int == Rational(-2));
    CHECK(c.k_degree.is_zero());
    REQUIRE(c.cls.has_value());
    CHECK(intersect(s.lattice(), s.boundary_class, *c.cls).is_zero());
  }
  // marks-weighted component sum reproduces the boundary class
  DivisorClass sum{QVector(10)};
  for (std::size_t i = 0; i < 9; ++i)
    sum = sum + Rational(s.marks[i]) * *s.boundary.components()[i].cls;
  CHECK(sum.coords == s.boundary_class.coords);
}

}  // namespace

TEST_CASE("one-branch surface from the cubic and the triple line") {
  ConstructedSurface s = construct_e8(Rational(0), Rational(1));
  check_surface_battery(s);
  CHECK(s.kind() == "E_affine(8)");
  CHECK(s.marks == std::vector<mpz_class>{3, 2, 4, 6, 5, 4, 3, 2, 1});
  CHECK(s.h0_antiK == 2);
  CHECK_FALSE(s.twisted);
  CHECK_FALSE(s.twist_q.has_value());
  CHECK(s.tower.cluster.points.size() == 9);

  // a different smooth parameter pair yields the same structure
  ConstructedSurface t = construct_e8(Rational(-1), Rational(0));
  check_surface_battery(t);
  CHECK(t.kind() == "E_affine(8)");
  CHECK(sorted_marks(t.marks) == sorted_marks(s.marks));
  CHECK(t.h0_antiK == 2);

  ConstructedSurface u = construct_e8(Rational(1), Rational(1));
  CHECK(u.kind() == "E_affine(8)");
  CHECK(u.h0_antiK == 2);
}

TEST_CASE("singular cubics are rejected with the discriminant witness") {
  CHECK_THROWS_AS(construct_e8(Rational(0), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(construct_e8(Rational(-3), Rational(2)), std::invalid_argument);
  try {
    construct_e8(Rational(-3), Rational(2));
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("4a^3 + 27b^2") != std::string::npos);
  }
}

TEST_CASE("two-branch surface from the split member") {
  ConstructedSurface s = construct_d8();
  check_surface_battery(s);
  CHECK(s.kind() == "D_affine(8)");
  CHECK(sorted_marks(s.marks) ==
        std::vector<mpz_class>{1, 1, 1, 1, 2, 2, 2, 2, 2});
  CHECK(s.h0_antiK == 2);
  CHECK(s.tower.members.size() == 2);

  // the default is the first candidate of the documented list
  ConstructedSurface via_m = construct_d8(d8_linear_form_candidates().front());
  CHECK(via_m.kind() == s.kind());
  CHECK(via_m.marks == s.marks);
  CHECK(via_m.tower.cluster == s.tower.cluster);

  // M = z gives the split cubic z (z^2 + xz - y^2)
  CHECK_THROWS_AS(construct_d8(make_curve(1, {{0, 0, 1, Rational(1)}})),
                  std::invalid_argument);
  // quadratic input is not a linear form
  CHECK_THROWS_AS(construct_d8(make_curve(2, {{0, 0, 2, Rational(1)}})),
                  std::invalid_argument);
}

TEST_CASE("twisting the section center kills the second anticanonical curve") {
  ConstructedSurface s = construct_e8(Rational(0), Rational(1));
  ConstructedSurface t = twist_nontorsion(s, Rational(1));
  check_surface_battery(t);
  CHECK(t.twisted);
  CHECK(t.twist_q == Rational(1));
  CHECK(t.h0_antiK == 1);
  CHECK(t.kind() == s.kind());
  CHECK(sorted_marks(t.marks) == sorted_marks(s.marks));

  // the moved center sits on the same blown-up line as the original
  const ClusterPoint& moved = t.tower.cluster.points.back();
  const ClusterPoint& original = s.tower.cluster.points.back();
  CHECK_FALSE(moved.is_root);
  CHECK(moved.parent == original.parent);
  CHECK(moved.coord == Rational(1));
  CHECK(original.coord == Rational(0));

  // restoring the original center returns the pencil
  Cluster restored = t.tower.cluster;
  restored.points.back() = original;
  CHECK(restored == s.tower.cluster);
  CHECK(linear_system_dim(3, restored) == 2);

  // denominators are fine as parameters
  ConstructedSurface t2 = twist_nontorsion(s, Rational(-2, 3));
  CHECK(t2.h0_antiK == 1);
}

TEST_CASE("twist parameter is validated against the forbidden positions") {
  ConstructedSurface s = construct_e8(Rational(0), Rational(1));
  // q = 0 is the original center
  CHECK_THROWS_AS(twist_nontorsion(s, Rational(0)), std::invalid_argument);
  try {
    twist_nontorsion(s, Rational(0));
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("forbidden") != std::string::npos);
  }
  // a twisted surface has no pencil left to twist
  ConstructedSurface t = twist_nontorsion(s, Rational(2));
  CHECK_THROWS_AS(twist_nontorsion(t, Rational(3)), std::invalid_argument);
}

TEST_CASE("twisting the two-branch surface works the same way") {
  ConstructedSurface s = construct_d8();
  ConstructedSurface t = twist_nontorsion(s, Rational(-3));
  check_surface_battery(t);
  CHECK(t.h0_antiK == 1);
  CHECK(t.kind() == "D_affine(8)");
  CHECK(sorted_marks(t.marks) == sorted_marks(s.marks));
  // the moved point continues the longer chain, not the lone simple center
  CHECK(t.tower.cluster.points.back().parent == 7);
  CHECK_THROWS_AS(twist_nontorsion(s, Rational(0)), std::invalid_argument);
}

TEST_CASE("hypothesis battery passes on twisted surfaces end to end") {
  ConstructedSurface t = twist_nontorsion(construct_e8(Rational(0), Rational(1)),
                                          Rational(1));
  VerificationReport rep = verify_hypotheses(t);
  CHECK(rep.overall);
  REQUIRE(rep.checks.size() == 13);
  for (const auto& c : rep.checks) CHECK(c.status == "passed");

  VerificationReport rep8 = verify_hypotheses(twist_nontorsion(construct_d8(), Rational(1)));
  CHECK(rep8.overall);
  for (const auto& c : rep8.checks) CHECK(c.status == "passed");
}

TEST_CASE("untwisted surfaces fail exactly the dimension check") {
  ConstructedSurface s = construct_e8(Rational(0), Rational(1));
  VerificationReport rep = verify_hypotheses(s);
  CHECK_FALSE(rep.overall);
  REQUIRE(rep.checks.size() == 13);
  for (std::size_t i = 0; i < 11; ++i) CHECK(rep.checks[i].status == "passed");
  CHECK(rep.checks[11].name == "anticanonical systems are one-dimensional");
  CHECK(rep.checks[11].status == "failed");
  CHECK(rep.checks[11].detail.find("2") != std::string::npos);
  CHECK(rep.checks[12].status == "skipped");
}

TEST_CASE("a cycle of minus-two curves fails exactly the diagram check") {
  SurfaceLattice l = nine_blowups();
  std::vector<DivisorClass> classes;
  for (std::size_t i = 1; i <= 8; ++i)
    classes.push_back(basis_vec(10, {{i, 1}, {i + 1, -1}}));
  classes.push_back(basis_vec(10, {{0, 3},
                                   {1, -2},
                                   {2, -1},
                                   {3, -1},
                                   {4, -1},
                                   {5, -1},
                                   {6, -1},
                                   {7, -1},
                                   {8, -1}}));
  CurveConfig cycle = config_from_classes(l, classes);
  DivisorClass anti = DivisorClass(QVector(10)) - l.canonical();
  VerificationReport rep = verify_hypotheses(HypothesisInput{
      l, cycle, std::vector<mpz_class>(9, 1), anti, std::nullopt, 5});
  CHECK_FALSE(rep.overall);
  REQUIRE(rep.checks.size() == 13);
  for (std::size_t i = 0; i < 8; ++i) CHECK(rep.checks[i].status == "passed");
  CHECK(rep.checks[8].name == "configuration is an affine D8 or E8 diagram");
  CHECK(rep.checks[8].status == "failed");
  std::size_t failures = 0;
  for (const auto& c : rep.checks)
    if (c.status == "failed") ++failures;
  CHECK(failures == 1);
}

TEST_CASE("a contractible component fails exactly the first-kind check") {
  SurfaceLattice l = nine_blowups();
  std::vector<DivisorClass> classes;
  for (std::size_t i = 1; i <= 8; ++i)
    classes.push_back(basis_vec(10, {{i, 1}, {i + 1, -1}}));
  classes.push_back(basis_vec(10, {{9, 1}}));
  CurveConfig chain = config_from_classes(l, classes);
  DivisorClass target = basis_vec(10, {{1, 1}});  // marks-agnostic placeholder
  VerificationReport rep = verify_hypotheses(HypothesisInput{
      l, chain, std::vector<mpz_class>(9, 1), target, std::nullopt, 5});
  CHECK_FALSE(rep.overall);
  CHECK(rep.checks[0].status == "passed");
  CHECK(rep.checks[1].name == "no component is exceptional of the first kind");
  CHECK(rep.checks[1].status == "failed");
  CHECK(rep.checks[1].detail.find("C9") != std::string::npos);
  std::size_t failures = 0;
  for (const auto& c : rep.checks)
    if (c.status == "failed") ++failures;
  CHECK(failures == 1);
}

TEST_CASE("parameter sweep produces identical fingerprints") {
  ConstructedSurface s = construct_e8(Rational(0), Rational(1));
  std::vector<Rational> qs = {Rational(1), Rational(-1), Rational(2), Rational(0)};
  std::vector<SweepEntry> entries = sweep_q(s, qs);
  REQUIRE(entries.size() == 4);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(entries[i].error.empty());
    REQUIRE(entries[i].report.has_value());
    CHECK(entries[i].report->overall);
    CHECK(entries[i].kind == "E_affine(8)");
    CHECK(entries[i].marks == entries[0].marks);
    CHECK(entries[i].boundary_gram == entries[0].boundary_gram);
    CHECK(entries[i].isomorphism_class == "undecided");
  }
  // q = 0 names the original center and is reported as a per-entry error
  CHECK_FALSE(entries[3].error.empty());
  CHECK_FALSE(entries[3].report.has_value());
  CHECK(entries[3].isomorphism_class == "undecided");

  CHECK(sweep_q(s, {}).empty());
}
