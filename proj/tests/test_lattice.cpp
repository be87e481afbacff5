#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "acsurf/lattice.hpp"
#include "test_support.hpp"

using namespace acsurf;
namespace ts = testsupport;

namespace {

SurfaceLattice blown_up_plane(std::size_t points) {
  SurfaceLattice l = SurfaceLattice::plane();
  for (std::size_t i = 0; i < points; ++i)
    l = blow_up(l, "p" + std::to_string(i + 1));
  return l;
}

DivisorClass cls(const SurfaceLattice& l, std::vector<long> coords) {
  QVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  if (v.size() != l.rank()) throw std::logic_error("test class has wrong rank");
  return DivisorClass(std::move(v));
}

}  // namespace

TEST_CASE("plane lattice: rank one, canonical -3H, K^2 = 9") {
  SurfaceLattice p = SurfaceLattice::plane();
  CHECK(p.rank() == 1);
  CHECK(p.basis_labels() == std::vector<std::string>{"H"});
  CHECK(intersect(p, p.canonical(), p.canonical()) == Rational(9));
  auto n = noether_check(p);
  CHECK(n.holds);
  CHECK(n.k_squared == Rational(9));
}

TEST_CASE("blow-ups extend the form orthogonally and track the canonical class") {
  SurfaceLattice l = blown_up_plane(9);
  CHECK(l.rank() == 10);
  CHECK(l.basis_labels()[9] == "E9");
  CHECK(intersect(l, l.canonical(), l.canonical()) == Rational(0));

  DivisorClass h = l.basis_class(0), e1 = l.basis_class(1), e2 = l.basis_class(2);
  CHECK(intersect(l, h, h) == Rational(1));
  CHECK(intersect(l, e1, e1) == Rational(-1));
  CHECK(intersect(l, h, e1) == Rational(0));
  CHECK(intersect(l, e1, e2) == Rational(0));
  CHECK(intersect(l, l.canonical(), e1) == Rational(-1));
  CHECK(intersect(l, l.canonical(), h) == Rational(-3));

  // K^2 + rank = 10 along the whole chain.
  SurfaceLattice step = SurfaceLattice::plane();
  for (int i = 0; i < 12; ++i) {
    CHECK(intersect(step, step.canonical(), step.canonical()) +
              Rational(static_cast<long>(step.rank())) ==
          Rational(10));
    CHECK(noether_check(step).holds);
    step = blow_up(step, "p");
  }
}

TEST_CASE("intersection form is symmetric and bilinear") {
  SurfaceLattice l = blown_up_plane(5);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    QVector a(l.rank()), b(l.rank()), c(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) {
      a[i] = Rational(entry(ts::rng()));
      b[i] = Rational(entry(ts::rng()));
      c[i] = Rational(entry(ts::rng()));
    }
    DivisorClass da(a), db(b), dc(c);
    CHECK(intersect(l, da, db) == intersect(l, db, da));
    CHECK(intersect(l, da + db, dc) == intersect(l, da, dc) + intersect(l, db, dc));
    CHECK(intersect(l, Rational(3) * da, db) == Rational(3) * intersect(l, da, db));
  }
}

TEST_CASE("intersect rejects classes from a different rank") {
  SurfaceLattice l = blown_up_plane(2);
  DivisorClass short_class(QVector{Rational(1)});
  CHECK_THROWS_AS(intersect(l, short_class, l.canonical()), std::invalid_argument);
}

TEST_CASE("euler characteristic of pinned classes") {
  SurfaceLattice p = SurfaceLattice::plane();
  CHECK(euler_char(p, cls(p, {0})) == Rational(1));
  CHECK(euler_char(p, cls(p, {1})) == Rational(3));   // lines in the plane
  CHECK(euler_char(p, cls(p, {3})) == Rational(10));  // cubics in the plane

  SurfaceLattice l = blown_up_plane(9);
  DivisorClass anti_k = Rational(-1) * l.canonical();
  CHECK(euler_char(l, anti_k) == Rational(1));
  for (long n = 0; n <= 5; ++n)
    CHECK(euler_char(l, Rational(n) * anti_k) == Rational(1));

  QVector half(l.rank());
  half[0] = Rational(1, 2);
  CHECK_THROWS_AS(euler_char(l, DivisorClass(half)), std::invalid_argument);
}

TEST_CASE("euler characteristic is symmetric under d -> K - d") {
  SurfaceLattice l = blown_up_plane(7);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    QVector v(l.rank());
    for (auto& x : v) x = Rational(entry(ts::rng()));
    DivisorClass d(v);
    CHECK(euler_char(l, d) == euler_char(l, l.canonical() - d));
  }
}

TEST_CASE("noether check fails on a corrupted lattice") {
  // Rank 10 but canonical forced to -3H: K^2 = 9 and the total comes out 21.
  std::vector<std::string> labels = blown_up_plane(9).basis_labels();
  QVector k(10);
  k[0] = Rational(-3);
  std::vector<BlowUpRecord> hist(9, BlowUpRecord{"p", ""});
  SurfaceLattice corrupted(labels, DivisorClass(k), hist);
  auto n = noether_check(corrupted);
  CHECK(!n.holds);
  CHECK(n.k_squared == Rational(9));
  CHECK(n.total == Rational(21));
}

TEST_CASE("blow-down of the last exceptional class undoes the blow-up") {
  SurfaceLattice l9 = blown_up_plane(9);
  auto res = blow_down(l9, l9.basis_class(9));
  CHECK(res.surface.rank() == 9);
  CHECK(intersect(res.surface, res.surface.canonical(), res.surface.canonical()) ==
        Rational(1));
  CHECK(res.surface == blown_up_plane(8));

  // pushforward respects self-intersection bookkeeping: D'^2 = D^2 + (D.e)^2.
  QVector fib(10, Rational(-1));
  fib[0] = Rational(3);
  for (std::size_t i = 1; i <= 9; ++i) fib[i] = Rational(-1);
  DivisorClass d(fib);
  // d here is 3H - E1 - ... - E9 written in basis coordinates.
  DivisorClass d2 = res.map.pushforward(d);
  CHECK(intersect(l9, d, d) == Rational(0));
  CHECK(intersect(res.surface, d2, d2) == Rational(1));
}

TEST_CASE("blow-down of a middle exceptional relabels the tail") {
  SurfaceLattice l3 = SurfaceLattice::plane();
  l3 = blow_up(l3, "a");
  l3 = blow_up(l3, "b");
  auto res = blow_down(l3, l3.basis_class(1));
  CHECK(res.surface.rank() == 2);
  CHECK(res.surface.basis_labels() == std::vector<std::string>{"H", "E1"});
  REQUIRE(res.surface.history().size() == 1);
  CHECK(res.surface.history()[0].center == "b");
}

TEST_CASE("pushforward then pullback is the identity on the contracted lattice") {
  SurfaceLattice l = blown_up_plane(4);
  auto res = blow_down(l, l.basis_class(2));
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    QVector v(res.surface.rank());
    for (auto& x : v) x = Rational(entry(ts::rng()));
    DivisorClass d(v);
    CHECK(res.map.pushforward(res.map.pullback(d)) == d);
    // Pullback preserves the pairing against pulled-back classes.
    QVector w(res.surface.rank());
    for (auto& x : w) x = Rational(entry(ts::rng()));
    DivisorClass d2(w);
    CHECK(intersect(l, res.map.pullback(d), res.map.pullback(d2)) ==
          intersect(res.surface, d, d2));
  }
}

TEST_CASE("blow-down rejects classes that are not exceptional basis vectors") {
  SurfaceLattice l = blown_up_plane(3);
  CHECK_THROWS_AS(blow_down(l, l.basis_class(0)), std::invalid_argument);  // H
  CHECK_THROWS_AS(blow_down(l, Rational(2) * l.basis_class(1)), std::invalid_argument);
  DivisorClass general = l.basis_class(0) - l.basis_class(1) - l.basis_class(2);
  // general is a (-1)-class but not basis aligned.
  CHECK(intersect(l, general, general) == Rational(-1));
  CHECK_THROWS_AS(blow_down(l, general), std::invalid_argument);
  CHECK_THROWS_AS(blow_down(l, Rational(-1) * l.basis_class(1)), std::invalid_argument);
}

TEST_CASE("lattice raw constructor validates shapes") {
  CHECK_THROWS_AS(SurfaceLattice({}, DivisorClass(QVector{}), {}), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceLattice({"H"}, DivisorClass(QVector{Rational(1), Rational(2)}), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SurfaceLattice({"H", "E1"}, DivisorClass(QVector{Rational(1), Rational(2)}),
                                 {}),
                  std::invalid_argument);
}
