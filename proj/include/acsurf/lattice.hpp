#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "acsurf/qmatrix.hpp"
#include "acsurf/rational.hpp"

namespace acsurf {

// Divisor class as a coordinate vector over a lattice basis. Honest divisors
// have integral entries; rational entries appear in intermediate results.
struct DivisorClass {
  QVector coords;

  DivisorClass() = default;
  explicit DivisorClass(QVector c) : coords(std::move(c)) {}
  explicit DivisorClass(std::size_t rank) : coords(rank) {}

  std::size_t rank() const { return coords.size(); }
  bool is_integral() const;

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.coords == b.coords;
  }
  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(const Rational& s, const DivisorClass& a);
};

struct BlowUpRecord {
  std::string center;
  std::string parent_chart;
  friend bool operator==(const BlowUpRecord&, const BlowUpRecord&) = default;
};

// Intersection lattice of a rational surface obtained from the plane by a
// sequence of point blow-ups. Basis: hyperplane class H, then one exceptional
// class per blow-up; the form is diag(1, -1, ..., -1). Immutable.
class SurfaceLattice {
 public:
  // Raw constructor, used by deserialisation and by tests that need lattices
  // violating derived identities. Validates shapes only.
  SurfaceLattice(std::vector<std::string> labels, DivisorClass canonical,
                 std::vector<BlowUpRecord> history);

  static SurfaceLattice plane();

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const DivisorClass& canonical() const { return canonical_; }
  const std::vector<BlowUpRecord>& history() const { return history_; }
  QMatrix gram() const;

  // Basis vector helpers: index 0 is H, index i >= 1 is the i-th exceptional.
  DivisorClass basis_class(std::size_t index) const;

  friend bool operator==(const SurfaceLattice& a, const SurfaceLattice& b) {
    return a.labels_ == b.labels_ && a.canonical_ == b.canonical_ &&
           a.history_ == b.history_;
  }

 private:
  std::vector<std::string> labels_;
  DivisorClass canonical_;
  std::vector<BlowUpRecord> history_;
};

SurfaceLattice blow_up(const SurfaceLattice& l, const std::string& center,
                       const std::string& parent_chart = "");

// Pushforward/pullback pair for a single contraction. Pushforward drops the
// contracted coordinate; pullback inserts a zero there.
struct BlowDownMap {
  std::size_t dropped_index = 0;
  DivisorClass pushforward(const DivisorClass& d) const;
  DivisorClass pullback(const DivisorClass& d) const;
};

struct BlowDownResult {
  SurfaceLattice surface;
  BlowDownMap map;
};

// Contracts a class that is literally one of the exceptional basis vectors
// (the basis is relabelled afterwards). General (-1)-classes are rejected.
BlowDownResult blow_down(const SurfaceLattice& l, const DivisorClass& e);

Rational intersect(const SurfaceLattice& l, const DivisorClass& a, const DivisorClass& b);

// Riemann-Roch Euler characteristic 1 + (d.d - d.K)/2 for integral d.
Rational euler_char(const SurfaceLattice& l, const DivisorClass& d);

struct NoetherReport {
  Rational k_squared;
  std::size_t rank = 0;
  Rational total;  // K^2 + (2 + rank)
  bool holds = false;
};

NoetherReport noether_check(const SurfaceLattice& l);

}  // namespace acsurf
