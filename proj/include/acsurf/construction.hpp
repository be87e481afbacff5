#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "acsurf/curve_config.hpp"
#include "acsurf/lattice.hpp"
#include "acsurf/pencil.hpp"

namespace acsurf {

// A rational surface carrying an effective anticanonical divisor with zero
// self-intersection, realized as a resolved cubic pencil. The tower keeps the
// generators, the registered member factors, the base point cluster, and the
// blown-up lattice, so the surface can be rebuilt or perturbed by replaying
// the cluster.
struct ConstructedSurface {
  PencilState tower;
  CurveConfig boundary;          // components of the degenerate member
  std::vector<mpz_class> marks;  // multiplicities of those components
  DivisorClass boundary_class;   // marks-weighted sum, equal to -K
  DynkinVerdict verdict;         // affine Dynkin classification of the boundary
  std::size_t h0_antiK = 0;      // curves of degree 3 through the cluster
  bool twisted = false;
  std::optional<Rational> twist_q;

  const SurfaceLattice& lattice() const { return tower.ambient; }
  std::string kind() const { return verdict.name(); }
};

// Blows up the base points of the pencil spanned by the smooth cubic
// y^2 z = x^3 + a x z^2 + b z^3 and the triple line z^3. The boundary is the
// degenerate member supported on the line and the blown-up lines; its
// configuration is the one-branch affine diagram on nine nodes.
ConstructedSurface construct_e8(const Rational& a, const Rational& b);

// Same pipeline for the pencil spanned by z^3 + M (xz - y^2) and the split
// member z (xz - y^2), with M a linear form making the cubic smooth. The
// boundary configuration is the two-branch affine diagram on nine nodes.
ConstructedSurface construct_d8(const PlaneCurve& m);

// Tries a documented list of linear forms and returns the first that
// produces a valid surface. The list starts with x + z.
ConstructedSurface construct_d8();

// The exceptional lines fixed by construct_d8's fallback constructor.
const std::vector<PlaneCurve>& d8_linear_form_candidates();

// Moves the deepest section's base point to position q on the same blown-up
// line. The pencil then keeps an unassigned base point, so the anticanonical
// curve becomes the unique cubic through the cluster. q must avoid the
// original center and every crossing with the boundary; the boundary kind
// and marks must survive the move, otherwise the call fails.
ConstructedSurface twist_nontorsion(const ConstructedSurface& s, const Rational& q);

struct VerificationCheck {
  std::string name;
  std::string status;  // "passed", "failed", or "skipped"
  std::string detail;
};

// Ordered checks with early exit: every check after the first failure is
// reported as skipped, so a failing input flips exactly one entry.
struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool overall = false;
};

// The data the hypothesis battery consumes. The cluster is optional: without
// it the linear-system dimension check cannot run and is reported skipped.
struct HypothesisInput {
  SurfaceLattice lattice;
  CurveConfig boundary;
  std::vector<mpz_class> marks;
  DivisorClass boundary_class;
  std::optional<Cluster> cluster;
  unsigned depth = 5;  // anticanonical multiples tested: n = 1..depth
};

VerificationReport verify_hypotheses(const HypothesisInput& in);
VerificationReport verify_hypotheses(const ConstructedSurface& s, unsigned depth = 5);

// One twisted surface per parameter. Failures are captured per entry; the
// isomorphism class across entries is deliberately left undecided.
struct SweepEntry {
  Rational q;
  std::string error;  // empty on success
  std::optional<VerificationReport> report;
  std::string kind;
  std::vector<mpz_class> marks;
  QMatrix boundary_gram;
  std::string isomorphism_class = "undecided";
};

std::vector<SweepEntry> sweep_q(const ConstructedSurface& s, const std::vector<Rational>& qs,
                                unsigned depth = 5);

}  // namespace acsurf
