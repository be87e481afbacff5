#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "acsurf/curve_config.hpp"
#include "acsurf/lattice.hpp"
#include "acsurf/poly.hpp"

namespace acsurf {

// One point of a base cluster. Root points are rational points of the plane;
// every other point lies on the exceptional line of an earlier entry, located
// either by a rational coordinate in the first blow-up chart or as the single
// point of the line outside that chart.
struct ClusterPoint {
  bool is_root = true;
  std::array<Rational, 3> proj{};  // root points, primitive integer representative
  std::size_t parent = 0;          // index of the entry whose line carries this point
  char chart = 'A';                // 'A': coord below on the line; 'B': the far point
  Rational coord;                  // chart-A coordinate on the exceptional line
  unsigned multiplicity = 1;       // assigned vanishing order
  std::string label;

  friend bool operator==(const ClusterPoint&, const ClusterPoint&) = default;
};

// Ordered cluster: parents always precede their children.
struct Cluster {
  std::vector<ClusterPoint> points;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

// Structural checks: parent indices precede children, multiplicities are
// positive, no two entries name the same location. Throws invalid_argument.
void validate_cluster(const Cluster& c);

// Affine chart of the plane containing a projective point: 'z' when the last
// coordinate is nonzero, else 'y', else 'x'; and the point's coordinates
// within that chart.
char root_chart(const std::array<Rational, 3>& p);
std::pair<Rational, Rational> root_affine(const std::array<Rational, 3>& p);

// Scales a projective triple to coprime integers with the first nonzero
// coordinate positive. Throws on the zero triple.
std::array<Rational, 3> normalize_proj(const std::array<Rational, 3>& p);

// One irreducible factor of a distinguished pencil member, with its exponent.
struct MemberFactor {
  PlaneCurve curve;
  unsigned multiplicity = 1;
  std::string label;
};

// Chart-local data carried along the resolution: the two generators (divided
// by their common vanishing order along each exceptional line), the tracked
// member factors, and local equations of exceptional lines visible in the
// chart (each divided by its own order, so they stay strict transforms).
struct LocalFrame {
  Poly2 f, g;
  std::vector<Poly2> member_eqs;
  std::vector<std::pair<std::size_t, Poly2>> exceptional_eqs;
};

// A base point awaiting blow-up: its frame is translated so the point sits at
// the origin, and record carries the cluster entry it will become.
struct PendingSite {
  LocalFrame frame;
  ClusterPoint record;
};

// Resolution state of a pencil of plane curves. Value type: operations
// return new states and never mutate their input.
struct PencilState {
  PlaneCurve f, g;
  std::vector<MemberFactor> members;

  SurfaceLattice ambient;
  DivisorClass fiber;                             // pullback of a member minus base orders
  Cluster cluster;                                // blown-up points, in blow-up order
  std::vector<DivisorClass> member_classes;       // strict-transform classes, parallel to members
  std::vector<DivisorClass> exceptional_classes;  // strict transforms of the lines, parallel to cluster
  std::vector<std::pair<LocalFrame, LocalFrame>> frames;  // per blown point: both chart frames
  std::vector<PendingSite> pending;               // next base point first

  bool resolved() const { return pending.empty(); }
};

// Builds the initial state: validates the generators (equal degree, not
// proportional, no common component), certifies the member factorisation
// (degrees add up, each factor certifiably irreducible, product lies in the
// pencil), and seeds pending with the rational base points of the pencil.
// Throws runtime_error mentioning "irrational base point" when the base
// locus is not rational over Q.
PencilState make_pencil(const PlaneCurve& f, const PlaneCurve& g,
                        std::vector<MemberFactor> member = {});

// The current base points. Fresh states list the plane base points; after
// blow-ups these are the points still awaiting their own blow-up.
std::vector<ClusterPoint> pencil_base_points(const PencilState& st);

// Blows up one pending base point (the first by default): extends the
// lattice, updates the fiber and all tracked classes, and pushes the base
// points discovered on the new exceptional line.
PencilState blow_up_base_point(const PencilState& st, std::size_t pending_index = 0);

// Runs blow_up_base_point until no base points remain. On return the fiber
// class has self-intersection zero.
PencilState resolve_pencil(PencilState st);

// Replays a prescribed cluster instead of discovering base points: blows up
// exactly the given points in order, tracking classes the same way. The
// generators need not vanish at the prescribed points; recorded
// multiplicities come from the cluster, while fiber bookkeeping keeps the
// honest common vanishing orders.
PencilState resolve_prescribed(const PlaneCurve& f, const PlaneCurve& g,
                               std::vector<MemberFactor> member, const Cluster& target);

Rational fiber_self_intersection(const PencilState& st);

// Components of the total transform of the registered degenerate member:
// strict transforms of its factors plus every exceptional line appearing
// with positive coefficient, as a curve configuration. multiplicities give
// the coefficient of each component, in component order; the weighted sum of
// component classes equals the fiber class exactly.
struct MemberFiber {
  CurveConfig config;
  std::vector<mpz_class> multiplicities;
};

MemberFiber degenerate_member_config(const PencilState& st);

// Same decomposition against an arbitrary target class instead of the fiber;
// used when the blown-up surface carries a distinguished effective class
// that is not the pullback of a pencil member.
MemberFiber member_fiber_decomposition(const PencilState& st, const DivisorClass& target);

// Chart-A coordinates on the exceptional line of the given blown point where
// any tracked curve (generator, member factor, other exceptional line) meets
// it, including later blown-up child points. Sorted, deduplicated. Used to
// keep new points off existing components.
std::vector<Rational> exceptional_line_crossings(const PencilState& st, std::size_t point_index);

}  // namespace acsurf
