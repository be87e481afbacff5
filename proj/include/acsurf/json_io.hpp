#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "acsurf/construction.hpp"
#include "acsurf/curve_config.hpp"
#include "acsurf/lattice.hpp"
#include "acsurf/pencil.hpp"
#include "acsurf/poly.hpp"
#include "acsurf/qmatrix.hpp"
#include "acsurf/zariski.hpp"

namespace acsurf {

// Key order is fixed so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

// Rationals travel as "p" or "p/q" strings, vectors and matrices as (nested)
// arrays of them. Readers throw std::invalid_argument on schema violations.
Json rational_json(const Rational& r);
Rational rational_from(const Json& j);
Json qvector_json(const QVector& v);
QVector qvector_from(const Json& j);
Json qmatrix_json(const QMatrix& m);
QMatrix qmatrix_from(const Json& j);

Json curve_json(const PlaneCurve& c);
PlaneCurve curve_from(const Json& j);

Json lattice_json(const SurfaceLattice& l);
SurfaceLattice lattice_from(const Json& j);

Json config_json(const CurveConfig& c);
CurveConfig config_from(const Json& j);

Json cluster_json(const Cluster& cl);
Cluster cluster_from(const Json& j);

// Decomposition with the negative support reported by component label.
Json zariski_json(const ZariskiResult& z, const CurveConfig& c);

Json report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

// Pencil seeds: the two generators plus the registered member factors.
struct PencilSeed {
  PlaneCurve f, g;
  std::vector<MemberFactor> members;
};
Json seed_json(const PencilSeed& s);
PencilSeed seed_from(const Json& j);

// Audit dump of a resolved pencil: cluster, fiber, classes, and the local
// equations of both generators in each blow-up chart.
Json tower_json(const PencilState& st);

// Surfaces store their seeds and cluster; reading replays the resolution and
// cross-checks every stored derived field against the replay.
Json surface_json(const ConstructedSurface& s);
ConstructedSurface surface_from(const Json& j);

// Verification inputs assembled from parts, for configurations that do not
// come from a resolved pencil. The cluster is optional.
Json hypothesis_json(const HypothesisInput& in);
HypothesisInput hypothesis_from(const Json& j);

Json sweep_json(const std::vector<SweepEntry>& entries);

}  // namespace acsurf
