#pragma once

#include <cstddef>

#include "acsurf/pencil.hpp"

namespace acsurf {

// Dimension of the vector space of degree-d plane curves whose virtual
// transforms vanish to the assigned multiplicity at every cluster point.
// Conditions are assembled by substituting the blow-up charts along the
// cluster tree, so infinitely near points impose exactly the right linear
// constraints on the coefficients.
std::size_t linear_system_dim(unsigned degree, const Cluster& cl);

// Whether a concrete curve meets every vanishing condition of the cluster.
// The transform carried into child points is divided by the assigned
// multiplicity of the parent, matching linear_system_dim's conditions.
bool satisfies_cluster(const PlaneCurve& curve, const Cluster& cl);

}  // namespace acsurf
