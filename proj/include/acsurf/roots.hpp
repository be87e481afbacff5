#pragma once

#include <utility>
#include <vector>

#include "acsurf/poly.hpp"

namespace acsurf {

// Rational roots of a univariate polynomial with multiplicities, sorted in
// increasing order. residual is the cofactor left once every rational root
// has been divided out; it is nonconstant exactly when irrational (or
// complex) roots remain.
struct RationalRoots {
  std::vector<std::pair<Rational, unsigned>> roots;
  Poly1 residual;
  bool fully_split() const { return residual.is_constant(); }
};

// Complete search over the candidates allowed by the leading and constant
// integer coefficients. The input must be nonzero.
RationalRoots rational_roots(const Poly1& p);

}  // namespace acsurf
