#pragma once

#include <vector>

#include "acsurf/curve_config.hpp"

namespace acsurf {

// Splitting d = P + N of a divisor supported on a configuration. All vectors
// are coefficient vectors over the components, in component order.
struct ZariskiResult {
  QVector positive_part;
  QVector negative_part;
  std::vector<std::size_t> negative_support;  // ascending; entries of N there are > 0
};

// True iff the divisor with coefficient vector d meets every component of the
// configuration non-negatively. Nefness here is relative: it is only tested
// against the listed components, the model carries no other curves.
bool is_nef_within(const CurveConfig& c, const QVector& d);

// Zariski decomposition relative to the configuration. Requires d >= 0
// entrywise and d != 0. The result satisfies, exactly:
//   positive_part + negative_part = d
//   negative_part >= 0, zero outside negative_support
//   Gram restricted to negative_support is negative definite
//   P.C_j = 0 on negative_support, P.C_i >= 0 for every component
// Throws std::runtime_error("no Zariski decomposition within configuration")
// when the support block stops being negative definite, which signals a
// positive-square class inside the configuration.
ZariskiResult zariski_decompose(const CurveConfig& c, const QVector& d);

}  // namespace acsurf
