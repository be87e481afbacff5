#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acsurf/lattice.hpp"
#include "acsurf/qmatrix.hpp"

namespace acsurf {

struct ConfigComponent {
  std::string label;
  std::optional<DivisorClass> cls;  // present when the ambient lattice is known
  Rational self_int;
  Rational k_degree;

  friend bool operator==(const ConfigComponent&, const ConfigComponent&) = default;
};

// A finite configuration of irreducible curves on a surface: labels, optional
// classes, and the pairwise intersection matrix. Off-diagonal entries are
// non-negative integers (distinct irreducible curves meet non-negatively);
// the diagonal carries each component's self-intersection.
class CurveConfig {
 public:
  CurveConfig(std::vector<ConfigComponent> components, QMatrix gram,
              std::optional<SurfaceLattice> ambient = std::nullopt);

  std::size_t size() const { return components_.size(); }
  const std::vector<ConfigComponent>& components() const { return components_; }
  const ConfigComponent& component(std::size_t i) const { return components_.at(i); }
  const QMatrix& gram() const { return gram_; }
  const std::optional<SurfaceLattice>& ambient() const { return ambient_; }

  friend bool operator==(const CurveConfig& a, const CurveConfig& b) {
    return a.components_ == b.components_ && a.gram_ == b.gram_;
  }

 private:
  std::vector<ConfigComponent> components_;
  QMatrix gram_;
  std::optional<SurfaceLattice> ambient_;
};

bool is_connected(const CurveConfig& c);

struct SemidefReport {
  enum class Kind { negative_definite, semidefinite_with_generator, violates };
  Kind kind = Kind::violates;
  std::vector<mpz_class> generator;  // primitive kernel generator, component order
  std::string reason;                // populated when kind == violates
};

// Exact classification of the intersection matrix. A one-dimensional kernel
// yields the primitive generator; a kernel of higher dimension or an
// indefinite form is reported as a hypothesis violation.
SemidefReport semidefiniteness_report(const CurveConfig& c);

// Adjunction: p_a = 1 + (E^2 + K.E)/2 from the stored numbers.
Rational arithmetic_genus(const CurveConfig& c, std::size_t i);

// Indices of components with E^2 = -1, K.E = -1 (hence p_a = 0).
std::vector<std::size_t> first_kind_exceptionals(const CurveConfig& c);

struct DualGraph {
  struct Edge {
    std::size_t a, b;  // a < b
    mpz_class weight;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<std::string> nodes;
  std::vector<Edge> edges;  // lexicographic by (a, b)
};

DualGraph dual_graph(const CurveConfig& c);

struct DynkinVerdict {
  enum class Kind { none, A_affine, D_affine, E_affine };
  Kind kind = Kind::none;
  int index = 0;                 // the n of A~n / D~n / E~n
  std::vector<mpz_class> marks;  // kernel marks in component order; empty if none
  std::string reason;            // failure diagnostics when kind == none

  std::string name() const;
};

// Recognises extended Dynkin configurations: every component a (-2)-curve of
// arithmetic genus zero, intersection matrix negative semidefinite of corank
// one with strictly positive primitive kernel, and the dual graph of cycle,
// two-branch, or one-branch tree shape with unit edge weights (the two-node
// cycle is carried by a single weight-2 edge).
DynkinVerdict classify_affine_dynkin(const CurveConfig& c);

// Graphviz rendering of the dual graph. Node labels carry self-intersections
// and, when given, the multiplicity of each component.
std::string to_dot(const CurveConfig& c, const std::vector<mpz_class>* marks = nullptr);

}  // namespace acsurf
