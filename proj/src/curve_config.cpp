#include "acsurf/curve_config.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace acsurf {

CurveConfig::CurveConfig(std::vector<ConfigComponent> components, QMatrix gram,
                         std::optional<SurfaceLattice> ambient)
    : components_(std::move(components)), gram_(std::move(gram)), ambient_(std::move(ambient)) {
  std::size_t n = components_.size();
  if (gram_.rows() != n || gram_.cols() != n)
    throw std::invalid_argument("gram matrix size does not match component count");
  if (!gram_.is_symmetric()) throw std::invalid_argument("gram matrix must be symmetric");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_.at(i, i) != components_[i].self_int)
      throw std::invalid_argument("gram diagonal disagrees with a component self-intersection");
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& w = gram_.at(i, j);
      if (w.sign() < 0 || !w.is_integer())
        throw std::invalid_argument(
            "off-diagonal intersection numbers must be non-negative integers");
    }
  }
  if (ambient_) {
    const SurfaceLattice& l = *ambient_;
    for (std::size_t i = 0; i < n; ++i) {
      if (!components_[i].cls) continue;
      const DivisorClass& ci = *components_[i].cls;
      if (ci.rank() != l.rank())
        throw std::invalid_argument("component class rank disagrees with ambient lattice");
      if (intersect(l, ci, ci) != components_[i].self_int)
        throw std::invalid_argument("component class disagrees with stored self-intersection");
      if (intersect(l, l.canonical(), ci) != components_[i].k_degree)
        throw std::invalid_argument("component class disagrees with stored canonical degree");
      for (std::size_t j = 0; j < n; ++j) {
        if (!components_[j].cls) continue;
        if (intersect(l, ci, *components_[j].cls) != gram_.at(i, j))
          throw std::invalid_argument("component classes disagree with the gram matrix");
      }
    }
  }
}

bool is_connected(const CurveConfig& c) {
  std::size_t n = c.size();
  if (n == 0) throw std::invalid_argument("connectivity of an empty configuration");
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> work;
  work.push(0);
  seen[0] = true;
  std::size_t visited = 1;
  while (!work.empty()) {
    std::size_t i = work.front();
    work.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || i == j || c.gram().at(i, j).sign() <= 0) continue;
      seen[j] = true;
      ++visited;
      work.push(j);
    }
  }
  return visited == n;
}

SemidefReport semidefiniteness_report(const CurveConfig& c) {
  SemidefReport r;
  switch (definiteness(c.gram())) {
    case Definiteness::negative_definite:
      r.kind = SemidefReport::Kind::negative_definite;
      return r;
    case Definiteness::indefinite_or_positive:
      r.kind = SemidefReport::Kind::violates;
      r.reason = "intersection matrix is not negative semidefinite";
      return r;
    case Definiteness::negative_semidefinite_singular:
      break;
  }
  auto kb = kernel_basis(c.gram());
  if (kb.size() != 1) {
    r.kind = SemidefReport::Kind::violates;
    r.reason = "kernel dimension is " + std::to_string(kb.size()) + ", expected 1";
    return r;
  }
  r.kind = SemidefReport::Kind::semidefinite_with_generator;
  r.generator = primitive_integer_generator(kb[0]);
  return r;
}

Rational arithmetic_genus(const CurveConfig& c, std::size_t i) {
  const ConfigComponent& comp = c.component(i);
  return Rational(1) + (comp.self_int + comp.k_degree) / Rational(2);
}

std::vector<std::size_t> first_kind_exceptionals(const CurveConfig& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.component(i).self_int == Rational(-1) && c.component(i).k_degree == Rational(-1))
      out.push_back(i);
  }
  return out;
}

DualGraph dual_graph(const CurveConfig& c) {
  DualGraph g;
  for (const auto& comp : c.components()) g.nodes.push_back(comp.label);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c.gram().at(i, j).sign() > 0)
        g.edges.push_back({i, j, c.gram().at(i, j).num()});
  return g;
}

std::string DynkinVerdict::name() const {
  switch (kind) {
    case Kind::A_affine: return "A_affine(" + std::to_string(index) + ")";
    case Kind::D_affine: return "D_affine(" + std::to_string(index) + ")";
    case Kind::E_affine: return "E_affine(" + std::to_string(index) + ")";
    case Kind::none: return "none";
  }
  return "none";
}

namespace {

DynkinVerdict fail(const std::string& reason) {
  DynkinVerdict v;
  v.reason = reason;
  return v;
}

}  // namespace

DynkinVerdict classify_affine_dynkin(const CurveConfig& c) {
  std::size_t n = c.size();
  if (n == 0) return fail("empty configuration");
  for (std::size_t i = 0; i < n; ++i) {
    if (c.component(i).self_int != Rational(-2))
      return fail("component " + c.component(i).label + " has self-intersection != -2");
    if (arithmetic_genus(c, i) != Rational(0))
      return fail("component " + c.component(i).label + " has arithmetic genus != 0");
  }
  if (!is_connected(c)) return fail("configuration is not connected");

  SemidefReport sd = semidefiniteness_report(c);
  if (sd.kind == SemidefReport::Kind::negative_definite)
    return fail("intersection matrix is negative definite (finite type)");
  if (sd.kind == SemidefReport::Kind::violates) return fail(sd.reason);
  for (const auto& m : sd.generator)
    if (m <= 0) return fail("kernel generator is not strictly positive");

  DualGraph g = dual_graph(c);
  std::vector<std::size_t> degree(n, 0);
  bool heavy_edge = false;
  for (const auto& e : g.edges) {
    ++degree[e.a];
    ++degree[e.b];
    if (e.weight > 1) heavy_edge = true;
  }

  DynkinVerdict v;
  v.marks = sd.generator;

  if (heavy_edge) {
    // The only admissible multiple bond is the two-node cycle.
    if (n == 2 && g.edges.size() == 1 && g.edges[0].weight == 2) {
      v.kind = DynkinVerdict::Kind::A_affine;
      v.index = 1;
      return v;
    }
    return fail("edge weight above 1 outside the two-node cycle");
  }

  bool all_degree_two = std::all_of(degree.begin(), degree.end(),
                                    [](std::size_t d) { return d == 2; });
  if (all_degree_two && g.edges.size() == n && n >= 3) {
    v.kind = DynkinVerdict::Kind::A_affine;
    v.index = static_cast<int>(n) - 1;
    return v;
  }

  if (g.edges.size() != n - 1) return fail("dual graph is neither a cycle nor a tree");

  std::vector<std::size_t> leaves, branch3, branch4;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] == 1) leaves.push_back(i);
    else if (degree[i] == 3) branch3.push_back(i);
    else if (degree[i] == 4) branch4.push_back(i);
    else if (degree[i] != 2) return fail("dual graph has a node of degree > 4");
  }

  auto adjacent = [&](std::size_t a, std::size_t b) {
    return c.gram().at(a, b).sign() > 0;
  };

  if (branch4.size() == 1 && branch3.empty() && leaves.size() == 4 && n == 5) {
    for (std::size_t leaf : leaves)
      if (!adjacent(branch4[0], leaf)) return fail("degree-4 node is not a star centre");
    v.kind = DynkinVerdict::Kind::D_affine;
    v.index = 4;
    return v;
  }

  if (branch3.size() == 2 && branch4.empty() && leaves.size() == 4) {
    // Two-branch tree: each branch node must carry exactly two leaves.
    for (std::size_t b : branch3) {
      std::size_t leaf_neighbours = 0;
      for (std::size_t leaf : leaves)
        if (adjacent(b, leaf)) ++leaf_neighbours;
      if (leaf_neighbours != 2) return fail("branch node does not carry two leaves");
    }
    v.kind = DynkinVerdict::Kind::D_affine;
    v.index = static_cast<int>(n) - 1;
    return v;
  }

  if (branch3.size() == 1 && branch4.empty() && leaves.size() == 3) {
    // One-branch tree: read off the three arm lengths.
    std::vector<std::size_t> arms;
    for (std::size_t start = 0; start < n; ++start) {
      if (!adjacent(branch3[0], start)) continue;
      std::size_t len = 1, prev = branch3[0], cur = start;
      while (degree[cur] == 2) {
        std::size_t next = n;
        for (std::size_t j = 0; j < n; ++j)
          if (j != prev && adjacent(cur, j)) { next = j; break; }
        if (next == n) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms == std::vector<std::size_t>{2, 2, 2} && n == 7) {
      v.kind = DynkinVerdict::Kind::E_affine;
      v.index = 6;
      return v;
    }
    if (arms == std::vector<std::size_t>{1, 3, 3} && n == 8) {
      v.kind = DynkinVerdict::Kind::E_affine;
      v.index = 7;
      return v;
    }
    if (arms == std::vector<std::size_t>{1, 2, 5} && n == 9) {
      v.kind = DynkinVerdict::Kind::E_affine;
      v.index = 8;
      return v;
    }
    return fail("one-branch tree with arm lengths outside the E series");
  }

  return fail("dual graph shape matches no extended Dynkin diagram");
}

std::string to_dot(const CurveConfig& c, const std::vector<mpz_class>* marks) {
  std::ostringstream out;
  out << "graph config {\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << "  \"" << c.component(i).label << "\" [label=\"" << c.component(i).label
        << " (s2=" << c.component(i).self_int.str();
    if (marks && i < marks->size()) out << ", mult=" << (*marks)[i].get_str();
    out << ")\"];\n";
  }
  for (const auto& e : dual_graph(c).edges) {
    out << "  \"" << c.component(e.a).label << "\" -- \"" << c.component(e.b).label << "\"";
    if (e.weight > 1) out << " [label=\"" << e.weight.get_str() << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace acsurf
