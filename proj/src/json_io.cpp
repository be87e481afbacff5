#include "acsurf/json_io.hpp"

#include <stdexcept>
#include <utility>

#include "acsurf/linear_system.hpp"

namespace acsurf {

namespace {

// Readers funnel through these so schema violations carry the offending key.
const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array())
    throw std::invalid_argument(std::string("field \"") + key + "\" must be an array");
  return a;
}

unsigned uint_from(const Json& j, const char* what) {
  if (!j.is_number_unsigned())
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  return j.get<unsigned>();
}

Json poly2_json(const Poly2& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"exp", {e.first, e.second}}, {"coef", c.str()}});
  return Json{{"terms", std::move(terms)}};
}

Json divisor_json(const DivisorClass& d) { return qvector_json(d.coords); }

DivisorClass divisor_from(const Json& j) { return DivisorClass(qvector_from(j)); }

Json member_json(const MemberFactor& m) {
  return Json{{"curve", curve_json(m.curve)},
              {"multiplicity", m.multiplicity},
              {"label", m.label}};
}

MemberFactor member_from(const Json& j) {
  return MemberFactor{curve_from(field(j, "curve")),
                      uint_from(field(j, "multiplicity"), "member multiplicity"),
                      field(j, "label").get<std::string>()};
}

}  // namespace

Json rational_json(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational values must be strings");
  return Rational::parse(j.get<std::string>());
}

Json qvector_json(const QVector& v) {
  Json a = Json::array();
  for (const Rational& r : v) a.push_back(r.str());
  return a;
}

QVector qvector_from(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector values must be arrays");
  QVector v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(rational_from(e));
  return v;
}

Json qmatrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix qmatrix_from(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix values must be arrays of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = rational_from(row.at(k));
  }
  return m;
}

Json curve_json(const PlaneCurve& c) {
  Json terms = Json::array();
  for (const auto& [e, v] : c.terms())
    terms.push_back(Json{{"exp", {e[0], e[1], e[2]}}, {"coef", v.str()}});
  return Json{{"degree", c.degree()}, {"terms", std::move(terms)}};
}

PlaneCurve curve_from(const Json& j) {
  unsigned degree = uint_from(field(j, "degree"), "curve degree");
  std::vector<std::tuple<unsigned, unsigned, unsigned, Rational>> terms;
  for (const Json& t : array_field(j, "terms")) {
    const Json& e = array_field(t, "exp");
    if (e.size() != 3)
      throw std::invalid_argument("curve term exponents must have three entries");
    terms.push_back({uint_from(e.at(0), "exponent"), uint_from(e.at(1), "exponent"),
                     uint_from(e.at(2), "exponent"), rational_from(field(t, "coef"))});
  }
  return make_curve(degree, terms);
}

Json lattice_json(const SurfaceLattice& l) {
  Json history = Json::array();
  for (const BlowUpRecord& r : l.history())
    history.push_back(Json{{"center", r.center}, {"parent_chart", r.parent_chart}});
  return Json{{"basis", l.basis_labels()},
              {"canonical", divisor_json(l.canonical())},
              {"history", std::move(history)}};
}

SurfaceLattice lattice_from(const Json& j) {
  std::vector<std::string> labels;
  for (const Json& e : array_field(j, "basis")) labels.push_back(e.get<std::string>());
  DivisorClass canonical = divisor_from(field(j, "canonical"));
  std::vector<BlowUpRecord> history;
  for (const Json& e : array_field(j, "history"))
    history.push_back(BlowUpRecord{field(e, "center").get<std::string>(),
                                   field(e, "parent_chart").get<std::string>()});
  return SurfaceLattice(std::move(labels), std::move(canonical), std::move(history));
}

Json config_json(const CurveConfig& c) {
  Json comps = Json::array();
  for (const ConfigComponent& k : c.components()) {
    Json e{{"label", k.label}};
    if (k.cls) e["class"] = divisor_json(*k.cls);
    e["self_int"] = k.self_int.str();
    e["k_degree"] = k.k_degree.str();
    comps.push_back(std::move(e));
  }
  return Json{{"components", std::move(comps)}, {"gram", qmatrix_json(c.gram())}};
}

CurveConfig config_from(const Json& j) {
  std::vector<ConfigComponent> comps;
  for (const Json& e : array_field(j, "components")) {
    ConfigComponent k{field(e, "label").get<std::string>(), std::nullopt,
                      rational_from(field(e, "self_int")),
                      rational_from(field(e, "k_degree"))};
    if (e.contains("class")) k.cls = divisor_from(e.at("class"));
    comps.push_back(std::move(k));
  }
  return CurveConfig(std::move(comps), qmatrix_from(field(j, "gram")));
}

Json cluster_json(const Cluster& cl) {
  Json points = Json::array();
  for (const ClusterPoint& p : cl.points) {
    Json e{{"label", p.label}};
    if (p.is_root) {
      e["center"] = Json::array({p.proj[0].str(), p.proj[1].str(), p.proj[2].str()});
    } else {
      e["parent"] = p.parent;
      e["chart"] = std::string(1, p.chart);
      e["coord"] = p.coord.str();
    }
    e["multiplicity"] = p.multiplicity;
    points.push_back(std::move(e));
  }
  return Json{{"points", std::move(points)}};
}

Cluster cluster_from(const Json& j) {
  Cluster cl;
  for (const Json& e : array_field(j, "points")) {
    ClusterPoint p;
    p.label = field(e, "label").get<std::string>();
    p.multiplicity = uint_from(field(e, "multiplicity"), "cluster multiplicity");
    if (e.contains("center")) {
      const Json& c = e.at("center");
      if (!c.is_array() || c.size() != 3)
        throw std::invalid_argument("cluster centers must have three coordinates");
      p.is_root = true;
      p.proj = {rational_from(c.at(0)), rational_from(c.at(1)), rational_from(c.at(2))};
    } else {
      p.is_root = false;
      p.parent = field(e, "parent").get<std::size_t>();
      std::string chart = field(e, "chart").get<std::string>();
      if (chart != "A" && chart != "B")
        throw std::invalid_argument("cluster chart must be \"A\" or \"B\"");
      p.chart = chart[0];
      p.coord = rational_from(field(e, "coord"));
    }
    cl.points.push_back(std::move(p));
  }
  return cl;
}

Json zariski_json(const ZariskiResult& z, const CurveConfig& c) {
  Json support = Json::array();
  for (std::size_t i : z.negative_support) support.push_back(c.components()[i].label);
  return Json{{"P", qvector_json(z.positive_part)},
              {"N", qvector_json(z.negative_part)},
              {"support", std::move(support)}};
}

Json report_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const VerificationCheck& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  return Json{{"overall", r.overall}, {"checks", std::move(checks)}};
}

std::string report_text(const VerificationReport& r) {
  std::string out;
  for (const VerificationCheck& c : r.checks) {
    std::string tag = c.status == "passed" ? "PASS" : c.status == "failed" ? "FAIL" : "SKIP";
    out += tag + "  " + c.name;
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += "\n";
  }
  out += r.overall ? "overall: all hypotheses verified\n" : "overall: verification failed\n";
  return out;
}

Json seed_json(const PencilSeed& s) {
  Json members = Json::array();
  for (const MemberFactor& m : s.members) members.push_back(member_json(m));
  return Json{{"f", curve_json(s.f)}, {"g", curve_json(s.g)}, {"members", std::move(members)}};
}

PencilSeed seed_from(const Json& j) {
  PencilSeed s{curve_from(field(j, "f")), curve_from(field(j, "g")), {}};
  for (const Json& m : array_field(j, "members")) s.members.push_back(member_from(m));
  return s;
}

Json tower_json(const PencilState& st) {
  Json classes = Json::array();
  for (const DivisorClass& e : st.exceptional_classes) classes.push_back(divisor_json(e));
  Json member_classes = Json::array();
  for (const DivisorClass& m : st.member_classes) member_classes.push_back(divisor_json(m));
  Json charts = Json::array();
  for (const auto& [a, b] : st.frames)
    charts.push_back(Json{{"A", Json{{"f", poly2_json(a.f)}, {"g", poly2_json(a.g)}}},
                          {"B", Json{{"f", poly2_json(b.f)}, {"g", poly2_json(b.g)}}}});
  return Json{{"lattice", lattice_json(st.ambient)},
              {"cluster", cluster_json(st.cluster)},
              {"fiber", divisor_json(st.fiber)},
              {"member_classes", std::move(member_classes)},
              {"exceptional_classes", std::move(classes)},
              {"charts", std::move(charts)}};
}

Json surface_json(const ConstructedSurface& s) {
  Json marks = Json::array();
  for (const mpz_class& m : s.marks) marks.push_back(m.get_str());
  Json out{{"seed", seed_json(PencilSeed{s.tower.f, s.tower.g, s.tower.members})},
           {"cluster", cluster_json(s.tower.cluster)},
           {"lattice", lattice_json(s.tower.ambient)},
           {"boundary", config_json(s.boundary)},
           {"marks", std::move(marks)},
           {"boundary_class", divisor_json(s.boundary_class)},
           {"kind", s.kind()},
           {"h0_antiK", s.h0_antiK},
           {"twisted", s.twisted}};
  if (s.twist_q) out["twist_q"] = s.twist_q->str();
  return out;
}

ConstructedSurface surface_from(const Json& j) {
  PencilSeed seed = seed_from(field(j, "seed"));
  Cluster cl = cluster_from(field(j, "cluster"));
  PencilState st = resolve_prescribed(seed.f, seed.g, seed.members, cl);

  DivisorClass anti = DivisorClass(QVector(st.ambient.rank())) - st.ambient.canonical();
  MemberFiber mf = member_fiber_decomposition(st, anti);
  DynkinVerdict verdict = classify_affine_dynkin(mf.config);
  std::size_t h0 = linear_system_dim(3, st.cluster);

  bool twisted = field(j, "twisted").get<bool>();
  std::optional<Rational> twist_q;
  if (j.contains("twist_q")) twist_q = rational_from(j.at("twist_q"));
  ConstructedSurface s{std::move(st),      std::move(mf.config),
                       std::move(mf.multiplicities), std::move(anti),
                       std::move(verdict), h0,
                       twisted,            std::move(twist_q)};

  // The stored derived fields must agree with what the replay produced;
  // a mismatch means the file was edited inconsistently.
  auto audit = [](bool ok, const char* what) {
    if (!ok)
      throw std::invalid_argument(std::string("surface file is inconsistent with its "
                                              "replayed resolution: ") +
                                  what);
  };
  audit(lattice_json(s.tower.ambient) == field(j, "lattice"), "lattice");
  audit(config_json(s.boundary) == field(j, "boundary"), "boundary");
  Json marks = Json::array();
  for (const mpz_class& m : s.marks) marks.push_back(m.get_str());
  audit(marks == field(j, "marks"), "marks");
  audit(divisor_json(s.boundary_class) == field(j, "boundary_class"), "boundary class");
  audit(s.kind() == field(j, "kind").get<std::string>(), "kind");
  audit(s.h0_antiK == field(j, "h0_antiK").get<std::size_t>(), "h0_antiK");
  return s;
}

Json hypothesis_json(const HypothesisInput& in) {
  Json marks = Json::array();
  for (const mpz_class& m : in.marks) marks.push_back(m.get_str());
  Json out{{"lattice", lattice_json(in.lattice)},
           {"boundary", config_json(in.boundary)},
           {"marks", std::move(marks)},
           {"boundary_class", divisor_json(in.boundary_class)}};
  if (in.cluster) out["cluster"] = cluster_json(*in.cluster);
  out["depth"] = in.depth;
  return out;
}

HypothesisInput hypothesis_from(const Json& j) {
  HypothesisInput in{lattice_from(field(j, "lattice")), config_from(field(j, "boundary")),
                     {},  DivisorClass(QVector{}),
                     std::nullopt, 5};
  for (const Json& m : array_field(j, "marks")) {
    if (!m.is_string()) throw std::invalid_argument("marks must be integer strings");
    in.marks.push_back(mpz_class(m.get<std::string>()));
  }
  in.boundary_class = divisor_from(field(j, "boundary_class"));
  if (j.contains("cluster")) in.cluster = cluster_from(j.at("cluster"));
  if (j.contains("depth")) in.depth = uint_from(j.at("depth"), "depth");
  return in;
}

Json sweep_json(const std::vector<SweepEntry>& entries) {
  Json out = Json::array();
  for (const SweepEntry& e : entries) {
    Json row{{"q", e.q.str()}, {"error", e.error}};
    if (e.report) row["report"] = report_json(*e.report);
    row["kind"] = e.kind;
    Json marks = Json::array();
    for (const mpz_class& m : e.marks) marks.push_back(m.get_str());
    row["marks"] = std::move(marks);
    row["boundary_gram"] = qmatrix_json(e.boundary_gram);
    row["isomorphism_class"] = e.isomorphism_class;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace acsurf
