#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "acsurf/json_io.hpp"

namespace {

using namespace acsurf;

// Relative output paths land in ACSURF_OUT_DIR when that variable is set;
// absolute paths and unset environments are used as-is.
std::filesystem::path resolve_out(const std::string& path) {
  std::filesystem::path p(path);
  const char* dir = std::getenv("ACSURF_OUT_DIR");
  if (dir && *dir && p.is_relative()) return std::filesystem::path(dir) / p;
  return p;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  Json j;
  in >> j;
  return j;
}

void write_file(const std::string& path, const std::string& body) {
  std::filesystem::path p = resolve_out(path);
  std::ofstream out(p);
  if (!out) throw std::invalid_argument("cannot open output file: " + p.string());
  out << body;
}

void write_json(const std::string& path, const Json& j) {
  write_file(path, j.dump(2) + "\n");
}

std::vector<Rational> rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

PlaneCurve linear_form(const std::string& csv) {
  std::vector<Rational> c = rational_list(csv);
  if (c.size() != 3)
    throw std::invalid_argument("a linear form needs three coefficients: x,y,z");
  return make_curve(1, {{1, 0, 0, c[0]}, {0, 1, 0, c[1]}, {0, 0, 1, c[2]}});
}

// Configurations arrive either bare or as the boundary of a larger document.
CurveConfig config_from_document(const Json& doc) {
  if (doc.contains("components")) return config_from(doc);
  if (doc.contains("boundary")) return config_from(doc.at("boundary"));
  throw std::invalid_argument("document carries neither a configuration nor a boundary");
}

void emit_report(const VerificationReport& rep, const std::string& report_path) {
  std::cout << report_text(rep);
  if (!report_path.empty()) write_json(report_path, report_json(rep));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for anticanonical rational surfaces"};
  app.require_subcommand(1);
  int status = 0;

  // construct: run a named pipeline, optionally twist, write surface + report.
  auto* construct = app.add_subcommand("construct", "build a surface from a named pencil");
  std::string family, con_a = "0", con_b = "1", con_m, con_q, con_out, con_report;
  construct->add_option("family", family, "pencil family: e8 or d8")
      ->required()
      ->check(CLI::IsMember({"e8", "d8"}));
  construct->add_option("--a", con_a, "cubic coefficient a (e8 family)");
  construct->add_option("--b", con_b, "cubic coefficient b (e8 family)");
  construct->add_option("--m", con_m, "linear form x,y,z coefficients (d8 family)");
  construct->add_option("--twist-q", con_q, "move the section's base point to this coordinate");
  construct->add_option("--out", con_out, "surface output path")->required();
  construct->add_option("--report", con_report, "verification report output path");
  construct->callback([&] {
    ConstructedSurface s =
        family == "e8"
            ? construct_e8(Rational::parse(con_a), Rational::parse(con_b))
            : (con_m.empty() ? construct_d8() : construct_d8(linear_form(con_m)));
    if (!con_q.empty()) s = twist_nontorsion(s, Rational::parse(con_q));
    write_json(con_out, surface_json(s));
    emit_report(verify_hypotheses(s), con_report);
  });

  // twist: re-run a stored surface's resolution with the section's base point moved.
  auto* twist = app.add_subcommand("twist", "move a stored surface's section base point");
  std::string tw_surface, tw_q, tw_out, tw_report;
  twist->add_option("--surface", tw_surface, "surface input path")->required();
  twist->add_option("--q", tw_q, "new coordinate on the section's line")->required();
  twist->add_option("--out", tw_out, "surface output path")->required();
  twist->add_option("--report", tw_report, "verification report output path");
  twist->callback([&] {
    ConstructedSurface t =
        twist_nontorsion(surface_from(load_json(tw_surface)), Rational::parse(tw_q));
    write_json(tw_out, surface_json(t));
    emit_report(verify_hypotheses(t), tw_report);
  });

  // verify: run the hypothesis battery on a surface or an assembled input.
  auto* verify = app.add_subcommand("verify", "check the boundary hypotheses of a document");
  std::string ve_surface, ve_report;
  unsigned ve_depth = 5;
  verify->add_option("--surface", ve_surface, "surface or hypothesis input path")->required();
  auto* ve_depth_opt =
      verify->add_option("--depth", ve_depth, "anticanonical multiples tested (default 5)");
  verify->add_option("--report", ve_report, "verification report output path");
  verify->callback([&] {
    Json doc = load_json(ve_surface);
    VerificationReport rep;
    if (doc.contains("seed")) {
      rep = verify_hypotheses(surface_from(doc), ve_depth);
    } else {
      HypothesisInput in = hypothesis_from(doc);
      if (ve_depth_opt->count() > 0) in.depth = ve_depth;
      rep = verify_hypotheses(in);
    }
    emit_report(rep, ve_report);
    status = rep.overall ? 0 : 1;
  });

  // classify: name the affine Dynkin type of a configuration, optionally as DOT.
  auto* classify = app.add_subcommand("classify", "classify a curve configuration");
  std::string cl_config, cl_dot;
  classify->add_option("--config", cl_config, "configuration input path")->required();
  classify->add_option("--dot", cl_dot, "dual-graph DOT output path");
  classify->callback([&] {
    CurveConfig c = config_from_document(load_json(cl_config));
    DynkinVerdict v = classify_affine_dynkin(c);
    std::cout << v.name() << "\n";
    if (!cl_dot.empty()) write_file(cl_dot, to_dot(c, v.marks.empty() ? nullptr : &v.marks));
  });

  // zariski: decompose a divisor supported on a configuration.
  auto* zariski = app.add_subcommand("zariski", "Zariski-decompose a divisor on a configuration");
  std::string za_config, za_d, za_out;
  zariski->add_option("--config", za_config, "configuration input path")->required();
  zariski->add_option("--d", za_d, "divisor coefficients, comma-separated")->required();
  zariski->add_option("--out", za_out, "decomposition output path");
  zariski->callback([&] {
    CurveConfig c = config_from_document(load_json(za_config));
    ZariskiResult z = zariski_decompose(c, rational_list(za_d));
    Json j = zariski_json(z, c);
    std::cout << j.dump(2) << "\n";
    if (!za_out.empty()) write_json(za_out, j);
  });

  // resolve: eliminate the base points of a stored pencil and dump the tower.
  auto* resolve = app.add_subcommand("resolve", "resolve the base points of a pencil seed");
  std::string re_pencil, re_out;
  resolve->add_option("--pencil", re_pencil, "pencil seed input path")->required();
  resolve->add_option("--out", re_out, "tower output path")->required();
  resolve->callback([&] {
    PencilSeed seed = seed_from(load_json(re_pencil));
    PencilState st = resolve_pencil(make_pencil(seed.f, seed.g, seed.members));
    write_json(re_out, tower_json(st));
    std::cout << "resolved after " << st.cluster.points.size()
              << " blow-ups; fiber self-intersection "
              << fiber_self_intersection(st).str() << "\n";
  });

  // sweep: twist one stored surface across several parameters.
  auto* sweep = app.add_subcommand("sweep", "twist a stored surface across several parameters");
  std::string sw_surface, sw_q, sw_out;
  unsigned sw_depth = 5;
  sweep->add_option("--surface", sw_surface, "surface input path")->required();
  sweep->add_option("--q", sw_q, "twist parameters, comma-separated")->required();
  sweep->add_option("--out", sw_out, "sweep output path");
  sweep->add_option("--depth", sw_depth, "anticanonical multiples tested (default 5)");
  sweep->callback([&] {
    ConstructedSurface s = surface_from(load_json(sw_surface));
    std::vector<SweepEntry> entries = sweep_q(s, rational_list(sw_q), sw_depth);
    for (const SweepEntry& e : entries) {
      std::cout << "q = " << e.q.str() << ": ";
      if (!e.error.empty())
        std::cout << "error: " << e.error << "\n";
      else
        std::cout << e.kind << ", " << e.isomorphism_class << "\n";
    }
    if (!sw_out.empty()) write_json(sw_out, sweep_json(entries));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
