// Batch front-end: enumeration tables, cover homology runs, splitting data,
// quadric residuals and the verification suite.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "covers/errors.hpp"
#include "covers/homology.hpp"
#include "covers/polyhedron.hpp"
#include "covers/presentation.hpp"
#include "covers/quadrics.hpp"
#include "covers/small_cover.hpp"
#include "covers/surgery.hpp"
#include "covers/triangulation.hpp"
#include "covers/verification.hpp"
#include "json.hpp"

using namespace covers;
using nlohmann::json;

namespace {

struct RunReport {
  std::string command;
  json parameters = json::object();
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::pair<std::string, bool>> checks;
  double wall_seconds = 0;

  bool ok() const {
    for (const auto& [k, v] : checks)
      if (!v) return false;
    return true;
  }

  // json/csv forms carry no wall time so identical runs emit identical bytes.
  std::string to_json() const {
    json j;
    j["command"] = command;
    j["parameters"] = parameters;
    json rj = json::object();
    for (const auto& [k, v] : rows) rj[k] = v;
    j["results"] = rj;
    json cj = json::object();
    for (const auto& [k, v] : checks) cj[k] = v;
    j["checks"] = cj;
    return j.dump(2) + "\n";
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << k << ',' << v << '\n';
    for (const auto& [k, v] : checks) os << k << ',' << (v ? "pass" : "fail") << '\n';
    return os.str();
  }

  std::string to_human() const {
    std::ostringstream os;
    os << "== " << command << " ==\n";
    for (const auto& [k, v] : rows) os << "  " << k << ": " << v << '\n';
    for (const auto& [k, v] : checks)
      os << "  [" << (v ? "pass" : "FAIL") << "] " << k << '\n';
    os << "  (" << wall_seconds << " s)\n";
    return os.str();
  }

  std::string render(const std::string& format) const {
    if (format == "json") return to_json();
    if (format == "csv") return to_csv();
    return to_human();
  }
};

std::string label_string(const Label& l) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < l.n(); ++i) os << (i ? "," : "") << l.entries[i];
  os << ')';
  return os.str();
}

std::string code_string(const Code& c) {
  std::ostringstream os;
  for (size_t i = 0; i < c.arcs.size(); ++i)
    os << (i ? " " : "") << c.arcs[i].first << '-' << c.arcs[i].second;
  return os.str();
}

json class_table(int n, bool dihedral) {
  json arr = json::array();
  auto reps = rotation_class_representatives(n, dihedral);
  for (size_t k = 0; k < reps.size(); ++k) {
    Pyramitoid pyr = pyramitoid_from_triangulation(reps[k]);
    json jc;
    jc["class"] = k;
    jc["orbit_size"] = reps[k].orbit_size(dihedral);
    jc["label"] = label_string(pyr.label().canonical());
    jc["code"] = code_string(code_of(pyr));
    arr.push_back(jc);
  }
  return arr;
}

// Memoized class tables, keyed by n, under COVERS_CACHE_DIR.
json class_table_cached(int n, bool dihedral) {
  const char* dir = std::getenv("COVERS_CACHE_DIR");
  if (!dir) return class_table(n, dihedral);
  std::filesystem::path path =
      std::filesystem::path(dir) /
      ("classes_" + std::to_string(n) + (dihedral ? "_dihedral" : "") + ".json");
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    json j;
    in >> j;
    return j;
  }
  json j = class_table(n, dihedral);
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  out << j.dump(2);
  return j;
}

std::vector<std::pair<int, int>> parse_equator(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos)
      throw CLI::ValidationError("--equator", "expected pairs like 0-3,0-1,...");
    out.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
  }
  return out;
}

std::string homology_string(const std::vector<HomologyGroup>& h) {
  std::ostringstream os;
  for (size_t k = 0; k < h.size(); ++k) {
    if (k) os << ", ";
    os << "H" << k << "=Z^" << h[k].free_rank;
    for (const auto& t : h[k].torsion) os << "+Z/" << t;
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"small covers of pyramitoids: enumeration, homology, splittings"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  std::string fixtures_dir;
  app.add_option("--format", format, "human|json|csv")->capture_default_str();
  app.add_option("--fixtures-dir", fixtures_dir,
                 "directory against which bare fixture names resolve");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "count pyramitoid classes");
  int enum_n = 6;
  bool dihedral = false;
  std::string csv_out, dot_out;
  enumerate->add_option("n", enum_n, "basis size")->required();
  enumerate->add_flag("--dihedral", dihedral, "count up to reflections too");
  enumerate->add_option("--csv", csv_out, "write the (n, catalan, N_n) table here");

  // cover
  auto* cover = app.add_subcommand("cover", "build a reflection cover");
  std::string fixture, mirrors = "all";
  bool with_homology = false;
  cover->add_option("fixture", fixture, "polyhedron JSON file")->required();
  std::string dump_out;
  cover->add_option("--mirrors", mirrors, "all|dome")->capture_default_str();
  cover->add_flag("--homology", with_homology, "compute integral homology");
  cover->add_option("--dot", dot_out, "write the defining graph as DOT");
  cover->add_option("--dump", dump_out, "write the cell/boundary tables here");

  // bipyramitoid
  auto* bip = app.add_subcommand("bipyramitoid", "split along an equator");
  std::string bip_fixture, equator_text, heegaard_out, pi1_out;
  bip->add_option("fixture", bip_fixture, "polyhedron JSON file")->required();
  bip->add_option("--equator", equator_text, "crossed edges a-b,c-d,...")->required();
  bip->add_option("--heegaard-json", heegaard_out, "dump splitting data here");
  bip->add_option("--pi1", pi1_out, "write the splitting presentation here");

  // quadrics
  auto* quad = app.add_subcommand("quadrics", "verify the coaxial quadric system");
  int quad_n = 5, samples = 100;
  uint64_t seed = 1;
  double tol = 1e-9;
  std::string quad_csv;
  quad->add_option("n", quad_n, "polygon size")->required();
  quad->add_option("--samples", samples)->capture_default_str();
  quad->add_option("--seed", seed)->capture_default_str();
  quad->add_option("--tol", tol)->capture_default_str();
  quad->add_option("--csv", quad_csv, "write per-n residual statistics here");

  // verify
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  std::string level = "fast";
  verify->add_option("--level", level, "fast|full")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  auto resolve = [&](const std::string& path) {
    if (fixtures_dir.empty() || std::filesystem::exists(path)) return path;
    return (std::filesystem::path(fixtures_dir) / path).string();
  };

  auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  try {
    if (*enumerate) {
      report.command = "enumerate";
      report.parameters = {{"n", enum_n}, {"dihedral", dihedral}};
      report.rows.push_back({"catalan", std::to_string(catalan_count(enum_n))});
      report.rows.push_back(
          {"classes", std::to_string(count_rotation_classes(enum_n, dihedral))});
      auto prof = orbit_profile(enum_n, dihedral);
      std::ostringstream ps;
      for (size_t i = 0; i < prof.size(); ++i) ps << (i ? " " : "") << prof[i];
      report.rows.push_back({"orbit_profile", ps.str()});
      json table = class_table_cached(enum_n, dihedral);
      for (const auto& jc : table)
        report.rows.push_back(
            {"class_" + std::to_string(jc.at("class").get<int>()),
             jc.at("label").get<std::string>() + "  code " +
                 jc.at("code").get<std::string>() + "  orbit " +
                 std::to_string(jc.at("orbit_size").get<int>())});
      report.checks.push_back(
          {"burnside", count_rotation_classes_burnside(enum_n) ==
                           count_rotation_classes(enum_n)});
      if (!csv_out.empty()) {
        std::ofstream out(csv_out);
        out << enumeration_csv(enum_n);
      }
    } else if (*cover) {
      report.command = "cover";
      CombinatorialPolyhedron poly =
          CombinatorialPolyhedron::load_json_file(resolve(fixture));
      auto diag = poly.validate();
      for (const auto& s : diag) report.rows.push_back({"diagnostic", s});
      if (!diag.empty()) {
        report.checks.push_back({"valid polyhedron", false});
      } else {
        std::set<int> mset;
        if (mirrors == "dome") {
          auto bases = find_bases(poly);
          if (bases.empty()) throw NotABasis("fixture has no basis face");
          Pyramitoid pyr(poly, bases.front());
          for (int f : pyr.lateral_faces()) mset.insert(f);
        } else {
          for (int f = 0; f < poly.num_faces(); ++f) mset.insert(f);
        }
        SmallCoverComplex cx = small_cover_complex(poly, mset);
        std::ostringstream cs;
        for (int d = 0; d <= cx.dim(); ++d)
          cs << (d ? " " : "") << cx.cells_in_dim(d);
        report.parameters = {{"fixture", fixture}, {"mirrors", mirrors}};
        report.rows.push_back({"cells", cs.str()});
        report.rows.push_back(
            {"euler", std::to_string(cx.euler_characteristic())});
        report.checks.push_back({"dd_zero", check_dd_zero(cx)});
        if (with_homology)
          report.rows.push_back({"homology", homology_string(homology(cx))});
        if (!dot_out.empty()) {
          std::ofstream out(dot_out);
          out << defining_graph(poly, mset).to_dot();
        }
        if (!dump_out.empty()) {
          std::ofstream out(dump_out);
          out << cx.dump();
        }
      }
    } else if (*bip) {
      report.command = "bipyramitoid";
      CombinatorialPolyhedron poly =
          CombinatorialPolyhedron::load_json_file(resolve(bip_fixture));
      Bipyramitoid b = split_bipyramitoid(poly, parse_equator(equator_text));
      report.parameters = {{"fixture", bip_fixture}, {"equator", equator_text}};
      report.rows.push_back({"n", std::to_string(b.n())});
      report.rows.push_back(
          {"north_label", label_string(b.north().label().canonical())});
      report.rows.push_back(
          {"south_label", label_string(b.south().label().canonical())});
      HeegaardData hd = heegaard_data(b);
      report.rows.push_back({"genus", std::to_string(hd.genus)});
      report.rows.push_back(
          {"meridians_per_side", std::to_string(hd.north_meridians.size())});
      report.checks.push_back(
          {"reglued polyhedron matches", b.glued().isomorphic_to(poly)});
      TwoWayHomology tw = z_homology_two_ways(b);
      report.rows.push_back({"homology", homology_string(tw.direct)});
      report.checks.push_back({"homology routes agree", tw.agree});
      if (!heegaard_out.empty()) {
        std::ofstream out(heegaard_out);
        out << hd.to_json();
      }
      if (!pi1_out.empty()) {
        std::ofstream out(pi1_out);
        out << bipyramitoid_pi1_presentation(code_of(b.north()),
                                             south_code_in_north_frame(b))
                   .to_text();
      }
    } else if (*quad) {
      report.command = "quadrics";
      EmbeddingReport rep = verify_embedding(quad_n, samples, tol, seed);
      EmbeddingReport prep =
          quad_n >= 4 ? verify_embedding(quad_n, samples, tol, seed, true) : rep;
      report.parameters = {{"n", quad_n}, {"samples", samples}, {"seed", seed}};
      std::ostringstream rs;
      rs.precision(3);
      rs << std::scientific << rep.max_residual;
      report.rows.push_back({"max_residual", rs.str()});
      std::ostringstream rp;
      rp.precision(3);
      rp << std::scientific << prep.max_residual;
      report.rows.push_back({"max_residual_pyramid", rp.str()});
      report.rows.push_back(
          {"system_rank", std::to_string(quad_n >= 4 ? polygon_system(quad_n).rank()
                                                     : 1)});
      report.checks.push_back({"residual below tolerance",
                               rep.max_residual < tol && prep.max_residual < tol});
      if (!quad_csv.empty()) {
        std::ofstream out(quad_csv);
        out << quadrics_csv(3, quad_n, samples, tol, seed);
      }
    } else if (*verify) {
      report.command = "verify";
      report.parameters = {{"level", level}};
      auto results = run_acceptance(level == "full" ? VerifyLevel::Full
                                                    : VerifyLevel::Fast);
      for (const auto& r : results) {
        report.checks.push_back({r.name, r.pass});
        if (!r.detail.empty()) report.rows.push_back({r.name, r.detail});
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::cout << report.render(format);
  return report.ok() ? 0 : 1;
}
