// Command line front end: group inspection, fundamental domains,
// representation matrices, verification suites and SVG plots.

#include "crystalrep/decomp.hpp"
#include "crystalrep/groupspec.hpp"
#include "crystalrep/svg.hpp"
#include "crystalrep/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using crystalrep::Vec;
using nlohmann::json;

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) crystalrep::fail("ParseError", "cannot write '" + out_path + "'");
    out << text;
  }
}

Vec parse_csv_vector(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    vals.push_back(std::stod(item));
  }
  Vec v(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) v[i] = vals[i];
  return v;
}

// element specs: "gamma:L", "t:k1,k2", or "L;k1,k2"
crystalrep::GroupElement parse_element(const crystalrep::CrystalGroup& g,
                                       const std::string& spec) {
  const int n = g.dim();
  auto to_ivec = [n](const std::string& csv) {
    Vec v = parse_csv_vector(csv);
    if (v.size() != n) crystalrep::fail("ParseError", "element spec has wrong coordinate count");
    crystalrep::IVec k(n);
    for (int i = 0; i < n; ++i) k[i] = static_cast<int>(std::llround(v[i]));
    return k;
  };
  if (spec.rfind("gamma:", 0) == 0) {
    int L = std::stoi(spec.substr(6));
    if (L < 0 || L >= g.pg.order()) crystalrep::fail("ParseError", "point group index out of range");
    return {L, crystalrep::IVec::Zero(n)};
  }
  if (spec.rfind("t:", 0) == 0) {
    return {0, to_ivec(spec.substr(2))};
  }
  auto semi = spec.find(';');
  int L = std::stoi(spec.substr(0, semi));
  if (L < 0 || L >= g.pg.order()) crystalrep::fail("ParseError", "point group index out of range");
  if (semi == std::string::npos) return {L, crystalrep::IVec::Zero(n)};
  return {L, to_ivec(spec.substr(semi + 1))};
}

json matrix_json(const crystalrep::CMat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      row.push_back(json{{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json vertices_json(const std::vector<Vec>& verts) {
  json out = json::array();
  for (const Vec& v : verts) {
    json pt = json::array();
    for (int i = 0; i < v.size(); ++i) pt.push_back(v[i]);
    out.push_back(std::move(pt));
  }
  return out;
}

int cmd_info(const std::string& group_arg, const std::string& out_path) {
  crystalrep::CrystalGroup g = crystalrep::load_group_arg(group_arg);
  json j = crystalrep::serialize_group(g);
  j["point_group_order"] = g.pg.order();
  j["symmorphic"] = crystalrep::is_symmorphic(g);
  j["covolume"] = g.lat.covolume();
  emit(j, out_path);
  return 0;
}

int cmd_dual(const std::string& group_arg, const std::string& out_path) {
  crystalrep::CrystalGroup g = crystalrep::load_group_arg(group_arg);
  crystalrep::CrystalGroup d = crystalrep::dual_crystal_group(g);
  json j = crystalrep::serialize_group(d);
  j["symmorphic"] = crystalrep::is_symmorphic(d);
  j["covolume"] = d.lat.covolume();
  emit(j, out_path);
  return 0;
}

int cmd_domain(const std::string& group_arg, const std::string& center_csv,
               const std::string& out_path) {
  crystalrep::CrystalGroup g = crystalrep::load_group_arg(group_arg);
  Vec center = center_csv.empty() ? crystalrep::default_center(g.dim())
                                  : parse_csv_vector(center_csv);
  crystalrep::ParamDomain pd = crystalrep::build_param_domain(g, center);
  json j;
  j["group"] = g.name;
  json c = json::array();
  for (int i = 0; i < center.size(); ++i) c.push_back(center[i]);
  j["center"] = std::move(c);
  if (g.dim() == 2) {
    j["cell_vertices"] = vertices_json(pd.R_vertices);
    double area = crystalrep::area_2d(pd.R);
    j["cell_area"] = area;
    j["tiled_area"] = g.pg.order() * area;
    j["dual_covolume"] = pd.gstar.lat.covolume();
    json copies = json::array();
    for (const auto& copy : pd.pi_copies) {
      copies.push_back(vertices_json(crystalrep::vertices_2d(copy)));
    }
    j["copy_vertices"] = std::move(copies);
  }
  j["circumradius"] = pd.circumradius;
  emit(j, out_path);
  return 0;
}

int cmd_rep_matrix(const std::string& group_arg, const std::string& omega_csv,
                   const std::string& element_spec, const std::string& out_path) {
  crystalrep::CrystalGroup g = crystalrep::load_group_arg(group_arg);
  Vec omega = parse_csv_vector(omega_csv);
  if (omega.size() != g.dim()) crystalrep::fail("ParseError", "--omega has wrong dimension");
  crystalrep::GroupElement e = parse_element(g, element_spec);
  crystalrep::InducedRepContext ctx{g, omega};
  crystalrep::CMat U = crystalrep::induced_rep(ctx, e);
  json j;
  j["group"] = g.name;
  j["element"] = {{"L", e.L}, {"y", std::vector<int>(e.y.data(), e.y.data() + e.y.size())}};
  json w = json::array();
  for (int i = 0; i < omega.size(); ++i) w.push_back(omega[i]);
  j["omega"] = std::move(w);
  j["matrix"] = matrix_json(U);
  j["unitarity_residual"] = crystalrep::unitarity_residual(U);
  emit(j, out_path);
  return 0;
}

int cmd_verify(const std::string& group_arg, const std::string& suite, std::uint64_t seed,
               double tol, bool timings, const std::string& out_path) {
  std::vector<crystalrep::CrystalGroup> groups;
  if (group_arg.empty()) {
    for (const std::string& name : crystalrep::catalog_names()) {
      groups.push_back(crystalrep::catalog(name));
    }
  } else {
    groups.push_back(crystalrep::load_group_arg(group_arg));
  }

  std::vector<crystalrep::SuiteReport> reports;
  std::vector<double> wall;
  for (const auto& g : groups) {
    auto t0 = std::chrono::steady_clock::now();
    auto part = crystalrep::run_suites(g, suite, seed, tol);
    auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    for (auto& rep : part) {
      reports.push_back(std::move(rep));
      wall.push_back(dt.count() / static_cast<double>(part.size()));
    }
  }
  json j = crystalrep::report_to_json(reports, timings, wall);
  emit(j, out_path);
  return j["pass"].get<bool>() ? 0 : 1;
}

crystalrep::RangeFunction parse_range_block(const json& spec, const crystalrep::CrystalGroup& g,
                                            const crystalrep::Truncation& tr) {
  using crystalrep::CMat;
  if (!spec.is_object() || !spec.contains("kind")) {
    crystalrep::fail("ParseError", "range block needs a 'kind'");
  }
  const int p = g.pg.order();
  const int s = tr.size();
  std::string kind = spec["kind"].get<std::string>();
  if (kind == "tensor") {
    if (!spec.contains("f_delta_columns")) {
      crystalrep::fail("ParseError", "tensor range needs 'f_delta_columns'");
    }
    const auto& cols = spec["f_delta_columns"];
    CMat F = CMat::Zero(s, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      crystalrep::IVec k(g.dim());
      for (int i = 0; i < g.dim(); ++i) k[i] = cols[c][i].get<int>();
      int iz = tr.find(k);
      if (iz < 0) crystalrep::fail("ParseError", "delta column outside the truncation window");
      F(iz, c) = 1.0;
    }
    return crystalrep::tensor_range(tr, p, F);
  }
  if (kind == "raw") {
    if (!spec.contains("columns")) crystalrep::fail("ParseError", "raw range needs 'columns'");
    const auto& cols = spec["columns"];
    CMat B = CMat::Zero(p * s, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (const json& entry : cols[c]) {
        int pi = entry.at("pi").get<int>();
        crystalrep::IVec k(g.dim());
        for (int i = 0; i < g.dim(); ++i) k[i] = entry.at("z")[i].get<int>();
        int iz = tr.find(k);
        if (pi < 0 || pi >= p || iz < 0) {
          crystalrep::fail("ParseError", "raw range entry outside the window");
        }
        B(pi * s + iz, c) =
            crystalrep::Complex(entry.value("re", 0.0), entry.value("im", 0.0));
      }
    }
    return crystalrep::make_range_function(
        std::vector<CMat>(static_cast<std::size_t>(tr.n_omega()), B));
  }
  crystalrep::fail("ParseError", "range kind must be 'tensor' or 'raw'");
}

int cmd_subspace_check(const std::string& range_path, double tol,
                       const std::string& out_path) {
  std::ifstream in(range_path);
  if (!in) crystalrep::fail("ParseError", "cannot open range file '" + range_path + "'");
  json spec;
  try {
    in >> spec;
  } catch (const json::exception& e) {
    crystalrep::fail("ParseError", e.what());
  }

  crystalrep::CrystalGroup g =
      spec.contains("group") ? crystalrep::parse_group_spec_json(spec["group"])
                             : crystalrep::catalog("pg");
  crystalrep::ParamDomain pd = crystalrep::build_param_domain(g);
  crystalrep::Truncation tr = crystalrep::make_truncation(
      pd, spec.value("truncation_radius", 2.0), spec.value("omega_grid", 3));

  crystalrep::RangeFunction rf = parse_range_block(spec.at("range"), g, tr);

  std::vector<crystalrep::GroupElement> elements;
  for (int L = 0; L < g.pg.order(); ++L) {
    elements.push_back({L, crystalrep::IVec::Zero(g.dim())});
  }
  std::mt19937_64 rng(spec.value("seed", 1));
  std::uniform_int_distribution<int> Ld(0, g.pg.order() - 1), yd(-2, 2);
  for (int i = 0; i < 5; ++i) {
    crystalrep::IVec y(g.dim());
    for (int k = 0; k < g.dim(); ++k) y[k] = yd(rng);
    elements.push_back({Ld(rng), std::move(y)});
  }

  double threshold = tol > 0 ? tol : crystalrep::tol::invariance;
  auto report = crystalrep::invariance_report(rf, g, elements, tr, threshold);
  auto factor = crystalrep::tensor_form_check(rf, 0, g.pg.order());

  json j;
  j["group"] = g.name;
  j["invariant"] = report.invariant;
  j["max_residual"] = report.max_residual;
  j["threshold"] = threshold;
  j["worst_sample"] = report.worst_sample;
  j["worst_element"] = report.worst_element;
  j["tensor_form"] = factor.has_value();
  if (factor) j["tensor_rank"] = static_cast<int>(factor->cols());
  emit(j, out_path);
  return report.invariant ? 0 : 1;
}

int cmd_plot(const std::string& group_arg, const std::string& what,
             const std::string& center_csv, const std::string& out_path) {
  crystalrep::CrystalGroup g = crystalrep::load_group_arg(group_arg);
  Vec center = center_csv.empty() ? Vec() : parse_csv_vector(center_csv);
  std::string svg = crystalrep::render_svg(g, what, center);
  if (out_path.empty()) {
    std::cout << svg;
  } else {
    std::ofstream out(out_path);
    if (!out) crystalrep::fail("ParseError", "cannot write '" + out_path + "'");
    out << svg;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crystallographic group representations toolkit"};
  app.require_subcommand(1);

  std::string group_arg = "pg", out_path, center_csv, omega_csv, element_spec;
  std::string suite = "all", what = "domain", range_path;
  std::uint64_t seed = 1;
  double tol = 0.0;
  bool timings = false;

  // CRYSTALREP_TOL supplies the default tolerance override; an explicit
  // --tol wins
  if (const char* env = std::getenv("CRYSTALREP_TOL")) {
    try {
      tol = std::stod(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed CRYSTALREP_TOL\n";
    }
  }

  auto* info = app.add_subcommand("info", "group summary as JSON");
  info->add_option("--group", group_arg, "catalog name or spec file");
  info->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* dual = app.add_subcommand("dual", "dual group summary as JSON");
  dual->add_option("--group", group_arg);
  dual->add_option("--out", out_path);

  auto* dom = app.add_subcommand("domain", "Dirichlet cell and parameter domain");
  dom->add_option("--group", group_arg);
  dom->add_option("--center", center_csv, "comma separated base point");
  dom->add_option("--out", out_path);

  auto* repm = app.add_subcommand("rep-matrix", "induced representation matrix");
  repm->add_option("--group", group_arg);
  repm->add_option("--omega", omega_csv, "frequency, comma separated")->required();
  repm->add_option("--element", element_spec, "gamma:L | t:k1,k2 | L;k1,k2")->required();
  repm->add_option("--out", out_path);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--group", group_arg, "catalog name or spec file; default all catalog")
      ->default_val(std::string());
  ver->add_option("--suite", suite, "group-laws|domain|rep|chain|subspaces|all");
  ver->add_option("--seed", seed, "random seed");
  ver->add_option("--tol", tol, "override every per-check tolerance");
  ver->add_flag("--timings", timings, "include wall clock times (breaks reproducibility)");
  ver->add_option("--out", out_path);

  auto* sub = app.add_subcommand("subspace-check", "test a range function for invariance");
  sub->add_option("--range", range_path, "range function JSON file")->required();
  sub->add_option("--tol", tol, "invariance threshold");
  sub->add_option("--out", out_path);

  auto* plot = app.add_subcommand("plot", "SVG picture");
  plot->add_option("--group", group_arg);
  plot->add_option("--what", what, "domain|orbit|param-domain");
  plot->add_option("--center", center_csv);
  plot->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(group_arg, out_path);
    if (dual->parsed()) return cmd_dual(group_arg, out_path);
    if (dom->parsed()) return cmd_domain(group_arg, center_csv, out_path);
    if (repm->parsed()) return cmd_rep_matrix(group_arg, omega_csv, element_spec, out_path);
    if (ver->parsed()) return cmd_verify(group_arg, suite, seed, tol, timings, out_path);
    if (sub->parsed()) return cmd_subspace_check(range_path, tol, out_path);
    if (plot->parsed()) return cmd_plot(group_arg, what, center_csv, out_path);
  } catch (const crystalrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
