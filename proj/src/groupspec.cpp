#include "crystalrep/groupspec.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace crystalrep {

namespace {

using nlohmann::json;

Mat parse_matrix(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    fail("ParseError", std::string(what) + " must be an array of " + std::to_string(n) + " rows");
  }
  Mat m(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      fail("ParseError", std::string(what) + " row " + std::to_string(r) + " has wrong length");
    }
    for (int c = 0; c < n; ++c) {
      if (!row[c].is_number()) fail("ParseError", std::string(what) + " has a non-numeric entry");
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

Vec parse_vector(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    fail("ParseError", std::string(what) + " must be an array of " + std::to_string(n) + " numbers");
  }
  Vec v(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_number()) fail("ParseError", std::string(what) + " has a non-numeric entry");
    v[i] = j[i].get<double>();
  }
  return v;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

CrystalGroup parse_group_spec_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("ParseError", "group spec must be a JSON object");

  if (j.contains("builtin")) {
    if (!j["builtin"].is_string()) fail("ParseError", "builtin must be a string");
    return catalog(j["builtin"].get<std::string>());
  }

  for (const char* key : {"dimension", "lattice_basis"}) {
    if (!j.contains(key)) fail("ParseError", std::string("missing field '") + key + "'");
  }
  if (!j["dimension"].is_number_integer()) fail("ParseError", "dimension must be an integer");
  const int n = j["dimension"].get<int>();
  if (n < 1 || n > 8) fail("ParseError", "dimension out of range");

  std::string name = j.value("name", std::string("custom"));

  Lattice lat = [&] {
    try {
      return make_lattice(parse_matrix(j["lattice_basis"], n, "lattice_basis"));
    } catch (const Error& e) {
      if (e.code() == "ParseError") throw;
      fail("ValidationError", e.what());
    }
  }();

  PointGroup pg;
  try {
    if (j.contains("point_group_elements")) {
      std::vector<Mat> elems;
      for (const json& m : j["point_group_elements"]) {
        elems.push_back(parse_matrix(m, n, "point_group_elements entry"));
      }
      pg = build_point_group(std::move(elems));
    } else if (j.contains("point_group_generators")) {
      std::vector<Mat> gens;
      for (const json& m : j["point_group_generators"]) {
        gens.push_back(parse_matrix(m, n, "point_group_generators entry"));
      }
      pg = saturate_generators(gens);
    } else {
      pg = build_point_group({Mat::Identity(n, n)});
    }
  } catch (const Error& e) {
    if (e.code() == "ParseError" || e.code() == "PointGroupNotClosed") throw;
    fail("ValidationError", e.what());
  }

  CrossSection cs;
  cs.x.assign(pg.order(), Vec::Zero(n));
  if (j.contains("cross_section")) {
    if (!j["cross_section"].is_array()) fail("ParseError", "cross_section must be an array");
    for (const json& entry : j["cross_section"]) {
      if (!entry.is_object() || !entry.contains("element") || !entry.contains("x")) {
        fail("ParseError", "cross_section entries need 'element' and 'x'");
      }
      Mat m = parse_matrix(entry["element"], n, "cross_section element");
      int L = find_pg_index(pg, m);
      if (L < 0) fail("ParseError", "cross_section element is not in the point group");
      cs.x[L] = parse_vector(entry["x"], n, "cross_section x");
    }
  }

  try {
    return build_crystal_group(std::move(lat), std::move(pg), std::move(cs), std::move(name));
  } catch (const Error& e) {
    fail("ValidationError", e.what());
  }
}

CrystalGroup parse_group_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", e.what());
  }
  return parse_group_spec_json(j);
}

nlohmann::json serialize_group(const CrystalGroup& g) {
  json j;
  j["name"] = g.name;
  j["dimension"] = g.dim();
  j["lattice_basis"] = matrix_to_json(g.lat.B);
  json elems = json::array();
  for (const Mat& m : g.pg.elements) elems.push_back(matrix_to_json(m));
  j["point_group_elements"] = std::move(elems);
  json cs = json::array();
  for (int L = 0; L < g.pg.order(); ++L) {
    cs.push_back(json{{"element", matrix_to_json(g.pg.elements[L])},
                      {"x", vector_to_json(g.cs.x[L])}});
  }
  j["cross_section"] = std::move(cs);
  return j;
}

CrystalGroup load_group_arg(const std::string& arg) {
  for (const std::string& name : catalog_names()) {
    if (arg == name) return catalog(arg);
  }
  std::ifstream in(arg);
  if (!in) fail("ParseError", "cannot open group file '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_spec(ss.str());
}

}  // namespace crystalrep
