#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crystalrep/groupspec.hpp"
#include "crystalrep/verify.hpp"

using namespace crystalrep;
using nlohmann::json;

namespace {

bool groups_equal(const CrystalGroup& a, const CrystalGroup& b) {
  if (a.name != b.name || a.dim() != b.dim()) return false;
  if (!a.lat.B.isApprox(b.lat.B, 1e-12)) return false;
  if (a.pg.order() != b.pg.order()) return false;
  for (int i = 0; i < a.pg.order(); ++i) {
    if (!a.pg.elements[i].isApprox(b.pg.elements[i], 1e-12)) return false;
    if ((a.cs.x[i] - b.cs.x[i]).norm() > 1e-12) return false;
  }
  return true;
}

template <class F>
std::string error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

const char* kExplicitPg = R"({
  "name": "pg",
  "dimension": 2,
  "lattice_basis": [[1, 0], [0, 1]],
  "point_group_generators": [[[1, 0], [0, -1]]],
  "cross_section": [{"element": [[1, 0], [0, -1]], "x": [0.5, 0]}]
})";

}  // namespace

TEST_CASE("builtin shortcut") {
  CrystalGroup g = parse_group_spec(R"({"builtin": "pg"})");
  CHECK(groups_equal(g, catalog("pg")));
  CHECK(error_code_of([] { parse_group_spec(R"({"builtin": "p17"})"); }) ==
        "UnknownGroupName");
}

TEST_CASE("explicit spec reproduces the catalog group") {
  CrystalGroup g = parse_group_spec(kExplicitPg);
  CHECK(groups_equal(g, catalog("pg")));
  CHECK_FALSE(is_symmorphic(g));
}

TEST_CASE("spec validation") {
  SUBCASE("corrupted cross-section") {
    json j = json::parse(kExplicitPg);
    j["cross_section"][0]["x"] = {0.3, 0};
    std::string code = error_code_of([&] { parse_group_spec_json(j); });
    CHECK(code == "ValidationError");
  }
  SUBCASE("malformed document") {
    CHECK(error_code_of([] { parse_group_spec("{not json"); }) == "ParseError");
    CHECK(error_code_of([] { parse_group_spec(R"({"dimension": 2})"); }) == "ParseError");
    CHECK(error_code_of([] { parse_group_spec(R"({"name": "x", "dimension": 0})"); }) ==
          "ParseError");
  }
  SUBCASE("cross-section entry for an unknown element") {
    json j = json::parse(kExplicitPg);
    j["cross_section"][0]["element"] = {{0, 1}, {1, 0}};
    CHECK(error_code_of([&] { parse_group_spec_json(j); }) == "ParseError");
  }
  SUBCASE("singular lattice basis") {
    json j = json::parse(kExplicitPg);
    j["lattice_basis"] = {{1, 2}, {2, 4}};
    CHECK(error_code_of([&] { parse_group_spec_json(j); }) == "ValidationError");
  }
}

TEST_CASE("serialization round trip") {
  for (const auto& name : catalog_names()) {
    CrystalGroup g = catalog(name);
    json j = serialize_group(g);
    CrystalGroup back = parse_group_spec_json(j);
    CHECK(groups_equal(g, back));
    // and once more through text
    CHECK(groups_equal(parse_group_spec(j.dump()), g));
  }
}

TEST_CASE("load by name or file") {
  CHECK(groups_equal(load_group_arg("p4m"), catalog("p4m")));
  CHECK(error_code_of([] { load_group_arg("/no/such/file.json"); }) == "ParseError");
}

TEST_CASE("verification suites") {
  CrystalGroup g = catalog("pg");

  SUBCASE("reports are deterministic for a fixed seed") {
    auto a = run_suites(g, "group-laws", 7);
    auto b = run_suites(g, "group-laws", 7);
    CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  }

  SUBCASE("suite catalog") {
    auto names = suite_names();
    CHECK(names.size() == 5);
    CHECK(error_code_of([&] { run_suites(g, "nonsense", 1); }) == "UnknownSuite");
  }

  SUBCASE("all expands to every suite") {
    auto reports = run_suites(g, "all", 3);
    CHECK(reports.size() == suite_names().size());
    for (const auto& r : reports) {
      CHECK(r.group == "pg");
      CHECK(r.seed == 3);
      CHECK(!r.checks.empty());
    }
  }

  SUBCASE("tolerance override propagates into every check") {
    auto reports = run_suites(g, "group-laws", 1, 0.125);
    for (const auto& r : reports) {
      for (const auto& c : r.checks) CHECK(c.tolerance == 0.125);
    }
  }

  SUBCASE("json shape") {
    auto reports = run_suites(g, "rep", 2);
    json j = report_to_json(reports);
    CHECK(j.contains("pass"));
    CHECK(j.contains("suites"));
    REQUIRE(j["suites"].size() == 1);
    const json& suite = j["suites"][0];
    CHECK(suite["suite"] == "rep");
    CHECK(suite["group"] == "pg");
    CHECK(suite["seed"] == 2);
    CHECK(!suite.contains("wall_ms"));
    for (const auto& c : suite["checks"]) {
      CHECK(c.contains("name"));
      CHECK(c.contains("residual"));
      CHECK(c.contains("tolerance"));
      CHECK(c.contains("status"));
    }
    json timed = report_to_json(reports, true, {1.5});
    CHECK(timed["suites"][0].contains("wall_ms"));
  }
}
