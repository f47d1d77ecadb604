#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crystalrep/crystal.hpp"

#include <random>

using namespace crystalrep;

namespace {

Mat mat2(double a, double b, double c, double d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

IVec iv2(int a, int b) {
  IVec v(2);
  v << a, b;
  return v;
}

bool ivec_eq(const IVec& a, const IVec& b) {
  return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() == 0;
}

const Mat sigma = mat2(1, 0, 0, -1);
const Mat rot90 = mat2(0, -1, 1, 0);

template <class F>
std::string error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("catalog contents") {
  auto names = catalog_names();
  REQUIRE(names.size() == 4);
  for (const auto& name : names) {
    CrystalGroup g = catalog(name);
    CHECK(g.name == name);
    CHECK(g.dim() == 2);
    CHECK(approx_equal(gamma(g, 0), affine_identity(2)));
  }
  CHECK(catalog("p1").pg.order() == 1);
  CHECK(catalog("pm").pg.order() == 2);
  CHECK(catalog("pg").pg.order() == 2);
  CHECK(catalog("p4m").pg.order() == 8);
  CHECK(error_code_of([] { catalog("p6m"); }) == "UnknownGroupName");
}

TEST_CASE("symmorphic flags") {
  CHECK(is_symmorphic(catalog("p1")));
  CHECK(is_symmorphic(catalog("pm")));
  CHECK_FALSE(is_symmorphic(catalog("pg")));
  CHECK(is_symmorphic(catalog("p4m")));
  for (const auto& name : catalog_names()) {
    CHECK(is_symmorphic(dual_crystal_group(catalog(name))));
  }
}

TEST_CASE("pg cocycle, against a direct affine computation") {
  CrystalGroup g = catalog("pg");
  int si = find_pg_index(g.pg, sigma);
  REQUIRE(si >= 0);

  // gamma(sigma)^2 worked out with raw affine arithmetic, no group code
  AffineIsometry gs = gamma(g, si);
  AffineIsometry prod = compose(gs, gs);
  CHECK(prod.L.isApprox(Mat::Identity(2, 2), 1e-14));
  CHECK(prod.t.isApprox(v2(1, 0), 1e-14));

  CHECK(ivec_eq(cocycle(g, si, si), iv2(1, 0)));
  CHECK(ivec_eq(cocycle(g, 0, si), iv2(0, 0)));
  CHECK(ivec_eq(cocycle(g, si, 0), iv2(0, 0)));
}

TEST_CASE("cocycle identity for every pair") {
  for (const auto& name : catalog_names()) {
    CrystalGroup g = catalog(name);
    const int p = g.pg.order();
    for (int L = 0; L < p; ++L) {
      for (int M = 0; M < p; ++M) {
        AffineIsometry lhs = compose(gamma(g, L), gamma(g, M));
        Vec shift = g.lat.B * cocycle(g, L, M).cast<double>();
        AffineIsometry rhs =
            compose(gamma(g, g.pg.mult[L][M]), make_affine(shift, Mat::Identity(2, 2)));
        CHECK(approx_equal(lhs, rhs, 1e-12));
      }
    }
    if (is_symmorphic(g)) {
      for (int L = 0; L < p; ++L) {
        for (int M = 0; M < p; ++M) CHECK(cocycle(g, L, M).cwiseAbs().maxCoeff() == 0);
      }
    }
  }
}

TEST_CASE("membership and normal form") {
  CrystalGroup g = catalog("pg");
  int si = find_pg_index(g.pg, sigma);

  auto e = membership(g, make_affine(v2(1.5, 2), sigma));
  REQUIRE(e.has_value());
  CHECK(e->L == si);
  CHECK(ivec_eq(e->y, iv2(1, 2)));
  CHECK(quotient_Q(*e) == si);

  // the bare mirror is not in pg: its coset carries the (1/2, 0) shift
  CHECK_FALSE(membership(g, make_affine(Vec::Zero(2), sigma)).has_value());
  CHECK_FALSE(membership(g, make_affine(v2(0.3, 0), Mat::Identity(2, 2))).has_value());

  GroupElement w{si, iv2(1, 2)};
  auto back = membership(g, embed(g, w));
  REQUIRE(back.has_value());
  CHECK(back->L == w.L);
  CHECK(ivec_eq(back->y, w.y));
}

TEST_CASE("element arithmetic agrees with affine arithmetic") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> yd(-4, 4);
  for (const auto& name : catalog_names()) {
    CrystalGroup g = catalog(name);
    std::uniform_int_distribution<int> Ld(0, g.pg.order() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      GroupElement a{Ld(rng), iv2(yd(rng), yd(rng))};
      GroupElement b{Ld(rng), iv2(yd(rng), yd(rng))};
      GroupElement ab = element_mul(g, a, b);
      CHECK(approx_equal(embed(g, ab), compose(embed(g, a), embed(g, b)), 1e-12));
      GroupElement ai = element_inv(g, a);
      GroupElement unit = element_mul(g, a, ai);
      CHECK(unit.L == 0);
      CHECK(unit.y.cwiseAbs().maxCoeff() == 0);
    }
  }
}

TEST_CASE("conjugating a translation rotates its vector") {
  CrystalGroup g = catalog("pm");
  int si = find_pg_index(g.pg, sigma);
  CHECK(ivec_eq(conjugation_action(g, si, iv2(1, 1)), iv2(1, -1)));

  SUBCASE("matches the affine conjugate for every element") {
    for (const auto& name : catalog_names()) {
      CrystalGroup h = catalog(name);
      for (int L = 0; L < h.pg.order(); ++L) {
        IVec y = iv2(2, -3);
        AffineIsometry conj = compose(
            gamma(h, L),
            compose(make_affine(h.lat.B * y.cast<double>(), Mat::Identity(2, 2)),
                    inverse(gamma(h, L))));
        CHECK(conj.L.isApprox(Mat::Identity(2, 2), 1e-12));
        auto k = coords_of(h.lat, conj.t);
        REQUIRE(k.has_value());
        CHECK(ivec_eq(conjugation_action(h, L, y), *k));
      }
    }
  }
}

TEST_CASE("point group saturation") {
  PointGroup d8 = saturate_generators({rot90, sigma});
  CHECK(d8.order() == 8);
  CHECK(d8.elements[0].isApprox(Mat::Identity(2, 2), 1e-14));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      CHECK(d8.elements[d8.mult[i][j]].isApprox(d8.elements[i] * d8.elements[j], 1e-12));
    }
    CHECK(d8.elements[d8.inv[i]].isApprox(d8.elements[i].transpose(), 1e-12));
  }

  PointGroup c4 = saturate_generators({rot90});
  CHECK(c4.order() == 4);
}

TEST_CASE("build validation") {
  Lattice z2 = make_lattice(Mat::Identity(2, 2));
  PointGroup two = build_point_group({Mat::Identity(2, 2), sigma});
  int si = find_pg_index(two, sigma);

  SUBCASE("half-cell glide along the mirror works") {
    CrossSection cs{{Vec::Zero(2), Vec::Zero(2)}};
    cs.x[si] = v2(0.5, 0);
    CHECK(build_crystal_group(z2, two, cs, "pg-like").name == "pg-like");
  }
  SUBCASE("diagonal shift also satisfies the cocycle condition") {
    CrossSection cs{{Vec::Zero(2), Vec::Zero(2)}};
    cs.x[si] = v2(0.5, 0.5);
    CHECK(build_crystal_group(z2, two, cs, "cm-like").pg.order() == 2);
  }
  SUBCASE("incommensurate shift is rejected") {
    CrossSection cs{{Vec::Zero(2), Vec::Zero(2)}};
    cs.x[si] = v2(0.3, 0);
    CHECK(error_code_of([&] { build_crystal_group(z2, two, cs, "bad"); }) ==
          "CocycleNotInLattice");
  }
  SUBCASE("identity must come with zero shift") {
    CrossSection cs{{v2(0.1, 0), Vec::Zero(2)}};
    CHECK(error_code_of([&] { build_crystal_group(z2, two, cs, "bad"); }) == "BadCrossSection");
  }
  SUBCASE("point group must preserve the lattice") {
    Lattice tall = make_lattice(mat2(1, 0, 0, 2));
    PointGroup c4 = saturate_generators({rot90});
    CrossSection cs{std::vector<Vec>(4, Vec::Zero(2))};
    CHECK(error_code_of([&] { build_crystal_group(tall, c4, cs, "bad"); }) ==
          "LatticeNotInvariant");
  }
}

TEST_CASE("dual group") {
  CrystalGroup g = catalog("pg");
  CrystalGroup d = dual_crystal_group(g);
  CHECK(d.lat.B.isApprox(Mat::Identity(2, 2), 1e-14));
  CHECK(d.pg.order() == g.pg.order());
  for (int L = 0; L < d.pg.order(); ++L) {
    CHECK(d.cs.x[L].norm() == 0.0);
  }

  CrystalGroup tall = build_crystal_group(
      make_lattice(mat2(1, 0, 0, 2)), build_point_group({Mat::Identity(2, 2), sigma}),
      CrossSection{{Vec::Zero(2), Vec::Zero(2)}}, "pm-tall");
  CHECK(dual_crystal_group(tall).lat.B.isApprox(mat2(1, 0, 0, 0.5), 1e-14));
}

TEST_CASE("action through gamma does not depend on the cross-section") {
  // same point group and lattice, two different valid cross-sections; the
  // conjugation action on translations must coincide
  Lattice z2 = make_lattice(Mat::Identity(2, 2));
  PointGroup two = build_point_group({Mat::Identity(2, 2), sigma});
  int si = find_pg_index(two, sigma);

  CrossSection plain{{Vec::Zero(2), Vec::Zero(2)}};
  CrossSection glide{{Vec::Zero(2), Vec::Zero(2)}};
  glide.x[si] = v2(0.5, 0);

  CrystalGroup a = build_crystal_group(z2, two, plain, "pm");
  CrystalGroup b = build_crystal_group(z2, two, glide, "pg");
  for (int L = 0; L < 2; ++L) {
    for (int yx = -2; yx <= 2; ++yx) {
      for (int yy = -2; yy <= 2; ++yy) {
        CHECK(ivec_eq(conjugation_action(a, L, iv2(yx, yy)),
                      conjugation_action(b, L, iv2(yx, yy))));
      }
    }
  }
}
