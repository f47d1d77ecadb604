#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crystalrep/lattice.hpp"

#include <cmath>
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

const Lattice square = make_lattice(Mat::Identity(2, 2));
const Lattice stretched = make_lattice(mat2(1, 0, 0, 2));
const Lattice hexagonal = make_lattice(mat2(1, 0.5, 0, std::sqrt(3.0) / 2));

}  // namespace

TEST_CASE("dual bases") {
  CHECK(dual_lattice(square).B.isApprox(Mat::Identity(2, 2), 1e-14));
  CHECK(dual_lattice(stretched).B.isApprox(mat2(1, 0, 0, 0.5), 1e-14));

  SUBCASE("pairing gives Kronecker deltas") {
    for (const Lattice& lat : {square, stretched, hexagonal}) {
      Mat pairing = dual_lattice(lat).B.transpose() * lat.B;
      CHECK((pairing - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }

  SUBCASE("duality is an involution") {
    for (const Lattice& lat : {square, stretched, hexagonal}) {
      CHECK(dual_lattice(dual_lattice(lat)).B.isApprox(lat.B, 1e-12));
    }
  }

  SUBCASE("covolumes are reciprocal") {
    CHECK(dual_lattice(hexagonal).covolume() * hexagonal.covolume() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("integer coordinates") {
  auto k = coords_of(square, v2(2, -3));
  REQUIRE(k.has_value());
  CHECK(ivec_eq(*k, iv2(2, -3)));
  CHECK_FALSE(coords_of(square, v2(0.5, 0)).has_value());

  Vec x = hexagonal.B * v2(3, -2).cast<double>();
  auto kh = coords_of(hexagonal, x);
  REQUIRE(kh.has_value());
  CHECK(ivec_eq(*kh, iv2(3, -2)));
  CHECK_FALSE(coords_of(hexagonal, x + v2(0.01, 0)).has_value());
}

TEST_CASE("point enumeration in a ball") {
  CHECK(enumerate_points(square, 0.0).size() == 1);
  CHECK(enumerate_points(square, 1.0).size() == 5);
  CHECK(enumerate_points(square, 1.5).size() == 9);

  SUBCASE("lexicographic order of coordinates") {
    auto pts = enumerate_points(square, 1.0);
    REQUIRE(pts.size() == 5);
    CHECK(ivec_eq(pts[0].k, iv2(-1, 0)));
    CHECK(ivec_eq(pts[1].k, iv2(0, -1)));
    CHECK(ivec_eq(pts[2].k, iv2(0, 0)));
    CHECK(ivec_eq(pts[3].k, iv2(0, 1)));
    CHECK(ivec_eq(pts[4].k, iv2(1, 0)));
  }

  SUBCASE("embedded points match the coordinates") {
    for (const auto& p : enumerate_points(hexagonal, 2.0)) {
      CHECK((p.x - hexagonal.B * p.k.cast<double>()).norm() <= 1e-14);
      CHECK(p.x.norm() <= 2.0 + 1e-9);
    }
  }

  SUBCASE("off-center ball") {
    auto pts = enumerate_points_near(square, v2(0.5, 0), 0.6);
    CHECK(pts.size() == 2);
  }
}

TEST_CASE("character values") {
  CHECK(std::abs(character_eval(v2(0.25, 0), v2(1, 0)) - Complex(0, 1)) <= 1e-14);
  CHECK(std::abs(character_eval(v2(0.5, 0.5), v2(1, 1)) - Complex(1, 0)) <= 1e-14);
  CHECK(std::abs(character_eval(v2(0.3, -0.1), Vec::Zero(2)) - Complex(1, 0)) <= 1e-14);

  SUBCASE("characters are multiplicative in x") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ud(-2, 2);
    for (int i = 0; i < 50; ++i) {
      Vec w = v2(ud(rng), ud(rng)), x = v2(ud(rng), ud(rng)), y = v2(ud(rng), ud(rng));
      CHECK(std::abs(character_eval(w, x + y) - character_eval(w, x) * character_eval(w, y)) <=
            1e-12);
    }
  }
}

TEST_CASE("a character is trivial on the lattice exactly when the frequency is dual") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> kd(-4, 4);
  Lattice dual = dual_lattice(hexagonal);
  auto pts = enumerate_points(hexagonal, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    Vec omega = dual.B * v2(kd(rng), kd(rng));
    double worst = 0;
    for (const auto& p : pts) worst = std::max(worst, std::abs(character_eval(omega, p.x) - 1.0));
    CHECK(worst <= 1e-9);

    Vec off = omega + dual.B * v2(0.37, 0.21);
    double best = 0;
    for (const auto& p : pts) best = std::max(best, std::abs(character_eval(off, p.x) - 1.0));
    CHECK(best > 0.1);
  }
}

TEST_CASE("degenerate basis is rejected") {
  bool threw = false;
  try {
    make_lattice(mat2(1, 2, 2, 4));
  } catch (const Error& e) {
    threw = (e.code() == "SingularBasis");
  }
  CHECK(threw);
}
