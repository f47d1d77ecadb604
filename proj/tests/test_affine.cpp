#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crystalrep/affine.hpp"

#include <cmath>
#include <random>

using namespace crystalrep;

namespace {

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Mat mirror_y() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat rotation(double t) {
  Mat m(2, 2);
  m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return m;
}

Mat random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Mat A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = nd(rng);
  Mat Q = Eigen::HouseholderQR<Mat>(A).householderQ();
  if (nd(rng) > 0) Q.col(0) = -Q.col(0);  // hit both determinant signs
  return Q;
}

AffineIsometry random_isometry(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Vec t(n);
  for (int i = 0; i < n; ++i) t[i] = nd(rng);
  return make_affine(t, random_orthogonal(n, rng));
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

}  // namespace

TEST_CASE("glide squared is a unit translation") {
  // g = [(1/2,0), mirror]: z |-> mirror(z + (1/2,0)). Composing by hand,
  // g g z = mirror(mirror(z + x) + x) = z + x + mirror x = z + (1,0),
  // which in [t, L] form is [(1,0), id].
  AffineIsometry g = make_affine(v2(0.5, 0), mirror_y());
  AffineIsometry gg = compose(g, g);

  CHECK(gg.t.isApprox(v2(1, 0), 1e-14));
  CHECK(gg.L.isApprox(Mat::Identity(2, 2), 1e-14));
  CHECK(approx_equal(gg, make_affine(v2(1, 0), Mat::Identity(2, 2))));
}

TEST_CASE("inverse of the glide") {
  AffineIsometry g = make_affine(v2(0.5, 0), mirror_y());
  AffineIsometry gi = inverse(g);

  CHECK(gi.t.isApprox(v2(-0.5, 0), 1e-14));
  CHECK(gi.L.isApprox(mirror_y(), 1e-14));
  CHECK(approx_equal(compose(g, gi), affine_identity(2)));
  CHECK(approx_equal(compose(gi, g), affine_identity(2)));
}

TEST_CASE("application convention: translate first, then rotate") {
  AffineIsometry g = make_affine(v2(0.5, 0), mirror_y());
  Vec z = apply(g, v2(0.1, 0.2));
  CHECK(z.isApprox(v2(0.6, -0.2), 1e-14));
}

TEST_CASE("composition matches the action") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> nd;
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      AffineIsometry a = random_isometry(n, rng);
      AffineIsometry b = random_isometry(n, rng);
      Vec z(n);
      for (int i = 0; i < n; ++i) z[i] = nd(rng);
      CHECK((apply(compose(a, b), z) - apply(a, apply(b, z))).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("group laws on random isometries") {
  std::mt19937_64 rng(32);
  AffineIsometry id3 = affine_identity(3);
  for (int trial = 0; trial < 100; ++trial) {
    AffineIsometry a = random_isometry(3, rng);
    AffineIsometry b = random_isometry(3, rng);
    AffineIsometry c = random_isometry(3, rng);
    CHECK(approx_equal(compose(compose(a, b), c), compose(a, compose(b, c)), 1e-12));
    CHECK(approx_equal(compose(a, inverse(a)), id3, 1e-12));
    CHECK(approx_equal(compose(inverse(a), a), id3, 1e-12));
    CHECK(approx_equal(compose(a, id3), a, 1e-12));
    CHECK(approx_equal(compose(id3, a), a, 1e-12));
  }
}

TEST_CASE("isometries preserve distances") {
  std::mt19937_64 rng(33);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 100; ++trial) {
    AffineIsometry a = random_isometry(2, rng);
    Vec p = v2(nd(rng), nd(rng)), q = v2(nd(rng), nd(rng));
    CHECK((apply(a, p) - apply(a, q)).norm() == doctest::Approx((p - q).norm()).epsilon(1e-12));
  }
}

TEST_CASE("rotations compose like angles") {
  AffineIsometry r1 = make_affine(Vec::Zero(2), rotation(0.4));
  AffineIsometry r2 = make_affine(Vec::Zero(2), rotation(1.1));
  CHECK(compose(r1, r2).L.isApprox(rotation(1.5), 1e-12));
}

TEST_CASE("validation") {
  Mat shear(2, 2);
  shear << 1, 1, 0, 1;
  CHECK(error_code_of([&] { make_affine(v2(0, 0), shear); }) == "BadOrthogonalPart");
  CHECK(error_code_of([&] { make_affine(Vec::Zero(3), mirror_y()); }) == "DimensionMismatch");
  CHECK(is_orthogonal(rotation(0.7)));
  CHECK_FALSE(is_orthogonal(shear));
  CHECK_FALSE(is_orthogonal(2.0 * Mat::Identity(2, 2)));
}
