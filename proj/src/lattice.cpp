#include "crystalrep/lattice.hpp"

#include <cmath>

namespace crystalrep {

Lattice make_lattice(Mat B) {
  if (B.rows() != B.cols() || B.rows() == 0) {
    fail("SingularBasis", "lattice basis must be square and nonempty");
  }
  if (std::abs(B.determinant()) <= 1e-12) {
    fail("SingularBasis", "basis determinant " + std::to_string(B.determinant()) +
                              " is numerically zero");
  }
  return Lattice{std::move(B)};
}

Lattice dual_lattice(const Lattice& lat) {
  return Lattice{lat.B.transpose().inverse()};
}

std::optional<IVec> coords_of(const Lattice& lat, const Vec& x, double tolerance) {
  Vec c = lat.B.colPivHouseholderQr().solve(x);
  IVec k(c.size());
  for (int i = 0; i < c.size(); ++i) {
    double r = std::round(c[i]);
    if (std::abs(c[i] - r) > tolerance) return std::nullopt;
    k[i] = static_cast<int>(r);
  }
  return k;
}

namespace {

// Walks the integer box |k_i| <= kmax (or centered at base) in lexicographic
// order, keeping points whose embedding lands in the ball.
std::vector<LatticePoint> collect_ball(const Lattice& lat, const Vec& center, double radius) {
  const int n = lat.dim();
  // |k - B^{-1} c|_inf <= ||B^{-1}||_inf |Bk - c|_2 with the induced max
  // row sum norm, so a box of that half width around B^{-1} c covers the
  // ball.
  Mat Binv = lat.B.inverse();
  Vec c0 = Binv * center;
  double norm_inf = Binv.cwiseAbs().rowwise().sum().maxCoeff();
  double halfwidth = radius * norm_inf + 1e-9;

  std::vector<int> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = static_cast<int>(std::floor(c0[i] - halfwidth));
    hi[i] = static_cast<int>(std::ceil(c0[i] + halfwidth));
  }

  std::vector<LatticePoint> out;
  IVec k(n);
  for (int i = 0; i < n; ++i) k[i] = lo[i];
  const double r2 = radius * radius;
  while (true) {
    Vec x = lat.B * k.cast<double>();
    if ((x - center).squaredNorm() <= r2 + 1e-12) {
      out.push_back(LatticePoint{k, std::move(x)});
    }
    // odometer increment, last coordinate fastest, gives lexicographic order
    int i = n - 1;
    while (i >= 0) {
      if (k[i] < hi[i]) {
        ++k[i];
        break;
      }
      k[i] = lo[i];
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

std::vector<LatticePoint> enumerate_points(const Lattice& lat, double radius) {
  return collect_ball(lat, Vec::Zero(lat.dim()), radius);
}

std::vector<LatticePoint> enumerate_points_near(const Lattice& lat, const Vec& center,
                                                double radius) {
  return collect_ball(lat, center, radius);
}

Complex character_eval(const Vec& omega, const Vec& x) {
  double phase = two_pi * omega.dot(x);
  return Complex(std::cos(phase), std::sin(phase));
}

}  // namespace crystalrep
