#include "crystalrep/affine.hpp"

namespace crystalrep {

bool is_orthogonal(const Mat& L, double tolerance) {
  if (L.rows() != L.cols() || L.rows() == 0) return false;
  Mat defect = L.transpose() * L - Mat::Identity(L.rows(), L.cols());
  if (defect.cwiseAbs().maxCoeff() > tolerance) return false;
  return std::abs(std::abs(L.determinant()) - 1.0) <= tolerance;
}

AffineIsometry make_affine(Vec t, Mat L, double tolerance) {
  if (L.rows() != t.size()) {
    fail("DimensionMismatch", "translation has size " + std::to_string(t.size()) +
                                  " but the orthogonal part is " + std::to_string(L.rows()) +
                                  "x" + std::to_string(L.cols()));
  }
  if (!is_orthogonal(L, tolerance)) {
    fail("BadOrthogonalPart", "matrix is not orthogonal within " + std::to_string(tolerance));
  }
  return AffineIsometry{std::move(t), std::move(L)};
}

AffineIsometry affine_identity(int n) {
  return AffineIsometry{Vec::Zero(n), Mat::Identity(n, n)};
}

AffineIsometry compose(const AffineIsometry& g, const AffineIsometry& h) {
  // [x, L][y, M] = [M^{-1} x + y, L M]; M^{-1} = M^T for orthogonal M.
  return AffineIsometry{h.L.transpose() * g.t + h.t, g.L * h.L};
}

AffineIsometry inverse(const AffineIsometry& g) {
  return AffineIsometry{-(g.L * g.t), g.L.transpose()};
}

Vec apply(const AffineIsometry& g, const Vec& z) { return g.L * (z + g.t); }

bool approx_equal(const AffineIsometry& a, const AffineIsometry& b, double tolerance) {
  if (a.dim() != b.dim()) return false;
  return (a.t - b.t).cwiseAbs().maxCoeff() <= tolerance &&
         (a.L - b.L).cwiseAbs().maxCoeff() <= tolerance;
}

}  // namespace crystalrep
