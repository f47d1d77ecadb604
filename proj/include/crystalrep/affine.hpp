#pragma once

#include "crystalrep/common.hpp"

namespace crystalrep {

// Euclidean isometry stored as a pair [t, L] with L orthogonal, acting by
//
//   z  |->  L(z + t).
//
// Under this convention the composition law is
//
//   [x, L][y, M] = [M^{-1} x + y, L M],
//
// the inverse is [-L x, L^{-1}], and the identity is [0, I]. The translation
// is applied before the orthogonal part, which is opposite to the usual
// semidirect product order; with it, coset representatives of a space group
// multiply so that their defect is a plain translation on the right. All
// multiplication code in this library assumes this convention, see README.
struct AffineIsometry {
  Vec t;
  Mat L;
  int dim() const { return static_cast<int>(t.size()); }
};

// Max-norm test of L^T L = I together with |det L| = 1.
bool is_orthogonal(const Mat& L, double tolerance = tol::group_law);

// Throws BadOrthogonalPart / DimensionMismatch when the pair is not a valid
// isometry of R^n.
AffineIsometry make_affine(Vec t, Mat L, double tolerance = tol::group_law);

AffineIsometry affine_identity(int n);
AffineIsometry compose(const AffineIsometry& g, const AffineIsometry& h);
AffineIsometry inverse(const AffineIsometry& g);
Vec apply(const AffineIsometry& g, const Vec& z);

bool approx_equal(const AffineIsometry& a, const AffineIsometry& b,
                  double tolerance = tol::group_law);

}  // namespace crystalrep
