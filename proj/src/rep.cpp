#include "crystalrep/rep.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace crystalrep {

CMat induced_rep(const InducedRepContext& ctx, const GroupElement& e) {
  const CrystalGroup& g = ctx.group;
  const int p = g.pg.order();
  const int n = g.dim();
  const int L = e.L;
  AffineIsometry ge = embed(g, e);

  CMat U = CMat::Zero(p, p);
  for (int M = 0; M < p; ++M) {
    int col = g.pg.mult[g.pg.inv[L]][M];  // L^{-1} M
    AffineIsometry conj = compose(inverse(gamma(g, M)), compose(ge, gamma(g, col)));
    if ((conj.L - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > tol::lattice ||
        !coords_of(g.lat, conj.t)) {
      fail("ProductNotInTranslations",
           "conjugated element is not a lattice translation, corrupt cross-section");
    }
    U(M, col) = character_eval(ctx.omega, conj.t);
  }
  return U;
}

CMat regular_rep(const PointGroup& pg, int L) {
  const int p = pg.order();
  CMat U = CMat::Zero(p, p);
  for (int M = 0; M < p; ++M) U(M, pg.mult[pg.inv[L]][M]) = 1.0;
  return U;
}

CMat psi_intertwiner(const InducedRepContext& ctx, int N) {
  const CrystalGroup& g = ctx.group;
  const int p = g.pg.order();
  CMat Psi = CMat::Zero(p, p);
  for (int M = 0; M < p; ++M) {
    Vec alpha = g.lat.B * cocycle(g, M, N).cast<double>();
    Psi(M, g.pg.mult[M][N]) = character_eval(ctx.omega, -alpha);
  }
  return Psi;
}

double unitarity_residual(const CMat& U) {
  return (U.adjoint() * U - CMat::Identity(U.rows(), U.cols())).cwiseAbs().maxCoeff();
}

std::vector<GroupElement> generating_set(const CrystalGroup& g) {
  std::vector<GroupElement> out;
  const int n = g.dim();
  for (int i = 0; i < n; ++i) {
    IVec y = IVec::Zero(n);
    y[i] = 1;
    out.push_back(GroupElement{0, y});
  }
  for (int L = 0; L < g.pg.order(); ++L) {
    out.push_back(GroupElement{L, IVec::Zero(n)});
  }
  return out;
}

std::vector<CMat> commutant_basis(const std::vector<CMat>& mats, double sv_threshold) {
  if (mats.empty()) fail("DimensionMismatch", "commutant of an empty set is everything");
  const int d = static_cast<int>(mats[0].rows());
  const int d2 = d * d;
  const int m = static_cast<int>(mats.size());

  // vec(AX - XA) = (I (x) A - A^T (x) I) vec(X), column major
  CMat stacked(m * d2, d2);
  for (int s = 0; s < m; ++s) {
    const CMat& A = mats[s];
    if (A.rows() != d || A.cols() != d) fail("DimensionMismatch", "mixed sizes in commutant");
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) {
        // block (i_block, j_block) of I (x) A is delta_{ij} A; of A^T (x) I
        // it is A(j, i) I
        stacked.block(s * d2 + i * d, j * d, d, d) =
            (i == j ? A : CMat::Zero(d, d)) - A(j, i) * CMat::Identity(d, d);
      }
    }
  }

  Eigen::BDCSVD<CMat> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double scale = sv.size() ? std::max(1.0, sv[0]) : 1.0;
  std::vector<CMat> basis;
  for (int c = 0; c < d2; ++c) {
    if (c < sv.size() && sv[c] > sv_threshold * scale) continue;
    CVec x = svd.matrixV().col(c);
    CMat X(d, d);
    for (int j = 0; j < d; ++j) X.col(j) = x.segment(j * d, d);
    basis.push_back(std::move(X));
  }
  return basis;
}

int commutant_dimension(const std::vector<CMat>& mats, double sv_threshold) {
  return static_cast<int>(commutant_basis(mats, sv_threshold).size());
}

bool is_irreducible(const InducedRepContext& ctx) {
  std::vector<CMat> images;
  for (const GroupElement& e : generating_set(ctx.group)) {
    images.push_back(induced_rep(ctx, e));
  }
  return commutant_dimension(images) == 1;
}

}  // namespace crystalrep
