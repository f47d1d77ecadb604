#include "crystalrep/decomp.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <random>

namespace crystalrep {

FrequencyFunction gaussian_frequency(int n) {
  (void)n;
  constexpr double pi = 0.5 * two_pi;
  return FrequencyFunction{
      [](const Vec& w) { return Complex(std::exp(-pi * w.squaredNorm()), 0.0); }, "gaussian"};
}

FrequencyFunction bump_frequency(int n) {
  (void)n;
  return FrequencyFunction{[](const Vec& w) {
                             double r2 = w.squaredNorm();
                             if (r2 >= 1.0) return Complex(0.0, 0.0);
                             return Complex(std::exp(-1.0 / (1.0 - r2)), 0.0);
                           },
                           "bump"};
}

FrequencyFunction pi_hat_apply(const CrystalGroup& g, const GroupElement& e,
                               FrequencyFunction phi) {
  AffineIsometry iso = embed(g, e);
  Mat rot = iso.L;
  Vec x = iso.t;
  auto base = phi.eval;
  return FrequencyFunction{[rot, x, base](const Vec& w) {
                             Vec src = rot.transpose() * w;
                             return character_eval(src, x) * base(src);
                           },
                           "shift[" + phi.tag + "]"};
}

int Truncation::find(const IVec& k) const {
  std::vector<int> key(k.data(), k.data() + k.size());
  auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

Truncation make_truncation(const ParamDomain& pd, double radius, int grid_per_axis) {
  Truncation tr;
  const Lattice& dual = pd.gstar.lat;
  for (const LatticePoint& pt : enumerate_points(dual, radius)) {
    std::vector<int> key(pt.k.data(), pt.k.data() + pt.k.size());
    tr.index.emplace(std::move(key), static_cast<int>(tr.coords.size()));
    tr.coords.push_back(pt.k);
    tr.points.push_back(pt.x);
  }

  // the window must close under the point group or the base change stage
  // would push mass outside it
  for (int L = 0; L < pd.group.pg.order(); ++L) {
    for (const Vec& z : tr.points) {
      auto k = coords_of(dual, pd.group.pg.elements[L] * z);
      if (!k || tr.find(*k) < 0) {
        fail("TruncationNotInvariant", "point group image of a window point left the window");
      }
    }
  }

  const int n = pd.group.dim();
  if (n == 2 && !pd.R_vertices.empty()) {
    Vec lo = pd.R_vertices.front(), hi = pd.R_vertices.front();
    for (const Vec& v : pd.R_vertices) {
      lo = lo.cwiseMin(v);
      hi = hi.cwiseMax(v);
    }
    for (int i = 0; i < grid_per_axis; ++i) {
      for (int j = 0; j < grid_per_axis; ++j) {
        Vec w(2);
        w[0] = lo[0] + (i + 0.5) / grid_per_axis * (hi[0] - lo[0]);
        w[1] = lo[1] + (j + 0.5) / grid_per_axis * (hi[1] - lo[1]);
        if (strictly_inside(pd.R, w, 1e-7)) tr.omegas.push_back(std::move(w));
      }
    }
  } else {
    // no vertex bounding box away from the plane; jitter around the center
    std::mt19937_64 rng(0x03e6a5);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    int want = grid_per_axis * grid_per_axis;
    for (int tries = 0; tries < 10000 && static_cast<int>(tr.omegas.size()) < want; ++tries) {
      Vec w(n);
      for (int i = 0; i < n; ++i) w[i] = pd.center[i] + 0.5 * pd.circumradius * unit(rng);
      if (strictly_inside(pd.R, w, 1e-7)) tr.omegas.push_back(std::move(w));
    }
  }
  if (tr.omegas.empty()) fail("BadParamDomain", "no interior frequency samples found");
  return tr;
}

double max_abs_diff(const SampledField& a, const SampledField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.slices.size(); ++i) {
    m = std::max(m, (a.slices[i] - b.slices[i]).cwiseAbs().maxCoeff());
  }
  return m;
}

double max_abs(const SampledField& a) {
  double m = 0.0;
  for (const CMat& s : a.slices) m = std::max(m, s.cwiseAbs().maxCoeff());
  return m;
}

Complex rho_eval(const FrequencyFunction& phi, const Vec& omega, const Vec& z, const Mat& M) {
  return phi.eval(M * omega + z);
}

Complex m1_eval(const CrystalGroup& g, const GroupElement& e, const KernelEvaluator& psi,
                const Vec& omega, const Vec& z, const Mat& M) {
  AffineIsometry iso = embed(g, e);
  Vec Lx = iso.L * iso.t;
  return character_eval(z, Lx) * character_eval(omega, M.transpose() * Lx) *
         psi(omega, iso.L.transpose() * z, iso.L.transpose() * M);
}

PiField sigma1_apply(const CrystalGroup& g, const GroupElement& e, const Truncation& tr,
                     const PiField& f) {
  AffineIsometry iso = embed(g, e);
  Vec Lx = iso.L * iso.t;
  const int p = g.pg.order();
  int Linv = g.pg.inv[e.L];
  PiField out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = CVec(p);
    for (int M = 0; M < p; ++M) {
      Complex phase = character_eval(tr.omegas[i], g.pg.elements[M].transpose() * Lx);
      out[i][M] = phase * f[i][g.pg.mult[Linv][M]];
    }
  }
  return out;
}

namespace {

// per point group element, the permutation iz -> index of L . z
std::vector<int> window_permutation(const CrystalGroup& g, const Truncation& tr, int L) {
  Lattice dual = dual_lattice(g.lat);
  std::vector<int> perm(tr.size());
  for (int iz = 0; iz < tr.size(); ++iz) {
    auto k = coords_of(dual, g.pg.elements[L] * tr.points[iz]);
    int j = k ? tr.find(*k) : -1;
    if (j < 0) fail("TruncationNotInvariant", "window is not point group invariant");
    perm[iz] = j;
  }
  return perm;
}

}  // namespace

CVec sigma2_apply(const CrystalGroup& g, const GroupElement& e, const Truncation& tr,
                  const CVec& f) {
  AffineIsometry iso = embed(g, e);
  std::vector<int> to_src = window_permutation(g, tr, g.pg.inv[e.L]);
  CVec out(tr.size());
  for (int iz = 0; iz < tr.size(); ++iz) {
    // new(z) = e^{2 pi i (L^{-1} z) . x} old(L^{-1} z)
    out[iz] = character_eval(tr.points[to_src[iz]], iso.t) * f[to_src[iz]];
  }
  return out;
}

PiField theta_apply(const CrystalGroup& g, const Truncation& tr, const PiField& f,
                    Direction dir) {
  const double sign = dir == Direction::forward ? -1.0 : 1.0;
  PiField out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = CVec(f[i].size());
    for (int M = 0; M < f[i].size(); ++M) {
      out[i][M] = character_eval(tr.omegas[i], sign * g.cs.x[M]) * f[i][M];
    }
  }
  return out;
}

SampledField theta_plus_apply(const CrystalGroup& g, const Truncation& tr,
                              const SampledField& f, Direction dir) {
  const double sign = dir == Direction::forward ? -1.0 : 1.0;
  SampledField out;
  out.slices.reserve(f.slices.size());
  for (std::size_t i = 0; i < f.slices.size(); ++i) {
    CMat s = f.slices[i];
    for (int M = 0; M < s.rows(); ++M) {
      s.row(M) *= character_eval(tr.omegas[i], sign * g.cs.x[M]);
    }
    out.slices.push_back(std::move(s));
  }
  return out;
}

SampledField v_apply(const CrystalGroup& g, const Truncation& tr, const SampledField& f,
                     Direction dir) {
  const int p = g.pg.order();
  const int s = tr.size();
  SampledField out;
  out.slices.assign(f.slices.size(), CMat::Zero(p, s));
  for (int M = 0; M < p; ++M) {
    std::vector<int> to_Mz = window_permutation(g, tr, M);
    for (std::size_t i = 0; i < f.slices.size(); ++i) {
      for (int iw = 0; iw < s; ++iw) {
        if (dir == Direction::forward) {
          // new(w) = e^{-2 pi i w . x_M} old(M w)
          out.slices[i](M, iw) =
              character_eval(tr.points[iw], -g.cs.x[M]) * f.slices[i](M, to_Mz[iw]);
        } else {
          // new(M w) = e^{+2 pi i w . x_M} old(w), written with source index w
          out.slices[i](M, to_Mz[iw]) =
              character_eval(tr.points[iw], g.cs.x[M]) * f.slices[i](M, iw);
        }
      }
    }
  }
  return out;
}

SampledField chain_forward(const CrystalGroup& g, const FrequencyFunction& phi,
                           const Truncation& tr) {
  const int p = g.pg.order();
  const int s = tr.size();
  SampledField out;
  out.slices.reserve(tr.n_omega());
  for (int i = 0; i < tr.n_omega(); ++i) {
    CMat slice(p, s);
    for (int M = 0; M < p; ++M) {
      for (int iw = 0; iw < s; ++iw) {
        Vec shifted = tr.omegas[i] + tr.points[iw];
        slice(M, iw) =
            character_eval(shifted, -g.cs.x[M]) * phi.eval(g.pg.elements[M] * shifted);
      }
    }
    out.slices.push_back(std::move(slice));
  }
  return out;
}

SampledField chain_forward_staged(const CrystalGroup& g, const FrequencyFunction& phi,
                                  const Truncation& tr) {
  const int p = g.pg.order();
  const int s = tr.size();
  // pullback through the orbit map, then the reindex stages which are
  // identities on the sampled tensor
  SampledField field;
  field.slices.reserve(tr.n_omega());
  for (int i = 0; i < tr.n_omega(); ++i) {
    CMat slice(p, s);
    for (int M = 0; M < p; ++M) {
      for (int iz = 0; iz < s; ++iz) {
        slice(M, iz) = rho_eval(phi, tr.omegas[i], tr.points[iz], g.pg.elements[M]);
      }
    }
    field.slices.push_back(std::move(slice));
  }
  // cross-section phase twist, then base change
  return v_apply(g, tr, theta_plus_apply(g, tr, field, Direction::forward),
                 Direction::forward);
}

SampledField tau_apply(const CrystalGroup& g, const GroupElement& e, const Truncation& tr,
                       const SampledField& f) {
  SampledField out;
  out.slices.reserve(f.slices.size());
  for (std::size_t i = 0; i < f.slices.size(); ++i) {
    CMat U = induced_rep(InducedRepContext{g, tr.omegas[i]}, e);
    out.slices.push_back(U * f.slices[i]);
  }
  return out;
}

double intertwining_residual(const CrystalGroup& g, const GroupElement& e,
                             const FrequencyFunction& phi, const Truncation& tr) {
  SampledField lhs = chain_forward(g, pi_hat_apply(g, e, phi), tr);
  SampledField rhs = tau_apply(g, e, tr, chain_forward(g, phi, tr));
  return max_abs_diff(lhs, rhs);
}

namespace {

CMat kron_left_identity(int p, const CMat& T) {
  const int s = static_cast<int>(T.rows());
  CMat out = CMat::Zero(p * s, p * T.cols());
  for (int M = 0; M < p; ++M) out.block(M * s, M * T.cols(), s, T.cols()) = T;
  return out;
}

CMat kron_right_identity(const CMat& U, int s) {
  const int p = static_cast<int>(U.rows());
  CMat out = CMat::Zero(p * s, U.cols() * s);
  for (int M = 0; M < p; ++M) {
    for (int N = 0; N < U.cols(); ++N) {
      out.block(M * s, N * s, s, s) = U(M, N) * CMat::Identity(s, s);
    }
  }
  return out;
}

void check_orthonormal(const CMat& B) {
  if (B.cols() == 0) return;
  CMat gram = B.adjoint() * B;
  if ((gram - CMat::Identity(B.cols(), B.cols())).cwiseAbs().maxCoeff() > tol::unitarity) {
    fail("NonOrthonormalBasis", "range function columns are not orthonormal");
  }
}

}  // namespace

RangeFunction tensor_range(const Truncation& tr, int pi_order, const CMat& F_basis) {
  check_orthonormal(F_basis);
  RangeFunction rf;
  CMat lifted = kron_left_identity(pi_order, F_basis);
  rf.bases.assign(tr.n_omega(), lifted);
  rf.tensor_factor = std::vector<CMat>(tr.n_omega(), F_basis);
  return rf;
}

RangeFunction make_range_function(std::vector<CMat> bases) {
  for (const CMat& B : bases) check_orthonormal(B);
  RangeFunction rf;
  rf.bases = std::move(bases);
  return rf;
}

std::vector<CMat> range_projection(const RangeFunction& rf) {
  std::vector<CMat> out;
  out.reserve(rf.bases.size());
  for (const CMat& B : rf.bases) {
    check_orthonormal(B);
    out.push_back(B * B.adjoint());
  }
  return out;
}

InvarianceReport invariance_report(const RangeFunction& rf, const CrystalGroup& g,
                                   const std::vector<GroupElement>& elements,
                                   const Truncation& tr, double threshold) {
  std::vector<CMat> proj = range_projection(rf);
  const int s = tr.size();
  InvarianceReport rep;
  for (std::size_t i = 0; i < proj.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      CMat U = kron_right_identity(
          induced_rep(InducedRepContext{g, tr.omegas[i]}, elements[j]), s);
      double r = (proj[i] * U - U * proj[i]).cwiseAbs().maxCoeff();
      if (r > rep.max_residual) {
        rep.max_residual = r;
        rep.worst_sample = static_cast<int>(i);
        rep.worst_element = static_cast<int>(j);
      }
    }
  }
  rep.invariant = rep.max_residual <= threshold;
  return rep;
}

std::optional<CMat> tensor_form_check(const RangeFunction& rf, int sample, int pi_order,
                                      double tolerance) {
  const CMat& B = rf.bases.at(sample);
  const int s = static_cast<int>(B.rows()) / pi_order;
  CMat P = B * B.adjoint();

  // average the point group diagonal blocks; for a genuine tensor subspace
  // every block equals the factor projection and the off-diagonal blocks
  // vanish
  CMat T = CMat::Zero(s, s);
  for (int M = 0; M < pi_order; ++M) {
    T += P.block(M * s, M * s, s, s);
  }
  T /= static_cast<double>(pi_order);

  if ((T - T.adjoint()).cwiseAbs().maxCoeff() > tolerance) return std::nullopt;
  if ((T * T - T).cwiseAbs().maxCoeff() > tolerance) return std::nullopt;
  if ((P - kron_left_identity(pi_order, T)).cwiseAbs().maxCoeff() > tolerance) {
    return std::nullopt;
  }

  Eigen::SelfAdjointEigenSolver<CMat> eig(0.5 * (T + T.adjoint()));
  CMat basis(s, 0);
  for (int c = 0; c < s; ++c) {
    if (eig.eigenvalues()[c] > 0.5) {
      basis.conservativeResize(s, basis.cols() + 1);
      basis.col(basis.cols() - 1) = eig.eigenvectors().col(c);
    }
  }
  return basis;
}

int commutant_tensor_dimension(const InducedRepContext& ctx, int k) {
  std::vector<CMat> mats;
  for (const GroupElement& e : generating_set(ctx.group)) {
    mats.push_back(kron_right_identity(induced_rep(ctx, e), k));
  }
  return commutant_dimension(mats);
}

double subspace_angle_sin(const CMat& B, const CMat& C) {
  CMat residual = C - B * (B.adjoint() * C);
  if (residual.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(residual);
  return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

}  // namespace crystalrep
