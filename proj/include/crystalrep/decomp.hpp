#pragma once

#include "crystalrep/rep.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crystalrep {

// Scalar function of frequency with a closed form evaluator, playing the
// role of a Fourier transform. The tag survives into reports.
struct FrequencyFunction {
  std::function<Complex(const Vec&)> eval;
  std::string tag;
};

FrequencyFunction gaussian_frequency(int n);        // exp(-pi |w|^2)
FrequencyFunction bump_frequency(int n);            // exp(-1/(1-|w|^2)) inside the unit ball

// Shift representation on the frequency side:
// (pi_hat[x,L] phi)(w) = e^{2 pi i (L^{-1} w) . x} phi(L^{-1} w).
FrequencyFunction pi_hat_apply(const CrystalGroup& g, const GroupElement& e,
                               FrequencyFunction phi);

// Finite window for the decomposition chain: a point group invariant ball S
// of dual lattice points and a list of frequency samples interior to the
// cell R. All identities downstream are checked pointwise on this grid, so
// no quadrature enters.
struct Truncation {
  std::vector<IVec> coords;           // integer coordinates in the dual basis
  std::vector<Vec> points;            // embedded dual lattice points
  std::vector<Vec> omegas;            // frequency samples, strictly inside R
  std::map<std::vector<int>, int> index;
  int size() const { return static_cast<int>(points.size()); }
  int n_omega() const { return static_cast<int>(omegas.size()); }
  int find(const IVec& k) const;      // -1 when absent
};

// Ball of the given radius in the dual lattice plus a grid_per_axis^n grid
// of samples filtered to the open cell. Throws TruncationNotInvariant if the
// ball fails to close under the point group, which only happens for
// non-orthogonal data.
Truncation make_truncation(const ParamDomain& pd, double radius, int grid_per_axis);

// Tensor sampled over (omega, M, z): slice i is the |Pi| x |S| matrix at
// frequency sample i, row = point group index, column = dual point index.
struct SampledField {
  std::vector<CMat> slices;
};

double max_abs_diff(const SampledField& a, const SampledField& b);
double max_abs(const SampledField& a);

// Function sampled over (omega, M) only, one length |Pi| vector per sample.
using PiField = std::vector<CVec>;

// Evaluator for kernels psi(omega, z, M) appearing in the first chain stage.
using KernelEvaluator = std::function<Complex(const Vec& omega, const Vec& z, const Mat& M)>;

// First chain stage, pulling phi back through the orbit map:
// (rho phi)(omega, z, M) = phi(M omega + z).
Complex rho_eval(const FrequencyFunction& phi, const Vec& omega, const Vec& z, const Mat& M);

// Conjugate of pi_hat under rho:
// (m1[x,L] psi)(omega, z, M)
//   = chi_z(L x) chi_omega(M^{-1} L x) psi(omega, L^{-1} z, L^{-1} M).
Complex m1_eval(const CrystalGroup& g, const GroupElement& e, const KernelEvaluator& psi,
                const Vec& omega, const Vec& z, const Mat& M);

enum class Direction { forward, inverse };

// Factor representations that m1 splits into across the tensor product.
// sigma1 acts on the point group leg, sigma2 on the dual lattice leg.
PiField sigma1_apply(const CrystalGroup& g, const GroupElement& e, const Truncation& tr,
                     const PiField& f);
CVec sigma2_apply(const CrystalGroup& g, const GroupElement& e, const Truncation& tr,
                  const CVec& f);

// Cross-section phase twist, diagonal in every index:
// forward multiplies entry (omega, M) by e^{-2 pi i omega . x_M}. Symmorphic
// groups have x = 0 throughout, so theta is the identity there.
PiField theta_apply(const CrystalGroup& g, const Truncation& tr, const PiField& f,
                    Direction dir);
SampledField theta_plus_apply(const CrystalGroup& g, const Truncation& tr,
                              const SampledField& f, Direction dir);

// Base change that absorbs sigma2 into the dual point index:
// forward: new(omega, M, w) = e^{-2 pi i w . x_M} old(omega, M, M w).
// Source points M w outside the window read as zero; the window is point
// group invariant so this never loses mass.
SampledField v_apply(const CrystalGroup& g, const Truncation& tr, const SampledField& f,
                     Direction dir);

// Full decomposition chain in closed form:
// c(omega, M, w) = e^{-2 pi i (omega + w) . x_M} phi(M (omega + w)).
SampledField chain_forward(const CrystalGroup& g, const FrequencyFunction& phi,
                           const Truncation& tr);

// Same map, but literally composing the stages (pullback, reindex, phase
// twist, base change). Agrees with chain_forward to machine precision; kept
// as the structural cross-check.
SampledField chain_forward_staged(const CrystalGroup& g, const FrequencyFunction& phi,
                                  const Truncation& tr);

// Block diagonal model representation: at each frequency sample the induced
// representation acts on the point group leg and the dual point leg rides
// along untouched.
SampledField tau_apply(const CrystalGroup& g, const GroupElement& e, const Truncation& tr,
                       const SampledField& f);

// Max entry of chain(pi_hat[e] phi) - tau[e] chain(phi) over the window.
double intertwining_residual(const CrystalGroup& g, const GroupElement& e,
                             const FrequencyFunction& phi, const Truncation& tr);

// Measurable field of subspaces of C^{Pi x S}, one orthonormal column basis
// per frequency sample. Vectors are flattened point group major: the
// coefficient of (M, z) lives at M |S| + z. When the field was built as
// l2(Pi) tensor F the |S| x r factor bases are kept alongside.
struct RangeFunction {
  std::vector<CMat> bases;
  std::optional<std::vector<CMat>> tensor_factor;
};

// Constant tensor field J(omega) = l2(Pi) (x) span(F_basis). F_basis must
// have orthonormal columns.
RangeFunction tensor_range(const Truncation& tr, int pi_order, const CMat& F_basis);

// Arbitrary field from explicit per-sample bases; columns are checked for
// orthonormality (NonOrthonormalBasis).
RangeFunction make_range_function(std::vector<CMat> bases);

// P(omega) = B(omega) B(omega)*.
std::vector<CMat> range_projection(const RangeFunction& rf);

struct InvarianceReport {
  double max_residual = 0.0;
  bool invariant = false;
  int worst_sample = -1;   // frequency sample index of the worst commutator
  int worst_element = -1;  // position in the element list
};

// Max entry of [P(omega), U_omega[e] (x) I_S] over samples and elements,
// compared against the verdict threshold.
InvarianceReport invariance_report(const RangeFunction& rf, const CrystalGroup& g,
                                   const std::vector<GroupElement>& elements,
                                   const Truncation& tr,
                                   double threshold = tol::invariance);

// Decides whether the subspace at one sample has the form l2(Pi) (x) F and
// recovers an orthonormal basis of F when it does. Criterion: the partial
// trace of the projection over the point group leg, divided by |Pi|, must
// itself be a projection T with P = I (x) T.
std::optional<CMat> tensor_form_check(const RangeFunction& rf, int sample, int pi_order,
                                      double tolerance = tol::invariance);

// Dimension of the commutant of { U[e] (x) I_k : e in generating set }. At
// an irreducible frequency this is k^2, the multiplicity algebra of a
// k-fold ampliation.
int commutant_tensor_dimension(const InducedRepContext& ctx, int k);

// sin of the largest principal angle between the column spans of two
// orthonormal bases. Computed from (I - B B*) C, which stays accurate for
// nearly equal spans where the cosine formulation loses digits.
double subspace_angle_sin(const CMat& B, const CMat& C);

}  // namespace crystalrep
