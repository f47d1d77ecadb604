#pragma once

#include "crystalrep/domain.hpp"

#include <vector>

namespace crystalrep {

// Everything needed to evaluate the induced representation at one frequency:
// the group fixes the cross-section, omega fixes the character. Matrices are
// |Pi| x |Pi| with rows and columns indexed by the point group element order.
struct InducedRepContext {
  CrystalGroup group;
  Vec omega;
};

// Representation induced from the character omega of the translation
// subgroup. For an element with point part L the only nonzero entry of row M
// sits in column L^{-1} M and equals the character of the translation part
// of gamma(M)^{-1} [x, L] gamma(L^{-1} M). That triple product must be a
// pure lattice translation; anything else throws ProductNotInTranslations.
CMat induced_rep(const InducedRepContext& ctx, const GroupElement& e);

// Left regular representation of the point group, the omega-free skeleton of
// the above: permutation matrix with entry (M, L^{-1} M) = 1.
CMat regular_rep(const PointGroup& pg, int L);

// Unitary relating the representation at omega to the one at N . omega:
// entry (M, M N) is the character value at -alpha(M, N). Conjugating
// induced_rep by it matches the representation built at the rotated
// frequency.
CMat psi_intertwiner(const InducedRepContext& ctx, int N);

// || U* U - I ||_max
double unitarity_residual(const CMat& U);

// Lattice basis translations followed by the coset representatives; these
// generate the group, so a matrix commuting with their images commutes with
// the whole representation.
std::vector<GroupElement> generating_set(const CrystalGroup& g);

// Orthonormal basis (Frobenius inner product) of { X : X A = A X for all A },
// computed as the null space of the stacked Sylvester system with the given
// singular value threshold.
std::vector<CMat> commutant_basis(const std::vector<CMat>& mats,
                                  double sv_threshold = tol::rank_svd);
int commutant_dimension(const std::vector<CMat>& mats,
                        double sv_threshold = tol::rank_svd);

// Schur criterion: commutant of the generating set's image is trivial.
bool is_irreducible(const InducedRepContext& ctx);

}  // namespace crystalrep
