#pragma once

#include "crystalrep/affine.hpp"
#include "crystalrep/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crystalrep {

// Finite subgroup of O(n) with composition resolved into index tables.
// Element 0 is always the identity; everything downstream (cross-sections,
// representation matrices, reports) follows this element order.
struct PointGroup {
  std::vector<Mat> elements;
  std::vector<std::vector<int>> mult;  // mult[i][j] = index of elements[i] * elements[j]
  std::vector<int> inv;
  int order() const { return static_cast<int>(elements.size()); }
  int dim() const { return elements.empty() ? 0 : static_cast<int>(elements[0].rows()); }
};

// Validates orthogonality and closure, sorts the identity to slot 0, and
// builds the tables. Throws PointGroupNotClosed or BadOrthogonalPart.
PointGroup build_point_group(std::vector<Mat> elements);

// Closure of a generator list under multiplication, identity first, then
// breadth first discovery order. Throws PointGroupNotClosed when the closure
// exceeds max_order.
PointGroup saturate_generators(const std::vector<Mat>& generators, int max_order = 96);

// Index of M in the element list, or -1.
int find_pg_index(const PointGroup& pg, const Mat& M, double tolerance = tol::matrix_match);

// x[L] is the translation part of the chosen coset representative
// gamma(L) = [x_L, L]. The identity must get x = 0 so that gamma(id) = id.
struct CrossSection {
  std::vector<Vec> x;
};

// Crystallographic group determined by lattice, point group and
// cross-section. Elements are stored in coset normal form [x_L + B y, L]
// with y integral, so exact arithmetic on y survives long products.
struct CrystalGroup {
  std::string name;
  Lattice lat;
  PointGroup pg;
  CrossSection cs;
  int dim() const { return lat.dim(); }
};

// Checks, in order: x_id = 0 (BadCrossSection), L b_i in the lattice for
// every point group element and basis column (LatticeNotInvariant), and the
// cocycle of every pair landing in the lattice (CocycleNotInLattice).
CrystalGroup build_crystal_group(Lattice lat, PointGroup pg, CrossSection cs,
                                 std::string name);

// Element [x_L + B y, L] in coset normal form.
struct GroupElement {
  int L = 0;
  IVec y;
};

AffineIsometry embed(const CrystalGroup& g, const GroupElement& e);
AffineIsometry gamma(const CrystalGroup& g, int L);
GroupElement identity_element(const CrystalGroup& g);
GroupElement element_mul(const CrystalGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement element_inv(const CrystalGroup& g, const GroupElement& a);

// Lattice coordinates of the translation alpha(L, M) measuring how far the
// cross-section is from being a homomorphism:
// gamma(L) gamma(M) = gamma(LM) alpha(L, M).
IVec cocycle(const CrystalGroup& g, int L, int M);

// Point group part of an element (the quotient map).
int quotient_Q(const GroupElement& e);

// Coset normal form of an arbitrary isometry when it belongs to the group,
// empty otherwise.
std::optional<GroupElement> membership(const CrystalGroup& g, const AffineIsometry& a);

// True when every point group element admits the representative [0, L],
// equivalently when some choice of cross-section kills the cocycle.
bool is_symmorphic(const CrystalGroup& g);

// Lattice coordinates of L . (B y); equals the translation part of
// gamma(L) [B y, id] gamma(L)^{-1}, independent of the cross-section.
IVec conjugation_action(const CrystalGroup& g, int L, const IVec& y);

// Group over the dual lattice with the same point group and zero
// cross-section. This one is always symmorphic.
CrystalGroup dual_crystal_group(const CrystalGroup& g);

// Built in plane groups: p1, pm, pg, p4m. Throws UnknownGroupName.
CrystalGroup catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace crystalrep
