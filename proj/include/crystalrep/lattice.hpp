#pragma once

#include "crystalrep/common.hpp"

#include <optional>
#include <vector>

namespace crystalrep {

// Full rank lattice B Z^n. Columns of B are the primitive vectors.
struct Lattice {
  Mat B;
  int dim() const { return static_cast<int>(B.rows()); }
  double covolume() const { return std::abs(B.determinant()); }
};

// Throws SingularBasis when |det B| is below the rank tolerance.
Lattice make_lattice(Mat B);

struct LatticePoint {
  IVec k;  // integer coordinates
  Vec x;   // embedded point x = B k
};

// Frequencies whose characters are trivial on the original lattice; the
// basis is (B^T)^{-1}, so pairing a column of B with a column of the dual
// basis gives a Kronecker delta.
Lattice dual_lattice(const Lattice& lat);

// Integer coordinates of x when x is a lattice point, empty otherwise.
// Decided by rounding B^{-1} x, which is adequate for the well conditioned
// bases used here.
std::optional<IVec> coords_of(const Lattice& lat, const Vec& x,
                              double tolerance = tol::lattice);

// All lattice points with |B k| <= radius (Euclidean), in lexicographic
// order of the coordinate vector k.
std::vector<LatticePoint> enumerate_points(const Lattice& lat, double radius);

// Same, but for |B k - center| <= radius.
std::vector<LatticePoint> enumerate_points_near(const Lattice& lat, const Vec& center,
                                                double radius);

// e^{2 pi i omega . x}
Complex character_eval(const Vec& omega, const Vec& x);

}  // namespace crystalrep
