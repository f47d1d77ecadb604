#pragma once

#include "crystalrep/crystal.hpp"

#include <utility>
#include <vector>

namespace crystalrep {

// { y : normal . y < offset } when open, <= when closed. The normal is kept
// at unit length so that signed margins are Euclidean distances.
struct HalfSpace {
  Vec normal;
  double offset = 0.0;
  bool open = true;
};

struct HPolytope {
  std::vector<HalfSpace> halfspaces;
  int dim = 0;
};

// normal . y - offset, negative inside.
double signed_margin(const HalfSpace& h, const Vec& y);

// Membership with a tolerance band around each boundary. A point within
// `band` of some hyperplane counts as boundary: weakly inside but not
// strictly inside, whatever the open flags say.
bool strictly_inside(const HPolytope& p, const Vec& y, double band = tol::boundary);
bool weakly_inside(const HPolytope& p, const Vec& y, double band = tol::boundary);

// Open half-space of points closer to a than to g.a. Throws
// DegenerateBisector when g moves a by less than 1e-10.
HalfSpace bisector_halfspace(const Vec& a, const AffineIsometry& g);

// Vertices by exhausting n-subsets of the constraints. Combinatorial cost,
// fine at the sizes produced here; supports n <= 3 and throws
// DimensionUnsupported above that. No ordering guarantee.
std::vector<Vec> enumerate_vertices(const HPolytope& p);

// Planar vertex cycle in counter-clockwise order. Throws Unbounded when the
// constraint normals leave an open half-plane uncovered, EmptyInterior when
// the feasible set has no 2-dimensional interior.
std::vector<Vec> vertices_2d(const HPolytope& p);

// Shoelace area of the vertex cycle.
double area_2d(const HPolytope& p);

// Dirichlet fundamental domain of the group at base point a: the open cell
// of points strictly closer to a than to any other orbit point. Constraints
// come from all elements moving a by at most a cutoff; the cutoff starts at
// 3 max_i |b_i| (or the given value) and doubles until twice the cell
// circumradius drops below it, which certifies that discarded elements only
// produce redundant half-spaces. Throws NontrivialStabilizer when some
// nonidentity element fixes a, UnboundedAfterCutoff when the cutoff cap 2^10
// is reached without certification.
HPolytope dirichlet_domain(const CrystalGroup& g, const Vec& a, double cutoff = 0.0);

// Base point with trivial stabilizer for every catalog group, componentwise
// (0.3, 0.2, 0.11, ...).
Vec default_center(int n);

// All group elements g whose orbit point g.a is nearest to y, ties resolved
// within tie_band. For each such g the inverse carries y into the closed
// Dirichlet cell at a, so a unique winner means y reduces uniquely.
std::vector<GroupElement> nearest_orbit_elements(const CrystalGroup& g, const Vec& a,
                                                 const Vec& y, double tie_band);

// Parameter domain for the frequency variable: R is the Dirichlet cell of
// the dual group at `center`, and the domain itself is the union of the
// point group copies L.R together with a deterministic slice of their
// boundaries. It is a measurable transversal of R^n modulo the dual lattice.
struct ParamDomain {
  CrystalGroup group;               // original group
  CrystalGroup gstar;               // dual group
  Vec center;
  HPolytope R;
  std::vector<Vec> R_vertices;      // populated for n = 2
  double circumradius = 0.0;        // max distance from center over closure of R
  std::vector<HPolytope> pi_copies; // pi_copies[L] = L . R, same element order
};

// Throws NontrivialStabilizer when the center is fixed by part of the dual
// group, which would make R lower dimensional.
ParamDomain build_param_domain(const CrystalGroup& g, const Vec& a = Vec());

// Unique representative of nu modulo the dual lattice inside the parameter
// domain. Interior hits are unique outright; boundary hits are resolved by
// picking the lexicographically smallest candidate coordinate tuple. Throws
// ReductionFailed if no translate lands in the closed domain.
Vec reduce_to_param(const ParamDomain& pd, const Vec& nu);

// Action of the point group on the parameter domain: reduce(L . omega).
// On the open cell R this is plain rotation by L.
Vec pi_action_param(const ParamDomain& pd, int L, const Vec& omega);

// Factor nu in the union of open copies as nu = L . r with r in R. Throws
// NotInOpenCopies on boundary points and points outside.
std::pair<int, Vec> lambda_split(const ParamDomain& pd, const Vec& nu);

// Point group elements with L omega - omega in the dual lattice, i.e. the
// stabilizer of the character of omega.
std::vector<int> stabilizer_pi(const ParamDomain& pd, const Vec& omega);

}  // namespace crystalrep
