#include "crystalrep/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace crystalrep {

double signed_margin(const HalfSpace& h, const Vec& y) { return h.normal.dot(y) - h.offset; }

bool strictly_inside(const HPolytope& p, const Vec& y, double band) {
  for (const HalfSpace& h : p.halfspaces) {
    if (signed_margin(h, y) >= -band) return false;
  }
  return true;
}

bool weakly_inside(const HPolytope& p, const Vec& y, double band) {
  for (const HalfSpace& h : p.halfspaces) {
    if (signed_margin(h, y) > band) return false;
  }
  return true;
}

HalfSpace bisector_halfspace(const Vec& a, const AffineIsometry& g) {
  Vec b = apply(g, a);
  double dist = (b - a).norm();
  if (dist <= 1e-10) {
    fail("DegenerateBisector", "isometry moves the base point by only " + std::to_string(dist));
  }
  // closer to a than to b: 2 (b - a) . y < |b|^2 - |a|^2, normalized so the
  // margin is a signed distance
  Vec normal = (b - a) / dist;
  double offset = normal.dot(0.5 * (a + b));
  return HalfSpace{std::move(normal), offset, true};
}

namespace {

void check_dim_supported(int n) {
  if (n < 1 || n > 3) {
    fail("DimensionUnsupported",
         "vertex enumeration implemented for n <= 3, got n = " + std::to_string(n));
  }
}

// All feasible intersection points of n-subsets of the bounding hyperplanes,
// deduplicated. Assumes the feasible set is bounded when interpreting the
// result as the full vertex set.
std::vector<Vec> vertex_candidates(const HPolytope& p, double band) {
  const int n = p.dim;
  const int m = static_cast<int>(p.halfspaces.size());
  std::vector<Vec> out;
  if (m < n) return out;

  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;

  auto advance = [&]() {
    int i = n - 1;
    while (i >= 0 && idx[i] == m - n + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };

  Mat A(n, n);
  Vec b(n);
  do {
    for (int r = 0; r < n; ++r) {
      A.row(r) = p.halfspaces[idx[r]].normal.transpose();
      b[r] = p.halfspaces[idx[r]].offset;
    }
    Eigen::FullPivLU<Mat> lu(A);
    lu.setThreshold(1e-10);
    if (lu.rank() < n) continue;
    Vec v = lu.solve(b);
    bool feasible = true;
    for (const HalfSpace& h : p.halfspaces) {
      if (signed_margin(h, v) > band) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    bool known = false;
    for (const Vec& w : out) {
      if ((w - v).cwiseAbs().maxCoeff() <= band) {
        known = true;
        break;
      }
    }
    if (!known) out.push_back(std::move(v));
  } while (advance());
  return out;
}

double shoelace(const std::vector<Vec>& cycle) {
  double twice = 0.0;
  const int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i) {
    const Vec& u = cycle[i];
    const Vec& v = cycle[(i + 1) % k];
    twice += u[0] * v[1] - u[1] * v[0];
  }
  return 0.5 * std::abs(twice);
}

}  // namespace

std::vector<Vec> enumerate_vertices(const HPolytope& p) {
  check_dim_supported(p.dim);
  return vertex_candidates(p, tol::boundary);
}

std::vector<Vec> vertices_2d(const HPolytope& p) {
  if (p.dim != 2) fail("DimensionUnsupported", "planar vertex cycle needs n = 2");

  // Bounded iff the recession cone is trivial, which in the plane means the
  // constraint normals leave no angular gap of pi or more.
  std::vector<double> angles;
  angles.reserve(p.halfspaces.size());
  for (const HalfSpace& h : p.halfspaces) {
    angles.push_back(std::atan2(h.normal[1], h.normal[0]));
  }
  std::sort(angles.begin(), angles.end());
  double gap = angles.empty() ? two_pi
                              : angles.front() + two_pi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) {
    gap = std::max(gap, angles[i] - angles[i - 1]);
  }
  if (gap >= 0.5 * two_pi - 1e-12) {
    fail("Unbounded", "constraint normals leave an open half-plane free");
  }

  std::vector<Vec> verts = vertex_candidates(p, tol::boundary);
  if (verts.size() < 3) {
    fail("EmptyInterior", "feasible set has no planar interior");
  }

  Vec centroid = Vec::Zero(2);
  for (const Vec& v : verts) centroid += v;
  centroid /= static_cast<double>(verts.size());
  std::sort(verts.begin(), verts.end(), [&](const Vec& u, const Vec& v) {
    return std::atan2(u[1] - centroid[1], u[0] - centroid[0]) <
           std::atan2(v[1] - centroid[1], v[0] - centroid[0]);
  });
  if (shoelace(verts) <= 1e-12) {
    fail("EmptyInterior", "vertex cycle has zero area");
  }
  return verts;
}

double area_2d(const HPolytope& p) { return shoelace(vertices_2d(p)); }

namespace {

double max_basis_norm(const Lattice& lat) {
  double m = 0.0;
  for (int i = 0; i < lat.dim(); ++i) m = std::max(m, lat.B.col(i).norm());
  return m;
}

// Orbit points of a under elements moving it by at most `radius`, with the
// elements that produce them. Identity excluded; a fixed point from any
// other element is a stabilizer violation.
struct OrbitPoint {
  GroupElement e;
  Vec x;
};

std::vector<OrbitPoint> orbit_within(const CrystalGroup& g, const Vec& a, double radius) {
  std::vector<OrbitPoint> out;
  const int n = g.dim();
  for (int L = 0; L < g.pg.order(); ++L) {
    const Mat& rot = g.pg.elements[L];
    // |L(a + x_L + B y) - a| = |B y - c| with c = L^{-1} a - a - x_L
    Vec c = rot.transpose() * a - a - g.cs.x[L];
    for (const LatticePoint& pt : enumerate_points_near(g.lat, c, radius + tol::boundary)) {
      GroupElement e{L, pt.k};
      if (L == 0 && pt.k.isZero()) continue;
      Vec image = rot * (a + g.cs.x[L] + pt.x);
      if ((image - a).norm() <= 1e-10) {
        fail("NontrivialStabilizer",
             "base point is fixed by a nonidentity element, pick another center");
      }
      out.push_back(OrbitPoint{std::move(e), std::move(image)});
    }
  }
  (void)n;
  return out;
}

}  // namespace

HPolytope dirichlet_domain(const CrystalGroup& g, const Vec& a, double cutoff) {
  const int n = g.dim();
  check_dim_supported(n);
  double basis_reach = max_basis_norm(g.lat);
  double c = cutoff > 0.0 ? cutoff : 3.0 * basis_reach;
  constexpr double cap = 1024.0;  // 2^10

  while (true) {
    HPolytope p;
    p.dim = n;
    for (const OrbitPoint& op : orbit_within(g, a, c)) {
      p.halfspaces.push_back(bisector_halfspace(a, AffineIsometry{
                                                       g.cs.x[op.e.L] + g.lat.B * op.e.y.cast<double>(),
                                                       g.pg.elements[op.e.L]}));
    }
    // Certification needs the basis translations among the constraints:
    // they confine the cell inside the Voronoi cell of the translation
    // orbit, which is bounded, so the candidate vertex set is the whole
    // vertex set and its max distance is the true circumradius. Any element
    // whose orbit point is farther than twice that distance cuts nothing.
    if (c >= basis_reach + 1e-9) {
      double r = 0.0;
      std::vector<Vec> verts = vertex_candidates(p, tol::boundary);
      for (const Vec& v : verts) r = std::max(r, (v - a).norm());
      if (!verts.empty() && 2.0 * r < c) return p;
    }
    c *= 2.0;
    if (c > cap) {
      fail("UnboundedAfterCutoff", "no certificate below the cutoff cap " + std::to_string(cap));
    }
  }
}

Vec default_center(int n) {
  Vec a(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0) a[i] = 0.3;
    else if (i == 1) a[i] = 0.2;
    else if (i == 2) a[i] = 0.11;
    else a[i] = 0.11 / static_cast<double>(i - 1);
  }
  return a;
}

std::vector<GroupElement> nearest_orbit_elements(const CrystalGroup& g, const Vec& a,
                                                 const Vec& y, double tie_band) {
  // Pure translations already bring some orbit point within half the sum of
  // the basis lengths, so searching that far around y is guaranteed to see
  // the minimum.
  double mu = 0.0;
  for (int i = 0; i < g.dim(); ++i) mu += 0.5 * g.lat.B.col(i).norm();
  double radius = mu + tie_band + 0.5;

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, GroupElement>> found;
  for (int L = 0; L < g.pg.order(); ++L) {
    const Mat& rot = g.pg.elements[L];
    Vec c = rot.transpose() * y - a - g.cs.x[L];
    for (const LatticePoint& pt : enumerate_points_near(g.lat, c, radius)) {
      Vec image = rot * (a + g.cs.x[L] + pt.x);
      double d = (image - y).norm();
      best = std::min(best, d);
      found.emplace_back(d, GroupElement{L, pt.k});
    }
  }
  std::vector<GroupElement> out;
  for (auto& [d, e] : found) {
    if (d <= best + tie_band) out.push_back(std::move(e));
  }
  return out;
}

namespace {

HPolytope rotate_polytope(const HPolytope& p, const Mat& L) {
  HPolytope q;
  q.dim = p.dim;
  q.halfspaces.reserve(p.halfspaces.size());
  for (const HalfSpace& h : p.halfspaces) {
    // {L y : n.y < c} = {w : (L n).w < c}
    q.halfspaces.push_back(HalfSpace{L * h.normal, h.offset, h.open});
  }
  return q;
}

// Light construction checks: sampled disjointness of the open copies and,
// in the plane, the exact tiling identity |Pi| area(R) = covol of the dual
// lattice.
void spot_check(const ParamDomain& pd) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int n = pd.center.size();
  int accepted = 0;
  while (accepted < 200) {
    Vec w(n);
    for (int i = 0; i < n; ++i) w[i] = pd.center[i] + pd.circumradius * unit(rng);
    if (!strictly_inside(pd.R, w, 1e-7)) continue;
    ++accepted;
    for (int L = 1; L < pd.group.pg.order(); ++L) {
      Vec image = pd.group.pg.elements[L] * w;
      for (int M = 0; M < L; ++M) {
        if (strictly_inside(pd.pi_copies[M], image, 1e-9)) {
          fail("BadParamDomain", "open copies overlap, the center must be degenerate");
        }
      }
    }
  }
  if (n == 2) {
    double covol = pd.gstar.lat.covolume();
    double tiled = pd.group.pg.order() * area_2d(pd.R);
    if (std::abs(tiled - covol) > 0.01 * covol) {
      fail("BadParamDomain", "copies do not measure up to a fundamental cell");
    }
  }
}

}  // namespace

ParamDomain build_param_domain(const CrystalGroup& g, const Vec& a) {
  ParamDomain pd;
  pd.group = g;
  pd.gstar = dual_crystal_group(g);
  pd.center = a.size() ? a : default_center(g.dim());
  pd.R = dirichlet_domain(pd.gstar, pd.center);
  if (g.dim() == 2) pd.R_vertices = vertices_2d(pd.R);
  for (const Vec& v : enumerate_vertices(pd.R)) {
    pd.circumradius = std::max(pd.circumradius, (v - pd.center).norm());
  }
  pd.pi_copies.reserve(g.pg.order());
  for (int L = 0; L < g.pg.order(); ++L) {
    pd.pi_copies.push_back(rotate_polytope(pd.R, g.pg.elements[L]));
  }
  spot_check(pd);
  return pd;
}

namespace {

// Componentwise order with a tolerance band, used to make boundary
// representative selection deterministic.
bool lex_less(const Vec& u, const Vec& v, double band) {
  for (int i = 0; i < u.size(); ++i) {
    if (u[i] < v[i] - band) return true;
    if (u[i] > v[i] + band) return false;
  }
  return false;
}

}  // namespace

Vec reduce_to_param(const ParamDomain& pd, const Vec& nu) {
  // Every point of the domain lies within |center| + circumradius of the
  // origin, so the dual lattice translate we need is at most that far from
  // nu.
  double radius = pd.center.norm() + pd.circumradius + 1e-6;
  std::vector<Vec> interior, boundary;
  for (const LatticePoint& z : enumerate_points_near(pd.gstar.lat, nu, radius)) {
    Vec u = nu - z.x;
    bool strict = false, weak = false;
    for (const HPolytope& copy : pd.pi_copies) {
      if (strictly_inside(copy, u)) strict = true;
      if (weakly_inside(copy, u)) weak = true;
      if (strict) break;
    }
    if (strict) interior.push_back(std::move(u));
    else if (weak) boundary.push_back(std::move(u));
  }
  auto pick = [](std::vector<Vec>& c) {
    Vec best = c.front();
    for (const Vec& u : c) {
      if (lex_less(u, best, tol::boundary)) best = u;
    }
    return best;
  };
  if (!interior.empty()) return pick(interior);
  if (!boundary.empty()) return pick(boundary);
  fail("ReductionFailed", "no dual lattice translate lands in the parameter domain");
}

Vec pi_action_param(const ParamDomain& pd, int L, const Vec& omega) {
  return reduce_to_param(pd, pd.group.pg.elements[L] * omega);
}

std::pair<int, Vec> lambda_split(const ParamDomain& pd, const Vec& nu) {
  for (int L = 0; L < pd.group.pg.order(); ++L) {
    Vec w = pd.group.pg.elements[L].transpose() * nu;
    if (strictly_inside(pd.R, w)) return {L, std::move(w)};
  }
  fail("NotInOpenCopies", "point lies on the boundary web or outside the domain");
}

std::vector<int> stabilizer_pi(const ParamDomain& pd, const Vec& omega) {
  std::vector<int> out;
  for (int L = 0; L < pd.group.pg.order(); ++L) {
    if (coords_of(pd.gstar.lat, pd.group.pg.elements[L] * omega - omega)) out.push_back(L);
  }
  return out;
}

}  // namespace crystalrep
