#include "crystalrep/crystal.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace crystalrep {

namespace {

bool mat_close(const Mat& a, const Mat& b, double tolerance) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a - b).cwiseAbs().maxCoeff() <= tolerance;
}

}  // namespace

int find_pg_index(const PointGroup& pg, const Mat& M, double tolerance) {
  for (int i = 0; i < pg.order(); ++i) {
    if (mat_close(pg.elements[i], M, tolerance)) return i;
  }
  return -1;
}

PointGroup build_point_group(std::vector<Mat> elements) {
  if (elements.empty()) fail("PointGroupNotClosed", "empty element list");
  const int n = static_cast<int>(elements[0].rows());
  for (const Mat& m : elements) {
    if (!is_orthogonal(m, tol::matrix_match)) {
      fail("BadOrthogonalPart", "point group element is not orthogonal");
    }
    if (m.rows() != n) fail("DimensionMismatch", "mixed dimensions in point group");
  }

  PointGroup pg;
  pg.elements = std::move(elements);

  // identity to slot 0
  int id = find_pg_index(pg, Mat::Identity(n, n));
  if (id < 0) fail("PointGroupNotClosed", "identity missing from element list");
  if (id != 0) std::swap(pg.elements[0], pg.elements[id]);

  // duplicate elements would make the index tables ambiguous
  for (int i = 0; i < pg.order(); ++i) {
    for (int j = i + 1; j < pg.order(); ++j) {
      if (mat_close(pg.elements[i], pg.elements[j], tol::matrix_match)) {
        fail("PointGroupNotClosed", "duplicate element at indices " + std::to_string(i) +
                                        " and " + std::to_string(j));
      }
    }
  }

  const int p = pg.order();
  pg.mult.assign(p, std::vector<int>(p, -1));
  pg.inv.assign(p, -1);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      int k = find_pg_index(pg, pg.elements[i] * pg.elements[j]);
      if (k < 0) {
        fail("PointGroupNotClosed",
             "product of elements " + std::to_string(i) + " and " + std::to_string(j) +
                 " is not in the list");
      }
      pg.mult[i][j] = k;
      if (k == 0) pg.inv[i] = j;
    }
  }
  return pg;
}

PointGroup saturate_generators(const std::vector<Mat>& generators, int max_order) {
  if (generators.empty()) fail("PointGroupNotClosed", "no generators");
  const int n = static_cast<int>(generators[0].rows());
  std::vector<Mat> closure;
  closure.push_back(Mat::Identity(n, n));

  auto known = [&](const Mat& m) {
    for (const Mat& e : closure) {
      if (mat_close(e, m, tol::matrix_match)) return true;
    }
    return false;
  };

  // breadth first products keep the discovery order stable for a given
  // generator list
  std::size_t head = 0;
  for (const Mat& g : generators) {
    if (!is_orthogonal(g, tol::matrix_match)) {
      fail("BadOrthogonalPart", "generator is not orthogonal");
    }
    if (!known(g)) closure.push_back(g);
  }
  while (head < closure.size()) {
    Mat a = closure[head++];
    for (const Mat& g : generators) {
      Mat p = a * g;
      if (!known(p)) {
        closure.push_back(std::move(p));
        if (static_cast<int>(closure.size()) > max_order) {
          fail("PointGroupNotClosed", "closure exceeds " + std::to_string(max_order) +
                                          " elements, generators look non-finite");
        }
      }
    }
  }
  return build_point_group(std::move(closure));
}

CrystalGroup build_crystal_group(Lattice lat, PointGroup pg, CrossSection cs,
                                 std::string name) {
  const int n = lat.dim();
  if (pg.dim() != n) fail("DimensionMismatch", "lattice and point group dimensions differ");
  if (static_cast<int>(cs.x.size()) != pg.order()) {
    fail("BadCrossSection", "need one representative per point group element");
  }
  for (const Vec& x : cs.x) {
    if (x.size() != n) fail("DimensionMismatch", "cross-section entry of wrong size");
  }
  if (cs.x[0].cwiseAbs().maxCoeff() > tol::group_law) {
    fail("BadCrossSection", "identity must have the zero representative");
  }

  CrystalGroup g{std::move(name), std::move(lat), std::move(pg), std::move(cs)};

  // the point group must preserve the lattice, column by column
  for (int L = 0; L < g.pg.order(); ++L) {
    for (int i = 0; i < n; ++i) {
      Vec image = g.pg.elements[L] * g.lat.B.col(i);
      if (!coords_of(g.lat, image)) {
        fail("LatticeNotInvariant", "element " + std::to_string(L) + " moves basis column " +
                                        std::to_string(i) + " off the lattice");
      }
    }
  }

  // the cocycle of every pair must be a lattice translation, otherwise the
  // chosen representatives do not generate a group over this lattice
  for (int L = 0; L < g.pg.order(); ++L) {
    for (int M = 0; M < g.pg.order(); ++M) {
      AffineIsometry defect =
          compose(inverse(gamma(g, g.pg.mult[L][M])), compose(gamma(g, L), gamma(g, M)));
      if ((defect.L - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > tol::lattice) {
        fail("CocycleNotInLattice", "pair (" + std::to_string(L) + ", " + std::to_string(M) +
                                        ") has a non-translation defect");
      }
      if (!coords_of(g.lat, defect.t)) {
        fail("CocycleNotInLattice", "pair (" + std::to_string(L) + ", " + std::to_string(M) +
                                        ") has defect off the lattice");
      }
    }
  }
  return g;
}

AffineIsometry embed(const CrystalGroup& g, const GroupElement& e) {
  return AffineIsometry{g.cs.x[e.L] + g.lat.B * e.y.cast<double>(), g.pg.elements[e.L]};
}

AffineIsometry gamma(const CrystalGroup& g, int L) {
  return AffineIsometry{g.cs.x[L], g.pg.elements[L]};
}

GroupElement identity_element(const CrystalGroup& g) {
  return GroupElement{0, IVec::Zero(g.dim())};
}

GroupElement element_mul(const CrystalGroup& g, const GroupElement& a, const GroupElement& b) {
  auto m = membership(g, compose(embed(g, a), embed(g, b)));
  if (!m) fail("CocycleNotInLattice", "product left the group, corrupt data");
  return *m;
}

GroupElement element_inv(const CrystalGroup& g, const GroupElement& a) {
  auto m = membership(g, inverse(embed(g, a)));
  if (!m) fail("CocycleNotInLattice", "inverse left the group, corrupt data");
  return *m;
}

IVec cocycle(const CrystalGroup& g, int L, int M) {
  AffineIsometry defect =
      compose(inverse(gamma(g, g.pg.mult[L][M])), compose(gamma(g, L), gamma(g, M)));
  auto k = coords_of(g.lat, defect.t);
  if (!k) fail("CocycleNotInLattice", "cocycle off the lattice, corrupt data");
  return *k;
}

int quotient_Q(const GroupElement& e) { return e.L; }

std::optional<GroupElement> membership(const CrystalGroup& g, const AffineIsometry& a) {
  if (a.dim() != g.dim()) return std::nullopt;
  int L = find_pg_index(g.pg, a.L, tol::lattice);
  if (L < 0) return std::nullopt;
  auto k = coords_of(g.lat, a.t - g.cs.x[L]);
  if (!k) return std::nullopt;
  return GroupElement{L, *k};
}

bool is_symmorphic(const CrystalGroup& g) {
  for (int L = 0; L < g.pg.order(); ++L) {
    if (!membership(g, AffineIsometry{Vec::Zero(g.dim()), g.pg.elements[L]})) return false;
  }
  return true;
}

IVec conjugation_action(const CrystalGroup& g, int L, const IVec& y) {
  auto k = coords_of(g.lat, g.pg.elements[L] * (g.lat.B * y.cast<double>()));
  if (!k) fail("LatticeNotInvariant", "conjugation left the lattice, corrupt data");
  return *k;
}

CrystalGroup dual_crystal_group(const CrystalGroup& g) {
  CrossSection zero;
  zero.x.assign(g.pg.order(), Vec::Zero(g.dim()));
  return build_crystal_group(dual_lattice(g.lat), g.pg, zero, g.name + "*");
}

namespace {

Mat mat2(double a, double b, double c, double d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

}  // namespace

CrystalGroup catalog(const std::string& name) {
  const Mat I2 = Mat::Identity(2, 2);
  const Mat sigma = mat2(1, 0, 0, -1);   // mirror across the x axis
  const Mat rot90 = mat2(0, -1, 1, 0);

  if (name == "p1") {
    CrossSection cs{{vec2(0, 0)}};
    return build_crystal_group(make_lattice(I2), build_point_group({I2}), cs, "p1");
  }
  if (name == "pm") {
    CrossSection cs{{vec2(0, 0), vec2(0, 0)}};
    return build_crystal_group(make_lattice(I2), build_point_group({I2, sigma}), cs, "pm");
  }
  if (name == "pg") {
    // glide: the mirror only enters composed with a half period shift
    CrossSection cs{{vec2(0, 0), vec2(0.5, 0)}};
    return build_crystal_group(make_lattice(I2), build_point_group({I2, sigma}), cs, "pg");
  }
  if (name == "p4m") {
    PointGroup pg = saturate_generators({rot90, sigma});
    CrossSection cs;
    cs.x.assign(pg.order(), vec2(0, 0));
    return build_crystal_group(make_lattice(I2), std::move(pg), std::move(cs), "p4m");
  }
  fail("UnknownGroupName", "no catalog entry for '" + name + "'");
}

std::vector<std::string> catalog_names() { return {"p1", "pm", "pg", "p4m"}; }

}  // namespace crystalrep
