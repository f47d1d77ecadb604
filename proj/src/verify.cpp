#include "crystalrep/verify.hpp"

#include "crystalrep/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace crystalrep {

double SuiteReport::max_residual() const {
  double m = 0.0;
  for (const CheckResult& c : checks) m = std::max(m, c.residual);
  return m;
}

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

constexpr double kBool = 0.5;  // tolerance for 0/1 encoded boolean checks

void add_check(SuiteReport& rep, std::string name, double residual, double tolerance,
               double tol_override) {
  if (tol_override > 0.0) tolerance = tol_override;
  rep.checks.push_back(CheckResult{std::move(name), residual, tolerance,
                                   std::abs(residual) <= tolerance});
}

GroupElement random_element(const CrystalGroup& g, std::mt19937_64& rng, int spread = 3) {
  std::uniform_int_distribution<int> Ld(0, g.pg.order() - 1);
  std::uniform_int_distribution<int> yd(-spread, spread);
  IVec y(g.dim());
  for (int i = 0; i < g.dim(); ++i) y[i] = yd(rng);
  return GroupElement{Ld(rng), std::move(y)};
}

Vec random_box_point(int n, double halfwidth, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-halfwidth, halfwidth);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

Vec random_interior_omega(const ParamDomain& pd, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int n = static_cast<int>(pd.center.size());
  for (int tries = 0; tries < 100000; ++tries) {
    Vec w(n);
    for (int i = 0; i < n; ++i) w[i] = pd.center[i] + pd.circumradius * unit(rng);
    if (strictly_inside(pd.R, w, 1e-7)) return w;
  }
  fail("BadParamDomain", "rejection sampling found no interior point");
}

AffineIsometry random_isometry(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat raw(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) raw(i, j) = gauss(rng);
  }
  Mat Q = Eigen::HouseholderQR<Mat>(raw).householderQ();
  Vec t(n);
  for (int i = 0; i < n; ++i) t[i] = gauss(rng);
  return AffineIsometry{std::move(t), std::move(Q)};
}

// ---------------------------------------------------------------- group laws

void suite_group_laws(SuiteReport& rep, const CrystalGroup& g, std::mt19937_64& rng,
                      double tol_override) {
  const int n = g.dim();

  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    AffineIsometry a = random_isometry(n, rng);
    AffineIsometry b = random_isometry(n, rng);
    AffineIsometry c = random_isometry(n, rng);
    Vec u = random_box_point(n, 2.0, rng);
    Vec v = random_box_point(n, 2.0, rng);

    AffineIsometry lhs = compose(compose(a, b), c);
    AffineIsometry rhs = compose(a, compose(b, c));
    worst = std::max(worst, (lhs.t - rhs.t).cwiseAbs().maxCoeff());
    worst = std::max(worst, (lhs.L - rhs.L).cwiseAbs().maxCoeff());

    AffineIsometry ai = compose(a, inverse(a));
    worst = std::max(worst, ai.t.cwiseAbs().maxCoeff());
    worst = std::max(worst, (ai.L - Mat::Identity(n, n)).cwiseAbs().maxCoeff());

    worst = std::max(worst,
                     (apply(compose(a, b), u) - apply(a, apply(b, u))).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs((apply(a, u) - apply(a, v)).norm() - (u - v).norm()));
  }
  add_check(rep, "affine.random_identities", worst, tol::group_law, tol_override);

  worst = 0.0;
  for (int L = 0; L < g.pg.order(); ++L) {
    for (int M = 0; M < g.pg.order(); ++M) {
      IVec alpha = cocycle(g, L, M);
      AffineIsometry lhs = compose(gamma(g, L), gamma(g, M));
      AffineIsometry rhs =
          compose(gamma(g, g.pg.mult[L][M]),
                  AffineIsometry{g.lat.B * alpha.cast<double>(), Mat::Identity(n, n)});
      worst = std::max(worst, (lhs.t - rhs.t).cwiseAbs().maxCoeff());
      worst = std::max(worst, (lhs.L - rhs.L).cwiseAbs().maxCoeff());
    }
  }
  add_check(rep, "crystal.cocycle_identity", worst, tol::group_law, tol_override);

  worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    GroupElement a = random_element(g, rng);
    GroupElement b = random_element(g, rng);
    GroupElement ab = element_mul(g, a, b);
    AffineIsometry lhs = compose(embed(g, a), embed(g, b));
    AffineIsometry rhs = embed(g, ab);
    worst = std::max(worst, (lhs.t - rhs.t).cwiseAbs().maxCoeff());
    worst = std::max(worst, (lhs.L - rhs.L).cwiseAbs().maxCoeff());

    GroupElement ainv = element_inv(g, a);
    AffineIsometry round = compose(embed(g, a), embed(g, ainv));
    worst = std::max(worst, round.t.cwiseAbs().maxCoeff());
    worst = std::max(worst, (round.L - Mat::Identity(n, n)).cwiseAbs().maxCoeff());

    auto back = membership(g, embed(g, a));
    if (!back || back->L != a.L || back->y != a.y) worst = std::max(worst, 1.0);
  }
  add_check(rep, "crystal.closure_random", worst, tol::group_law, tol_override);

  worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    GroupElement e = random_element(g, rng);
    IVec moved = conjugation_action(g, e.L, e.y);
    AffineIsometry conj = compose(compose(gamma(g, e.L),
                                          AffineIsometry{g.lat.B * e.y.cast<double>(),
                                                         Mat::Identity(n, n)}),
                                  inverse(gamma(g, e.L)));
    worst = std::max(
        worst, (conj.t - g.lat.B * moved.cast<double>()).cwiseAbs().maxCoeff());
  }
  add_check(rep, "crystal.conjugation_action", worst, tol::group_law, tol_override);

  // duality and pairing
  Lattice dual = dual_lattice(g.lat);
  double dd = (dual_lattice(dual).B - g.lat.B).cwiseAbs().maxCoeff();
  add_check(rep, "lattice.duality_involution", dd, tol::group_law, tol_override);

  worst = 0.0;
  for (const LatticePoint& x : enumerate_points(g.lat, 5.0)) {
    for (const LatticePoint& z : enumerate_points(dual, 5.0)) {
      double pairing = z.x.dot(x.x);
      worst = std::max(worst, std::abs(pairing - std::round(pairing)));
    }
  }
  add_check(rep, "lattice.pairing_integral", worst, tol::lattice, tol_override);

  bool dual_sym = is_symmorphic(dual_crystal_group(g));
  add_check(rep, "crystal.dual_symmorphic", dual_sym ? 0.0 : 1.0, kBool, tol_override);

  if (g.name == "p1" || g.name == "pm" || g.name == "pg" || g.name == "p4m") {
    bool expected = g.name != "pg";
    add_check(rep, "crystal.symmorphic_flag",
              is_symmorphic(g) == expected ? 0.0 : 1.0, kBool, tol_override);
  }
}

// -------------------------------------------------------------------- domain

void suite_domain(SuiteReport& rep, const CrystalGroup& g, std::mt19937_64& rng,
                  double tol_override) {
  const int n = g.dim();
  ParamDomain pd = build_param_domain(g);

  if (n == 2) {
    double covol = pd.gstar.lat.covolume();
    double identity = std::abs(g.pg.order() * area_2d(pd.R) - covol) / covol;
    add_check(rep, "domain.area_identity", identity, tol::lattice, tol_override);
  }

  // Monte Carlo tiling: random points must reduce into the closed cell with
  // a unique nearest orbit point away from the boundary web
  int excluded = 0, bad = 0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    Vec y = random_box_point(n, 1.5, rng);
    auto winners = nearest_orbit_elements(pd.gstar, pd.center, y, 1e-7);
    if (winners.empty()) ++bad;
    else if (winners.size() > 1) ++excluded;
  }
  add_check(rep, "domain.tiling_reducible", static_cast<double>(bad), kBool, tol_override);
  add_check(rep, "domain.tiling_boundary_fraction",
            static_cast<double>(excluded) / samples, 0.01, tol_override);

  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    Vec nu = random_box_point(n, 1.5, rng);
    Vec u = reduce_to_param(pd, nu);
    worst = std::max(worst, (reduce_to_param(pd, u) - u).cwiseAbs().maxCoeff());
    if (!coords_of(pd.gstar.lat, u - nu)) worst = std::max(worst, 1.0);
    bool covered = false;
    for (const HPolytope& copy : pd.pi_copies) {
      if (weakly_inside(copy, u)) covered = true;
    }
    if (!covered) worst = std::max(worst, 1.0);
  }
  add_check(rep, "domain.reduce_idempotent", worst, tol::lattice, tol_override);

  worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Vec w = random_interior_omega(pd, rng);
    std::uniform_int_distribution<int> Ld(0, g.pg.order() - 1);
    int L = Ld(rng), M = Ld(rng);
    Vec lhs = pi_action_param(pd, M, pi_action_param(pd, L, w));
    Vec rhs = pi_action_param(pd, g.pg.mult[M][L], w);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    worst = std::max(worst,
                     (pi_action_param(pd, L, w) - g.pg.elements[L] * w).cwiseAbs().maxCoeff());
  }
  add_check(rep, "domain.action_group_law", worst, tol::lattice, tol_override);

  worst = 0.0;
  auto lattice_pts = enumerate_points(g.lat, 3.0);
  for (int i = 0; i < 50; ++i) {
    Vec w = random_interior_omega(pd, rng);
    std::uniform_int_distribution<int> Ld(0, g.pg.order() - 1);
    int L = Ld(rng);
    Vec moved = pi_action_param(pd, L, w);
    for (const LatticePoint& pt : lattice_pts) {
      Complex lhs = character_eval(moved, pt.x);
      Complex rhs = character_eval(w, g.pg.elements[L].transpose() * pt.x);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  add_check(rep, "domain.action_character_identity", worst, tol::matrix_match, tol_override);

  worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Vec w = random_interior_omega(pd, rng);
    std::uniform_int_distribution<int> Ld(0, g.pg.order() - 1);
    int L = Ld(rng);
    auto [Lhat, r] = lambda_split(pd, g.pg.elements[L] * w);
    worst = std::max(worst, (r - w).cwiseAbs().maxCoeff());
    if (Lhat != L) worst = std::max(worst, 1.0);
    if (stabilizer_pi(pd, w) != std::vector<int>{0}) worst = std::max(worst, 1.0);
  }
  add_check(rep, "domain.lambda_split_roundtrip", worst, tol::lattice, tol_override);
}

// ----------------------------------------------------------------------- rep

void suite_rep(SuiteReport& rep, const CrystalGroup& g, std::mt19937_64& rng,
               double tol_override) {
  ParamDomain pd = build_param_domain(g);
  std::vector<Vec> omegas;
  for (int i = 0; i < 3; ++i) omegas.push_back(random_interior_omega(pd, rng));

  double hom = 0.0, unit = 0.0;
  for (const Vec& w : omegas) {
    InducedRepContext ctx{g, w};
    for (int trial = 0; trial < 100; ++trial) {
      GroupElement a = random_element(g, rng);
      GroupElement b = random_element(g, rng);
      CMat Ua = induced_rep(ctx, a);
      CMat Ub = induced_rep(ctx, b);
      CMat Uab = induced_rep(ctx, element_mul(g, a, b));
      hom = std::max(hom, (Ua * Ub - Uab).cwiseAbs().maxCoeff());
      unit = std::max(unit, unitarity_residual(Ua));
    }
  }
  add_check(rep, "rep.homomorphism", hom, tol::unitarity, tol_override);
  add_check(rep, "rep.unitarity", unit, tol::group_law, tol_override);

  double diag = 0.0;
  for (const Vec& w : omegas) {
    InducedRepContext ctx{g, w};
    for (int trial = 0; trial < 20; ++trial) {
      GroupElement t = random_element(g, rng);
      t.L = 0;
      CMat U = induced_rep(ctx, t);
      Vec x = g.lat.B * t.y.cast<double>();
      for (int M = 0; M < g.pg.order(); ++M) {
        for (int N = 0; N < g.pg.order(); ++N) {
          Complex want = M == N ? character_eval(w, g.pg.elements[M].transpose() * x)
                                : Complex(0, 0);
          diag = std::max(diag, std::abs(U(M, N) - want));
        }
      }
    }
  }
  add_check(rep, "rep.translation_diagonal", diag, tol::group_law, tol_override);

  double psi_unit = 0.0, psi_conj = 0.0;
  for (const Vec& w : omegas) {
    InducedRepContext ctx{g, w};
    for (int N = 0; N < g.pg.order(); ++N) {
      CMat Psi = psi_intertwiner(ctx, N);
      psi_unit = std::max(psi_unit, unitarity_residual(Psi));
      InducedRepContext rotated{g, pi_action_param(pd, N, w)};
      for (int trial = 0; trial < 50; ++trial) {
        GroupElement e = random_element(g, rng);
        CMat lhs = induced_rep(rotated, e);
        CMat rhs = Psi * induced_rep(ctx, e) * Psi.adjoint();
        psi_conj = std::max(psi_conj, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
  }
  add_check(rep, "rep.psi_unitary", psi_unit, tol::group_law, tol_override);
  add_check(rep, "rep.psi_conjugation", psi_conj, tol::unitarity, tol_override);

  double reg = 0.0;
  for (int L = 0; L < g.pg.order(); ++L) {
    for (int M = 0; M < g.pg.order(); ++M) {
      reg = std::max(reg, (regular_rep(g.pg, L) * regular_rep(g.pg, M) -
                           regular_rep(g.pg, g.pg.mult[L][M]))
                              .cwiseAbs()
                              .maxCoeff());
    }
  }
  add_check(rep, "rep.regular_homomorphism", reg, tol::group_law, tol_override);

  // the commutant dimension of the induced representation matches the order
  // of the frequency stabilizer; interior points are irreducible
  int bad = 0;
  for (int i = 0; i < 20; ++i) {
    Vec w = random_interior_omega(pd, rng);
    if (!is_irreducible(InducedRepContext{g, w})) ++bad;
    if (stabilizer_pi(pd, w).size() != 1) ++bad;
  }
  add_check(rep, "rep.irreducible_interior", static_cast<double>(bad), kBool, tol_override);

  std::vector<CMat> images;
  for (const GroupElement& e : generating_set(g)) {
    images.push_back(induced_rep(InducedRepContext{g, omegas[0]}, e));
  }
  int dim_interior = commutant_dimension(images);
  add_check(rep, "rep.commutant_interior_dim",
            static_cast<double>(dim_interior - 1), kBool, tol_override);

  if (g.dim() == 2) {
    int sigma = find_pg_index(g.pg, (Mat(2, 2) << 1, 0, 0, -1).finished());
    if (sigma > 0) {
      for (double y2 : {0.0, 0.5}) {
        Vec w(2);
        w << 0.3, y2;
        auto stab = stabilizer_pi(pd, w);
        std::vector<CMat> imgs;
        for (const GroupElement& e : generating_set(g)) {
          imgs.push_back(induced_rep(InducedRepContext{g, w}, e));
        }
        int dim = commutant_dimension(imgs);
        bool ok = stab == std::vector<int>({0, sigma}) &&
                  dim == static_cast<int>(stab.size());
        add_check(rep, "rep.mirror_axis_commutant_y" + std::to_string(y2 == 0.0 ? 0 : 5),
                  ok ? 0.0 : 1.0, kBool, tol_override);
      }
    }
  }
}

// --------------------------------------------------------------------- chain

void suite_chain(SuiteReport& rep, const CrystalGroup& g, std::mt19937_64& rng,
                 double tol_override) {
  ParamDomain pd = build_param_domain(g);
  Truncation tr = make_truncation(pd, 2.0, 5);
  const int p = g.pg.order();
  const int s = tr.size();

  std::vector<FrequencyFunction> test_functions{gaussian_frequency(g.dim()),
                                                bump_frequency(g.dim())};

  double staged = 0.0;
  for (const FrequencyFunction& phi : test_functions) {
    staged = std::max(staged,
                      max_abs_diff(chain_forward(g, phi, tr), chain_forward_staged(g, phi, tr)));
  }
  add_check(rep, "chain.closed_equals_staged", staged, tol::group_law, tol_override);

  // unitarity of the stages on random data
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_field = [&] {
    SampledField f;
    for (int i = 0; i < tr.n_omega(); ++i) {
      CMat slice(p, s);
      for (int M = 0; M < p; ++M) {
        for (int z = 0; z < s; ++z) slice(M, z) = Complex(gauss(rng), gauss(rng));
      }
      f.slices.push_back(std::move(slice));
    }
    return f;
  };

  double stage_norm = 0.0, roundtrip = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    SampledField f = random_field();
    SampledField th = theta_plus_apply(g, tr, f, Direction::forward);
    SampledField v = v_apply(g, tr, f, Direction::forward);
    for (std::size_t i = 0; i < f.slices.size(); ++i) {
      stage_norm = std::max(stage_norm,
                            std::abs(th.slices[i].norm() - f.slices[i].norm()));
      stage_norm = std::max(stage_norm,
                            std::abs(v.slices[i].norm() - f.slices[i].norm()));
    }
    roundtrip = std::max(
        roundtrip, max_abs_diff(theta_plus_apply(g, tr, th, Direction::inverse), f));
    roundtrip = std::max(roundtrip, max_abs_diff(v_apply(g, tr, v, Direction::inverse), f));
  }
  add_check(rep, "chain.stage_unitarity", stage_norm, tol::group_law, tol_override);
  add_check(rep, "chain.stage_roundtrip", roundtrip, tol::group_law, tol_override);

  // sigma factors are homomorphisms
  double sig = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    GroupElement a = random_element(g, rng, 2);
    GroupElement b = random_element(g, rng, 2);
    GroupElement ab = element_mul(g, a, b);

    PiField f1(tr.n_omega());
    for (auto& vv : f1) {
      vv = CVec(p);
      for (int M = 0; M < p; ++M) vv[M] = Complex(gauss(rng), gauss(rng));
    }
    PiField lhs1 = sigma1_apply(g, a, tr, sigma1_apply(g, b, tr, f1));
    PiField rhs1 = sigma1_apply(g, ab, tr, f1);
    for (int i = 0; i < tr.n_omega(); ++i) {
      sig = std::max(sig, (lhs1[i] - rhs1[i]).cwiseAbs().maxCoeff());
    }

    CVec f2(s);
    for (int z = 0; z < s; ++z) f2[z] = Complex(gauss(rng), gauss(rng));
    CVec lhs2 = sigma2_apply(g, a, tr, sigma2_apply(g, b, tr, f2));
    CVec rhs2 = sigma2_apply(g, ab, tr, f2);
    sig = std::max(sig, (lhs2 - rhs2).cwiseAbs().maxCoeff());
  }
  add_check(rep, "chain.sigma_homomorphism", sig, tol::unitarity, tol_override);

  double m1r = 0.0;
  KernelEvaluator rho_phi = [&](const Vec& w, const Vec& z, const Mat& M) {
    return rho_eval(test_functions[0], w, z, M);
  };
  for (int trial = 0; trial < 200; ++trial) {
    GroupElement e = random_element(g, rng, 2);
    Vec w = random_interior_omega(pd, rng);
    std::uniform_int_distribution<int> zd(0, s - 1), Md(0, p - 1);
    Vec z = tr.points[zd(rng)];
    Mat M = g.pg.elements[Md(rng)];
    FrequencyFunction shifted = pi_hat_apply(g, e, test_functions[0]);
    Complex lhs = m1_eval(g, e, rho_phi, w, z, M);
    Complex rhs = rho_eval(shifted, w, z, M);
    m1r = std::max(m1r, std::abs(lhs - rhs));
  }
  add_check(rep, "chain.m1_rho_intertwine", m1r, tol::unitarity, tol_override);

  double intertwine = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    GroupElement e = random_element(g, rng, 2);
    intertwine = std::max(intertwine,
                          intertwining_residual(g, e, test_functions[0], tr));
  }
  add_check(rep, "chain.intertwining", intertwine, 1e-9, tol_override);
}

// ----------------------------------------------------------------- subspaces

void suite_subspaces(SuiteReport& rep, const CrystalGroup& g, std::mt19937_64& rng,
                     double tol_override) {
  ParamDomain pd = build_param_domain(g);
  Truncation tr = make_truncation(pd, 2.0, 3);
  const int p = g.pg.order();
  const int s = tr.size();

  std::vector<GroupElement> elements;
  for (int L = 0; L < p; ++L) elements.push_back(GroupElement{L, IVec::Zero(g.dim())});
  for (int i = 0; i < 5; ++i) elements.push_back(random_element(g, rng, 2));

  // structured field: constant tensor factor of rank 2
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat raw(s, 2);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < 2; ++j) raw(i, j) = Complex(gauss(rng), gauss(rng));
  }
  CMat F = Eigen::HouseholderQR<CMat>(raw).householderQ() * CMat::Identity(s, 2);
  RangeFunction structured = tensor_range(tr, p, F);

  InvarianceReport inv = invariance_report(structured, g, elements, tr, 1e-10);
  add_check(rep, "subspaces.structured_invariant", inv.max_residual, 1e-10, tol_override);

  auto recovered = tensor_form_check(structured, 0, p);
  double angle = recovered ? subspace_angle_sin(F, *recovered) : 1.0;
  add_check(rep, "subspaces.tensor_recovery", angle, tol::invariance, tol_override);

  // a subspace pinned to one point group slot cannot be invariant unless the
  // point group is trivial
  CMat delta = CMat::Zero(p * s, 1);
  delta(0 * s + tr.find(IVec::Zero(g.dim())), 0) = 1.0;
  RangeFunction pinned = make_range_function(std::vector<CMat>(tr.n_omega(), delta));
  InvarianceReport pinned_rep = invariance_report(pinned, g, elements, tr);
  bool expected = p == 1 ? pinned_rep.invariant
                         : !pinned_rep.invariant && pinned_rep.max_residual >= 0.1;
  add_check(rep, "subspaces.pinned_slot_detected", expected ? 0.0 : 1.0, kBool, tol_override);
  if (p > 1) {
    add_check(rep, "subspaces.pinned_slot_not_tensor",
              tensor_form_check(pinned, 0, p) ? 1.0 : 0.0, kBool, tol_override);
  }

  double proj = 0.0;
  for (const CMat& P : range_projection(structured)) {
    proj = std::max(proj, (P * P - P).cwiseAbs().maxCoeff());
    proj = std::max(proj, (P - P.adjoint()).cwiseAbs().maxCoeff());
  }
  add_check(rep, "subspaces.projection_property", proj, tol::group_law, tol_override);

  Vec w = random_interior_omega(pd, rng);
  InducedRepContext ctx{g, w};
  for (int k = 1; k <= 3; ++k) {
    int dim = commutant_tensor_dimension(ctx, k);
    add_check(rep, "subspaces.commutant_k" + std::to_string(k),
              static_cast<double>(dim - k * k), kBool, tol_override);
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"group-laws", "domain", "rep", "chain", "subspaces"};
}

std::vector<SuiteReport> run_suites(const CrystalGroup& g, const std::string& suite,
                                    std::uint64_t seed, double tol_override) {
  std::vector<std::string> wanted;
  if (suite == "all") {
    wanted = suite_names();
  } else {
    wanted.push_back(suite);
  }

  std::vector<SuiteReport> out;
  for (const std::string& name : wanted) {
    SuiteReport rep;
    rep.suite = name;
    rep.group = g.name;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    if (name == "group-laws") suite_group_laws(rep, g, rng, tol_override);
    else if (name == "domain") suite_domain(rep, g, rng, tol_override);
    else if (name == "rep") suite_rep(rep, g, rng, tol_override);
    else if (name == "chain") suite_chain(rep, g, rng, tol_override);
    else if (name == "subspaces") suite_subspaces(rep, g, rng, tol_override);
    else fail("UnknownSuite", "no suite named '" + name + "'");
    out.push_back(std::move(rep));
  }
  return out;
}

nlohmann::json report_to_json(const std::vector<SuiteReport>& reports, bool with_timings,
                              const std::vector<double>& wall_ms) {
  nlohmann::json suites = nlohmann::json::array();
  bool all_pass = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const SuiteReport& rep = reports[i];
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : rep.checks) {
      checks.push_back({{"name", c.name},
                        {"status", c.pass ? "pass" : "fail"},
                        {"residual", c.residual},
                        {"tolerance", c.tolerance}});
    }
    nlohmann::json one{{"suite", rep.suite},
                       {"group", rep.group},
                       {"seed", rep.seed},
                       {"checks", std::move(checks)},
                       {"max_residual", rep.max_residual()},
                       {"pass", rep.pass()}};
    if (with_timings && i < wall_ms.size()) one["wall_ms"] = wall_ms[i];
    all_pass = all_pass && rep.pass();
    suites.push_back(std::move(one));
  }
  return nlohmann::json{{"tool", "crystalrep"}, {"suites", std::move(suites)}, {"pass", all_pass}};
}

}  // namespace crystalrep
