#include "vortex4/residuals.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vortex4/geometry.hpp"

namespace vortex {

Vec2 velocity_field(const Vorticities& gammas, const std::array<Vec2, 4>& x,
                    int i) {
  Vec2 out{};
  for (int j = 0; j < 4; ++j) {
    if (j == i) continue;
    Vec2 d = x[j] - x[i];
    out += gammas[j] / d.norm2() * d;
  }
  return out;
}

RotationFit fit_rotation(const Vorticities& gammas,
                         const std::array<Vec2, 4>& x) {
  // -lambda x_i + d = S_i with d = lambda c, solved for (lambda, d)
  Eigen::Matrix<double, 8, 3> M;
  Eigen::Matrix<double, 8, 1> b;
  for (int i = 0; i < 4; ++i) {
    Vec2 S = velocity_field(gammas, x, i);
    M.row(2 * i) << -x[i].x, 1.0, 0.0;
    M.row(2 * i + 1) << -x[i].y, 0.0, 1.0;
    b(2 * i) = S.x;
    b(2 * i + 1) = S.y;
  }
  Eigen::Vector3d sol = M.colPivHouseholderQr().solve(b);
  RotationFit fit;
  fit.lambda = sol(0);
  fit.residual = (M * sol - b).norm();
  double smin = distances_from_positions(x).min();
  double lambda_scale = gammas.abs_sum() / smin;
  if (std::abs(fit.lambda) > 1e-12 * lambda_scale) {
    fit.center = {sol(1) / fit.lambda, sol(2) / fit.lambda};
  } else if (std::abs(gammas.total()) > 1e-12 * gammas.abs_sum()) {
    Vec2 c{};
    for (int i = 0; i < 4; ++i) c += gammas[i] * x[i];
    fit.center = c / gammas.total();
  } else {
    fit.center = (x[0] + x[1] + x[2] + x[3]) / 4.0;
  }
  return fit;
}

double lambda_prime_from_dziobek(const DistanceVector& s) {
  // (1/s_ab + t)(1/s_cd + t) = (1/s_ef + t)(1/s_gh + t) is linear in t.
  static constexpr std::array<std::array<int, 4>, 3> pairings{{
      {0, 5, 1, 4},  // (12)(34) vs (13)(24)
      {1, 4, 2, 3},  // (13)(24) vs (14)(23)
      {0, 5, 2, 3},  // (12)(34) vs (14)(23)
  }};
  auto a = s.as_array();
  double best_den = 0.0, best = 0.0;
  bool found = false;
  for (const auto& p : pairings) {
    double u1 = 1.0 / a[p[0]], u2 = 1.0 / a[p[1]];
    double v1 = 1.0 / a[p[2]], v2 = 1.0 / a[p[3]];
    double den = (u1 + u2) - (v1 + v2);
    double num = v1 * v2 - u1 * u2;
    if (std::abs(den) > std::abs(best_den)) {
      best_den = den;
      best = num / den;
      found = true;
    }
  }
  double scale = 1.0 / s.min();
  if (!found || std::abs(best_den) < 1e-13 * scale)
    throw std::domain_error("all pair-product equalities degenerate");
  return best;
}

namespace {

double S_of(const DistanceVector& s, double lp, int i, int j) {
  return 1.0 / s.between(i, j) + lp;
}

}  // namespace

ResidualReport compute_residuals(const Vorticities& gammas,
                                 const DistanceVector& s,
                                 const std::array<Vec2, 4>& x, double lambda,
                                 const Vec2& center, double lambda_prime,
                                 bool planar_groups) {
  ResidualReport rep;
  rep.planar_groups = planar_groups;
  const double lp = lambda_prime;

  // symmetrized equations, one per unordered pair
  for (size_t k = 0; k < kPairs.size(); ++k) {
    auto [i, j] = kPairs[k];
    double tot = 0.0;
    for (int l = 0; l < 4; ++l) {
      double Sil = (l == i) ? 0.0 : S_of(s, lp, i, l);
      double Sjl = (l == j) ? 0.0 : S_of(s, lp, j, l);
      double sil = (l == i) ? 0.0 : s.between(i, l);
      double sjl = (l == j) ? 0.0 : s.between(j, l);
      double sij = s.between(i, j);
      tot += gammas[l] * (Sil * (sjl - sil - sij) + Sjl * (sil - sjl - sij));
    }
    rep.ac_f[k] = tot;
  }

  // unsymmetrized equations, one per ordered pair
  int n = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      double tot = 0.0;
      for (int l = 0; l < 4; ++l) {
        if (l == i) continue;
        double sjl = (l == j) ? 0.0 : s.between(j, l);
        tot += gammas[l] * S_of(s, lp, i, l) *
               (sjl - s.between(i, l) - s.between(i, j));
      }
      rep.ac_g[n++] = tot;
    }

  if (planar_groups) {
    double p1 = S_of(s, lp, 0, 1) * S_of(s, lp, 2, 3);
    double p2 = S_of(s, lp, 0, 2) * S_of(s, lp, 1, 3);
    double p3 = S_of(s, lp, 0, 3) * S_of(s, lp, 1, 2);
    rep.dziobek = {p1 - p2, p2 - p3};
    rep.ccfactor = (s.s13 - s.s12) * (s.s23 - s.s34) * (s.s24 - s.s14) -
                   (s.s12 - s.s14) * (s.s24 - s.s34) * (s.s13 - s.s23);
  }

  rep.cayley_menger = cayley_menger(s);

  for (int i = 0; i < 4; ++i) {
    Vec2 r = lambda * (x[i] - center) + velocity_field(gammas, x, i);
    rep.eqcc[i] = r.norm();
  }

  double mx = 0.0;
  for (double v : rep.ac_f) mx = std::max(mx, std::abs(v));
  for (double v : rep.ac_g) mx = std::max(mx, std::abs(v));
  if (planar_groups) {
    for (double v : rep.dziobek) mx = std::max(mx, std::abs(v));
    mx = std::max(mx, std::abs(rep.ccfactor));
  }
  mx = std::max(mx, std::abs(rep.cayley_menger));
  for (double v : rep.eqcc) mx = std::max(mx, std::abs(v));
  rep.max_abs = mx;
  return rep;
}

SolutionRecord assemble_record(double m, const Vorticities& gammas,
                               const DistanceVector& raw_distances,
                               int label_multiplicity,
                               const std::array<Vec2, 4>* raw_positions) {
  auto raw_x = raw_positions ? *raw_positions
                             : reconstruct_positions(raw_distances);
  RotationFit raw_fit = fit_rotation(gammas, raw_x);

  double total = gammas.total();
  double lp_raw;
  if (std::abs(total) > 1e-12 * gammas.abs_sum())
    lp_raw = -raw_fit.lambda / total;
  else
    lp_raw = lambda_prime_from_dziobek(raw_distances);

  double scale = std::abs(lp_raw);
  if (scale < 1e-12) scale = 1.0;  // equilibrium: keep the solver gauge

  SolutionRecord rec;
  rec.m = m;
  rec.gammas = gammas;
  rec.label_multiplicity = label_multiplicity;
  rec.distances = raw_distances.scaled(scale);
  double root = std::sqrt(scale);
  std::array<Vec2, 4> x;
  for (int i = 0; i < 4; ++i) x[i] = raw_x[i] * root;

  RotationFit fit = fit_rotation(gammas, x);
  rec.configuration.positions = x;
  rec.configuration.center = fit.center;
  rec.configuration.angular_velocity = fit.lambda;

  double lp;
  if (std::abs(total) > 1e-12 * gammas.abs_sum())
    lp = -fit.lambda / total;
  else
    lp = lambda_prime_from_dziobek(rec.distances);

  rec.scalars.lambda_prime = lp;
  rec.scalars.areas = oriented_areas(x);
  rec.shape = classify_shape(x);

  // Dziobek proportionality g_i g_j S_ij = sigma A_i A_j, least squares
  if (rec.shape.kind != ShapeKind::Collinear) {
    double num = 0.0, den = 0.0;
    for (auto [i, j] : kPairs) {
      double aa = rec.scalars.areas[i] * rec.scalars.areas[j];
      double ss = gammas[i] * gammas[j] * (1.0 / rec.distances.between(i, j) + lp);
      num += ss * aa;
      den += aa * aa;
    }
    rec.scalars.sigma = (den > 0.0) ? num / den : 0.0;
  }

  rec.symmetry = detect_symmetry(gammas, rec.distances, x, fit.lambda);
  rec.residuals =
      compute_residuals(gammas, rec.distances, x, fit.lambda, fit.center, lp,
                        rec.shape.kind != ShapeKind::Collinear);
  return rec;
}

}  // namespace vortex
