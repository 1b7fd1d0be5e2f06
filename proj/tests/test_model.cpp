#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "vortex4/geometry.hpp"
#include "vortex4/residuals.hpp"

using namespace vortex;

namespace {

std::array<Vec2, 4> unit_square() {
  // vortices 1,2 on one diagonal, 3,4 on the other
  return {Vec2{-0.5, -0.5}, Vec2{0.5, 0.5}, Vec2{0.5, -0.5}, Vec2{-0.5, 0.5}};
}

std::array<Vec2, 4> random_positions(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {Vec2{u(rng), u(rng)}, Vec2{u(rng), u(rng)}, Vec2{u(rng), u(rng)},
          Vec2{u(rng), u(rng)}};
}

}  // namespace

TEST_CASE("distance indexing is consistent with the pair order") {
  for (size_t k = 0; k < kPairs.size(); ++k) {
    auto [i, j] = kPairs[k];
    CHECK(DistanceVector::index(i, j) == static_cast<int>(k));
    CHECK(DistanceVector::index(j, i) == static_cast<int>(k));
  }
  DistanceVector s{1, 2, 3, 4, 5, 6};
  CHECK(s.between(0, 1) == 1);
  CHECK(s.between(3, 2) == 6);
  CHECK(s.between(1, 3) == 5);
  CHECK(s.max() == 6);
  CHECK(s.min() == 1);
}

TEST_CASE("cayley-menger anchors") {
  DistanceVector sq = distances_from_positions(unit_square());
  CHECK(std::abs(cayley_menger(sq)) < 1e-12);
  DistanceVector ones{1, 1, 1, 1, 1, 1};
  CHECK(cayley_menger(ones) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("cayley-menger vanishes for planar points and its gradient matches the areas") {
  std::mt19937 rng(321);
  for (int t = 0; t < 50; ++t) {
    auto x = random_positions(rng);
    DistanceVector s = distances_from_positions(x);
    double scale = std::pow(s.max(), 3);
    CHECK(std::abs(cayley_menger(s)) < 1e-10 * scale);

    auto A = oriented_areas(x);
    // central finite difference of the determinant in each s_ij
    auto a = s.as_array();
    for (size_t k = 0; k < 6; ++k) {
      double h = 1e-6 * s.max();
      auto ap = a, am = a;
      ap[k] += h;
      am[k] -= h;
      double d = (cayley_menger(DistanceVector::from_array(ap)) -
                  cayley_menger(DistanceVector::from_array(am))) /
                 (2 * h);
      auto [i, j] = kPairs[k];
      CHECK(d == doctest::Approx(-32.0 * A[i] * A[j])
                     .epsilon(1e-4)
                     .scale(s.max() * s.max()));
    }
  }
}

TEST_CASE("oriented areas sum to zero and read the shape") {
  std::mt19937 rng(99);
  for (int t = 0; t < 100; ++t) {
    auto x = random_positions(rng);
    auto A = oriented_areas(x);
    double scale = 0.0;
    for (double a : A) scale += std::abs(a);
    CHECK(std::abs(A[0] + A[1] + A[2] + A[3]) < 1e-13 * (scale + 1.0));
  }

  Shape sq = classify_shape(unit_square());
  CHECK(sq.kind == ShapeKind::Convex);

  // equilateral triangle with an interior fourth vortex
  std::array<Vec2, 4> tri{Vec2{0, 0}, Vec2{1, 0}, Vec2{0.5, std::sqrt(3) / 2},
                          Vec2{0.5, 0.3}};
  Shape cc = classify_shape(tri);
  CHECK(cc.kind == ShapeKind::Concave);
  CHECK(cc.interior == 4);

  std::array<Vec2, 4> line{Vec2{-1, 0}, Vec2{-0.2, 0}, Vec2{0.3, 0}, Vec2{1, 0}};
  CHECK(classify_shape(line).kind == ShapeKind::Collinear);

  // a vortex marginally off the edge: ambiguous at the two thresholds
  std::array<Vec2, 4> flat{Vec2{0, 0}, Vec2{1, 0}, Vec2{0.5, 3e-7}, Vec2{0.5, 1.0}};
  CHECK(classify_shape(flat).kind == ShapeKind::Degenerate);
}

TEST_CASE("reconstruction round-trips distances") {
  std::mt19937 rng(2718);
  int done = 0;
  while (done < 200) {
    auto x = random_positions(rng);
    DistanceVector s = distances_from_positions(x);
    if (s.min() < 1e-3) continue;
    auto y = reconstruct_positions(s);
    DistanceVector s2 = distances_from_positions(y);
    auto a = s.as_array(), b = s2.as_array();
    for (int k = 0; k < 6; ++k)
      CHECK(std::abs(a[k] - b[k]) < 1e-12 * s.max());
    ++done;
  }
}

TEST_CASE("reconstruction rejects non-planar distance sets") {
  // regular tetrahedron
  CHECK_THROWS_AS(reconstruct_positions(DistanceVector{1, 1, 1, 1, 1, 1}),
                  std::domain_error);
  CHECK_THROWS_AS(reconstruct_positions(DistanceVector{1, 1, 1, 1, 1, -2}),
                  std::domain_error);
  // violated triangle inequality
  CHECK_THROWS_AS(reconstruct_positions(DistanceVector{100, 1, 1, 1, 1, 1}),
                  std::domain_error);
}

TEST_CASE("rigid rotation fit on the equal-strength square") {
  auto x = unit_square();
  Vorticities g = Vorticities::census(1.0);
  RotationFit fit = fit_rotation(g, x);
  CHECK(fit.lambda == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::abs(fit.center.x) < 1e-12);
  CHECK(std::abs(fit.center.y) < 1e-12);
  CHECK(fit.residual < 1e-12);
}

TEST_CASE("pair-product multiplier on the square") {
  DistanceVector s = distances_from_positions(unit_square());
  // sides 1, diagonals 2: (1/2 + t)^2 = (1 + t)^2 gives t = -3/4
  CHECK(lambda_prime_from_dziobek(s) == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK_THROWS_AS(lambda_prime_from_dziobek(DistanceVector{1, 1, 1, 1, 1, 1}),
                  std::domain_error);
}

TEST_CASE("symmetry detection on canonical configurations") {
  Vorticities g1 = Vorticities::census(1.0);

  auto sq = unit_square();
  CHECK(detect_symmetry(g1, distances_from_positions(sq), sq, 3.0) ==
        SymmetryType::Square);

  std::array<Vec2, 4> rhomb{Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, 0.4}, Vec2{0, -0.4}};
  CHECK(detect_symmetry(g1, distances_from_positions(rhomb), rhomb, 1.0) ==
        SymmetryType::Rhombus);

  // reflection axis through vortices 3 and 4 swaps 1 and 2
  std::array<Vec2, 4> kite34{Vec2{0.7, 0.9}, Vec2{-0.7, 0.9}, Vec2{0, 0.2},
                             Vec2{0, -1.1}};
  CHECK(detect_symmetry(g1, distances_from_positions(kite34), kite34, 1.0) ==
        SymmetryType::Kite34);

  std::array<Vec2, 4> kite12{Vec2{0, 0.2}, Vec2{0, -1.1}, Vec2{0.7, 0.9},
                             Vec2{-0.7, 0.9}};
  CHECK(detect_symmetry(g1, distances_from_positions(kite12), kite12, 1.0) ==
        SymmetryType::Kite12);

  std::array<Vec2, 4> trap{Vec2{-0.5, 0}, Vec2{0.5, 0}, Vec2{0.3, 0.8},
                           Vec2{-0.3, 0.8}};
  CHECK(detect_symmetry(g1, distances_from_positions(trap), trap, 1.0) ==
        SymmetryType::IsoscelesTrapezoid);

  double h = std::sqrt(3.0) / 2.0;
  std::array<Vec2, 4> eqc{Vec2{0, 0}, Vec2{1, 0}, Vec2{0.5, h},
                          Vec2{0.5, h / 3.0}};
  CHECK(detect_symmetry(g1, distances_from_positions(eqc), eqc, 1.0) ==
        SymmetryType::EquilateralPlusCenter);

  std::array<Vec2, 4> line_sym{Vec2{-1, 0}, Vec2{-0.3, 0}, Vec2{0.3, 0},
                               Vec2{1, 0}};
  Vorticities gm = Vorticities::census(0.5);
  // outer pair must carry matching strengths for a true reflection
  Vorticities g_mirror{{0.5, 1.0, 1.0, 0.5}};
  CHECK(detect_symmetry(g_mirror, distances_from_positions(line_sym), line_sym,
                        1.0) == SymmetryType::CollinearSymmetric);
  CHECK(detect_symmetry(gm, distances_from_positions(line_sym), line_sym, 1.0) ==
        SymmetryType::CollinearAsymmetric);

  std::array<Vec2, 4> line_asym{Vec2{-1, 0}, Vec2{-0.5, 0}, Vec2{0.3, 0},
                                Vec2{1, 0}};
  CHECK(detect_symmetry(g1, distances_from_positions(line_asym), line_asym,
                        1.0) == SymmetryType::CollinearAsymmetric);

  std::array<Vec2, 4> scalene{Vec2{0, 0}, Vec2{1.1, 0}, Vec2{0.8, 0.9},
                              Vec2{-0.4, 0.7}};
  CHECK(detect_symmetry(g1, distances_from_positions(scalene), scalene, 1.0) ==
        SymmetryType::Asymmetric);
  CHECK(detect_symmetry(g1, distances_from_positions(scalene), scalene, 0.0) ==
        SymmetryType::Equilibrium);
}

TEST_CASE("record assembly on the equal-strength square") {
  // any uniform scaling of the square is brought to the normalized gauge
  DistanceVector raw = distances_from_positions(unit_square()).scaled(1.7);
  SolutionRecord rec = assemble_record(1.0, Vorticities::census(1.0), raw, 2);
  CHECK(rec.scalars.lambda_prime == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(rec.symmetry == SymmetryType::Square);
  CHECK(rec.shape.kind == ShapeKind::Convex);
  CHECK(rec.label_multiplicity == 2);
  CHECK(rec.residuals.planar_groups);
  CHECK(rec.residuals.max_abs < 1e-12);
  // in the normalized gauge the square has sides 3/4 and diagonals 3/2:
  // lambda' = -1 requires the side pair product (1/a+t)(1/(2a)+t) with t=-1
  CHECK(rec.distances.s13 == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(rec.distances.s12 == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(rec.configuration.angular_velocity == doctest::Approx(4.0).epsilon(1e-12));
  double total = 0.0;
  for (double a : rec.scalars.areas) total += a;
  CHECK(std::abs(total) < 1e-14);
}

TEST_CASE("record assembly on the centered equilateral triangle") {
  DistanceVector s{1.5, 1.5, 0.5, 1.5, 0.5, 0.5};
  SolutionRecord rec = assemble_record(1.0, Vorticities::census(1.0), s, 1);
  CHECK(rec.symmetry == SymmetryType::EquilateralPlusCenter);
  CHECK(rec.shape.kind == ShapeKind::Concave);
  CHECK(rec.shape.interior == 4);
  CHECK(rec.scalars.lambda_prime == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(rec.configuration.angular_velocity == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(rec.residuals.max_abs < 1e-12);
  // Dziobek proportionality holds pairwise with the fitted sigma
  for (auto [i, j] : kPairs) {
    double S = 1.0 / rec.distances.between(i, j) + rec.scalars.lambda_prime;
    double lhs = rec.gammas[i] * rec.gammas[j] * S;
    double rhs = rec.scalars.sigma * rec.scalars.areas[i] * rec.scalars.areas[j];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("record assembly on an equal-strength collinear configuration") {
  double a = std::sqrt(3.0) - std::sqrt(2.0);
  std::array<Vec2, 4> x{Vec2{-1, 0}, Vec2{-a, 0}, Vec2{a, 0}, Vec2{1, 0}};
  DistanceVector s = distances_from_positions(x);
  SolutionRecord rec = assemble_record(1.0, Vorticities::census(1.0), s, 1);
  CHECK(rec.shape.kind == ShapeKind::Collinear);
  CHECK(rec.symmetry == SymmetryType::CollinearSymmetric);
  CHECK_FALSE(rec.residuals.planar_groups);
  CHECK(rec.residuals.max_abs < 1e-10);
  CHECK(std::abs(rec.scalars.lambda_prime) == doctest::Approx(1.0).epsilon(1e-12));
}
