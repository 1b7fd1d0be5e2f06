#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace vortex {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {k * x, k * y}; }
  Vec2 operator/(double k) const { return {x / k, y / k}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
};

inline Vec2 operator*(double k, const Vec2& v) { return v * k; }

// Vortex strengths (g1, g2, g3, g4).
struct Vorticities {
  std::array<double, 4> g{1.0, 1.0, 1.0, 1.0};

  // the one-parameter family (1, 1, m, m)
  static Vorticities census(double m) { return {{1.0, 1.0, m, m}}; }

  double operator[](int i) const { return g[i]; }
  double total() const { return g[0] + g[1] + g[2] + g[3]; }
  double abs_sum() const;
  // sum of pairwise products g_i g_j, i < j
  double angular_impulse_coefficient() const;
};

// Squared mutual distances s_ij = r_ij^2 in the fixed order
// (12, 13, 14, 23, 24, 34).
struct DistanceVector {
  double s12 = 0, s13 = 0, s14 = 0, s23 = 0, s24 = 0, s34 = 0;

  static int index(int i, int j);  // 0-based vortex indices
  double between(int i, int j) const { return as_array()[index(i, j)]; }
  std::array<double, 6> as_array() const { return {s12, s13, s14, s23, s24, s34}; }
  static DistanceVector from_array(const std::array<double, 6>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5]};
  }
  double max() const;
  double min() const;
  DistanceVector scaled(double k) const {
    return {k * s12, k * s13, k * s14, k * s23, k * s24, k * s34};
  }
};

// The six unordered vortex pairs, matching DistanceVector order.
inline constexpr std::array<std::pair<int, int>, 6> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct PlanarConfiguration {
  std::array<Vec2, 4> positions{};
  Vec2 center{};
  double angular_velocity = 0.0;
};

// Multipliers of the mutual-distance formulation: S_ij = 1/s_ij + lambda',
// the Dziobek proportionality g_i g_j S_ij = sigma A_i A_j, and the oriented
// triangle areas A_i (which sum to zero).
struct DziobekScalars {
  double lambda_prime = 0.0;
  double sigma = 0.0;
  std::array<double, 4> areas{};
};

enum class ShapeKind { Collinear, Convex, Concave, Degenerate };

struct Shape {
  ShapeKind kind = ShapeKind::Degenerate;
  int interior = -1;  // 1-based index of the interior vortex when Concave
};

enum class SymmetryType {
  Square,
  Rhombus,
  IsoscelesTrapezoid,
  Kite12,  // reflection axis through vortices 1 and 2
  Kite34,  // reflection axis through vortices 3 and 4
  CollinearSymmetric,
  CollinearAsymmetric,
  Asymmetric,
  EquilateralPlusCenter,
  Equilibrium,
};

const char* to_string(ShapeKind k);
const char* to_string(SymmetryType t);

struct ResidualReport {
  std::array<double, 6> ac_f{};    // symmetrized mutual-distance equations
  std::array<double, 12> ac_g{};   // unsymmetrized, ordered pairs (i,j), i != j
  std::array<double, 2> dziobek{}; // consecutive differences of pair products
  double ccfactor = 0.0;
  double cayley_menger = 0.0;
  std::array<double, 4> eqcc{};    // per-vortex equation of motion residual
  double max_abs = 0.0;
  bool planar_groups = true;  // dziobek/ccfactor evaluated (not for collinear)
};

struct SolutionRecord {
  double m = 0.0;  // strength parameter, g4/g1
  Vorticities gammas;
  DistanceVector distances;
  PlanarConfiguration configuration;
  DziobekScalars scalars;
  Shape shape;
  SymmetryType symmetry = SymmetryType::Asymmetric;
  ResidualReport residuals;
  int label_multiplicity = 1;
};

}  // namespace vortex
