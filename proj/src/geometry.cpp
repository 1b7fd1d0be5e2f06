#include "vortex4/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vortex {

double Vorticities::abs_sum() const {
  return std::abs(g[0]) + std::abs(g[1]) + std::abs(g[2]) + std::abs(g[3]);
}

double Vorticities::angular_impulse_coefficient() const {
  double L = 0.0;
  for (auto [i, j] : kPairs) L += g[i] * g[j];
  return L;
}

int DistanceVector::index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == 0) return j - 1;         // (0,1)->0 (0,2)->1 (0,3)->2
  if (i == 1) return j + 1;         // (1,2)->3 (1,3)->4
  if (i == 2 && j == 3) return 5;   // (2,3)->5
  throw std::out_of_range("bad pair index");
}

double DistanceVector::max() const {
  auto a = as_array();
  return *std::max_element(a.begin(), a.end());
}

double DistanceVector::min() const {
  auto a = as_array();
  return *std::min_element(a.begin(), a.end());
}

DistanceVector distances_from_positions(const std::array<Vec2, 4>& x) {
  std::array<double, 6> s{};
  for (size_t k = 0; k < kPairs.size(); ++k)
    s[k] = (x[kPairs[k].first] - x[kPairs[k].second]).norm2();
  return DistanceVector::from_array(s);
}

std::array<Vec2, 4> reconstruct_positions(const DistanceVector& s, double tol) {
  const double scale = s.max();
  for (double v : s.as_array())
    if (!(v > 0)) throw std::domain_error("squared distances must be positive");
  const double r12 = std::sqrt(s.s12);
  std::array<Vec2, 4> x{};
  x[1] = {r12, 0.0};
  auto lift = [&](double si1, double si2) -> Vec2 {
    double px = (s.s12 + si1 - si2) / (2.0 * r12);
    double py2 = si1 - px * px;
    if (py2 < -tol * scale)
      throw std::domain_error("distances are not planar-realizable");
    // heights below the resolution of the squared distances are noise;
    // without the snap a collinear input lifts to y ~ sqrt(eps)
    if (py2 < 1e-13 * scale) py2 = 0.0;
    return {px, std::sqrt(py2)};
  };
  x[2] = lift(s.s13, s.s23);
  Vec2 p4 = lift(s.s14, s.s24);
  Vec2 p4m{p4.x, -p4.y};
  double up = std::abs((p4 - x[2]).norm2() - s.s34);
  double dn = std::abs((p4m - x[2]).norm2() - s.s34);
  x[3] = (up <= dn) ? p4 : p4m;
  if (std::min(up, dn) > tol * scale * 10.0)
    throw std::domain_error("distances are not planar-realizable");
  return x;
}

double cayley_menger(const DistanceVector& s) {
  Eigen::Matrix<double, 5, 5> M = Eigen::Matrix<double, 5, 5>::Ones();
  M(0, 0) = 0.0;
  for (int i = 0; i < 4; ++i) {
    M(i + 1, i + 1) = 0.0;
    for (int j = 0; j < 4; ++j)
      if (i != j) M(i + 1, j + 1) = s.between(i, j);
  }
  return M.determinant();
}

std::array<double, 4> oriented_areas(const std::array<Vec2, 4>& x) {
  auto tri = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    return 0.5 * (b - a).cross(c - a);
  };
  return {tri(x[1], x[2], x[3]), -tri(x[0], x[2], x[3]),
          tri(x[0], x[1], x[3]), -tri(x[0], x[1], x[2])};
}

namespace {

Shape classify_at(const std::array<double, 4>& A, double thresh) {
  int pos = 0, neg = 0, zero = 0;
  for (double a : A) {
    if (a > thresh) ++pos;
    else if (a < -thresh) ++neg;
    else ++zero;
  }
  if (zero == 4) return {ShapeKind::Collinear, -1};
  if (zero > 0) return {ShapeKind::Degenerate, -1};
  if (pos == 2 && neg == 2) return {ShapeKind::Convex, -1};
  if (pos == 3 || neg == 3) {
    int want = (pos == 3) ? -1 : +1;
    for (int i = 0; i < 4; ++i)
      if ((want < 0 && A[i] < 0) || (want > 0 && A[i] > 0))
        return {ShapeKind::Concave, i + 1};
  }
  return {ShapeKind::Degenerate, -1};
}

}  // namespace

Shape classify_shape(const std::array<Vec2, 4>& x, double tol) {
  auto A = oriented_areas(x);
  double scale = distances_from_positions(x).max();
  Shape a = classify_at(A, tol * scale);
  Shape b = classify_at(A, 10.0 * tol * scale);
  if (a.kind != b.kind || a.interior != b.interior)
    return {ShapeKind::Degenerate, -1};
  return a;
}

namespace {

bool collinear_reflection_symmetric(const Vorticities& gammas,
                                    const std::array<Vec2, 4>& x, double tol) {
  // project on the direction of maximal extent
  Vec2 dir{};
  double best = -1.0;
  for (auto [i, j] : kPairs) {
    Vec2 d = x[j] - x[i];
    if (d.norm2() > best) {
      best = d.norm2();
      dir = d;
    }
  }
  dir = dir / dir.norm();
  std::array<std::pair<double, double>, 4> t;  // (coordinate, strength)
  for (int i = 0; i < 4; ++i) t[i] = {x[i].dot(dir), gammas[i]};
  std::sort(t.begin(), t.end());
  double len_scale = std::sqrt(best);
  double g1 = t[1].first - t[0].first;
  double g3 = t[3].first - t[2].first;
  if (std::abs(g1 - g3) > tol * len_scale) return false;
  for (int i = 0; i < 4; ++i)
    if (std::abs(t[i].second - t[3 - i].second) > 1e-9) return false;
  return true;
}

}  // namespace

SymmetryType detect_symmetry(const Vorticities& gammas, const DistanceVector& s,
                             const std::array<Vec2, 4>& x, double lambda,
                             double tol) {
  const double scale = s.max();
  auto eq = [&](double a, double b) { return std::abs(a - b) <= tol * scale; };

  Shape shape = classify_shape(x, tol);
  if (shape.kind == ShapeKind::Collinear)
    return collinear_reflection_symmetric(gammas, x, tol)
               ? SymmetryType::CollinearSymmetric
               : SymmetryType::CollinearAsymmetric;

  double lambda_scale = gammas.abs_sum() / s.min();
  if (std::abs(lambda) <= 1e-8 * lambda_scale) return SymmetryType::Equilibrium;

  // diagonal pairings: the two pairs named, sides the remaining four
  struct Pairing {
    int d1, d2;  // indices into the distance array
    std::array<int, 4> sides;
  };
  static constexpr std::array<Pairing, 3> pairings{{
      {0, 5, {1, 2, 3, 4}},  // (12),(34)
      {1, 4, {0, 2, 3, 5}},  // (13),(24)
      {2, 3, {0, 1, 4, 5}},  // (14),(23)
  }};
  auto sa = s.as_array();
  for (const auto& pr : pairings) {
    bool sides_equal = eq(sa[pr.sides[0]], sa[pr.sides[1]]) &&
                       eq(sa[pr.sides[1]], sa[pr.sides[2]]) &&
                       eq(sa[pr.sides[2]], sa[pr.sides[3]]);
    if (!sides_equal) continue;
    if (eq(sa[pr.d1], sa[pr.d2]) && eq(sa[pr.d1], 2.0 * sa[pr.sides[0]]))
      return SymmetryType::Square;
    return SymmetryType::Rhombus;
  }

  // one vortex equidistant from an equilateral triple at one third the side
  for (int c = 0; c < 4; ++c) {
    std::array<int, 3> o{};
    int n = 0;
    for (int i = 0; i < 4; ++i)
      if (i != c) o[n++] = i;
    double a01 = s.between(o[0], o[1]), a02 = s.between(o[0], o[2]),
           a12 = s.between(o[1], o[2]);
    double b0 = s.between(c, o[0]), b1 = s.between(c, o[1]),
           b2 = s.between(c, o[2]);
    if (eq(a01, a02) && eq(a01, a12) && eq(b0, b1) && eq(b0, b2) &&
        eq(3.0 * b0, a01))
      return SymmetryType::EquilateralPlusCenter;
  }

  if (eq(s.s13, s.s23) && eq(s.s14, s.s24)) return SymmetryType::Kite34;
  if (eq(s.s13, s.s14) && eq(s.s23, s.s24)) return SymmetryType::Kite12;
  if (eq(s.s13, s.s24) && eq(s.s14, s.s23)) return SymmetryType::IsoscelesTrapezoid;
  return SymmetryType::Asymmetric;
}

const char* to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::Collinear: return "collinear";
    case ShapeKind::Convex: return "convex";
    case ShapeKind::Concave: return "concave";
    case ShapeKind::Degenerate: return "degenerate";
  }
  return "?";
}

const char* to_string(SymmetryType t) {
  switch (t) {
    case SymmetryType::Square: return "square";
    case SymmetryType::Rhombus: return "rhombus";
    case SymmetryType::IsoscelesTrapezoid: return "isosceles_trapezoid";
    case SymmetryType::Kite12: return "kite_axis12";
    case SymmetryType::Kite34: return "kite_axis34";
    case SymmetryType::CollinearSymmetric: return "collinear_symmetric";
    case SymmetryType::CollinearAsymmetric: return "collinear_asymmetric";
    case SymmetryType::Asymmetric: return "asymmetric";
    case SymmetryType::EquilateralPlusCenter: return "equilateral_plus_center";
    case SymmetryType::Equilibrium: return "equilibrium";
  }
  return "?";
}

}  // namespace vortex
