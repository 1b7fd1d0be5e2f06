#pragma once

#include "vortex4/model.hpp"

namespace vortex {

DistanceVector distances_from_positions(const std::array<Vec2, 4>& x);

// Embed four points with the given squared mutual distances: vortex 1 at the
// origin, vortex 2 on the positive x axis, vortex 3 in the closed upper half
// plane, vortex 4 on the side that reproduces s34. Throws std::domain_error
// if the distances are not realizable in the plane (relative tolerance tol).
std::array<Vec2, 4> reconstruct_positions(const DistanceVector& s,
                                          double tol = 1e-9);

// Bordered determinant whose vanishing characterizes planar embeddability of
// four points given by squared distances (it is 0 for the unit square and 4
// when all six squared distances equal 1).
double cayley_menger(const DistanceVector& s);

// Oriented areas A_i = (-1)^(i+1) * signed area of the triangle formed by the
// other three vortices in increasing index order; they always sum to zero.
std::array<double, 4> oriented_areas(const std::array<Vec2, 4>& x);

// Collinear / Convex / Concave(interior vortex) by the sign pattern of the
// oriented areas; Degenerate when the pattern is ambiguous at tol (the call
// cross-checks against 10*tol and refuses to guess if the two disagree).
Shape classify_shape(const std::array<Vec2, 4>& x, double tol = 1e-7);

SymmetryType detect_symmetry(const Vorticities& gammas,
                             const DistanceVector& s,
                             const std::array<Vec2, 4>& x, double lambda,
                             double tol = 1e-7);

}  // namespace vortex
