#pragma once

#include "vortex4/model.hpp"

namespace vortex {

struct RotationFit {
  double lambda = 0.0;
  Vec2 center{};
  double residual = 0.0;  // least-squares misfit of the rigid-rotation model
};

// Velocity contribution sum_j g_j (x_j - x_i)/s_ij felt by vortex i.
Vec2 velocity_field(const Vorticities& gammas, const std::array<Vec2, 4>& x,
                    int i);

// Least-squares fit of -lambda (x_i - c) = velocity_field(i) over all four
// vortices; robust where the angular impulse and the moment both vanish.
RotationFit fit_rotation(const Vorticities& gammas,
                         const std::array<Vec2, 4>& x);

// lambda' from the equality of the Dziobek pair products, which is linear in
// lambda'. Throws std::domain_error if every pairing degenerates.
double lambda_prime_from_dziobek(const DistanceVector& s);

ResidualReport compute_residuals(const Vorticities& gammas,
                                 const DistanceVector& s,
                                 const std::array<Vec2, 4>& x, double lambda,
                                 const Vec2& center, double lambda_prime,
                                 bool planar_groups);

// Assemble a fully populated record from solver output: reconstruct
// positions (or take the solver's own, when it has exact ones), rescale so
// |lambda'| = 1 (when lambda' != 0), fit the rotation, classify shape and
// symmetry, and evaluate every applicable residual group.
SolutionRecord assemble_record(double m, const Vorticities& gammas,
                               const DistanceVector& raw_distances,
                               int label_multiplicity = 1,
                               const std::array<Vec2, 4>* raw_positions = nullptr);

}  // namespace vortex
