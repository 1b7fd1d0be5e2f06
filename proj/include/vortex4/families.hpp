#pragma once

#include <vector>

#include "vortex4/model.hpp"

namespace vortex {

// Rhombus with vortices 1,2 on one diagonal and 3,4 on the other.
// sign = +1 selects the branch with the longer cross diagonal; the -1 branch
// exists only for m in (-1, 0). Throws std::domain_error outside the domain.
SolutionRecord solve_rhombus(double m, int sign);

// All rhombus branches valid at m.
std::vector<SolutionRecord> solve_rhombi(double m);

// Isosceles trapezoid with the unit-strength pair on one parallel side and
// the m-pair on the other; exists for m in (0, 1], a square at m = 1.
SolutionRecord solve_trapezoid(double m);

// Kites symmetric across the axis through vortices 3 and 4 (the equal pair
// 1,2 is swapped by the reflection). Returns every configuration passing the
// residual gate; empty when the family does not exist at m.
std::vector<SolutionRecord> solve_kites_axis34(double m);

// Kites symmetric across the axis through vortices 1 and 2. Combines the
// strength-inversion relabeling of the axis-34 family with the direct
// construction that exists where the multiplier turns positive.
std::vector<SolutionRecord> solve_kites_axis12(double m);

// Strengths (g1, g2, 1, 1) with g2 chosen so the pairwise product sum
// vanishes, the necessary condition for a four-vortex equilibrium.
Vorticities kite_equilibrium_strengths(double g1);

// Closed-form equilibrium positions for strengths with vanishing pairwise
// product sum. Throws std::domain_error when that sum is not (near) zero.
std::array<Vec2, 4> equilibrium_positions(const Vorticities& gammas);

SolutionRecord make_equilibrium_record(const Vorticities& gammas);

// Multi-start least-squares Newton search over squared distances for
// relative equilibria with zero total strength. Deterministic for a fixed
// seed; results are deduplicated and pass the full residual gate.
std::vector<SolutionRecord> solve_zero_total_strength(const Vorticities& gammas,
                                                      int starts = 400,
                                                      unsigned seed = 7);

}  // namespace vortex
