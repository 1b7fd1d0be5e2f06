#pragma once

#include <vector>

#include "vortex4/polynomial.hpp"

namespace vortex {

// One real root of a polynomial: an exact rational bracket [lower, upper]
// containing exactly this root, the refined double approximation, and the
// multiplicity of the root in the original (not squarefree) polynomial.
struct IsolatedRoot {
  Rational lower;
  Rational upper;
  double value = 0.0;
  int multiplicity = 1;
};

// Sturm chain of p: chain[0] = p, chain[1] = p', then negated remainders.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

int sign_variations_at(const std::vector<Polynomial>& chain, const Rational& x);
int sign_variations_at_neg_inf(const std::vector<Polynomial>& chain);
int sign_variations_at_pos_inf(const std::vector<Polynomial>& chain);

// Number of distinct real roots in the half-open interval (a, b].
int count_roots(const std::vector<Polynomial>& chain, const Rational& a,
                const Rational& b);
int count_real_roots(const Polynomial& p);

// Upper bound on the number of positive real roots (sign variations of the
// coefficient sequence); equals the count mod 2.
int descartes_bound(const Polynomial& p);

// All real roots with multiplicities, sorted ascending, brackets pairwise
// disjoint. Each root is refined until the bracket width and the Newton
// correction on the squarefree part fall below refine_tol (relative).
// Throws std::invalid_argument on the zero polynomial.
std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p,
                                             double refine_tol = 1e-13);

// Real roots of p inside the open interval (lo, hi).
std::vector<IsolatedRoot> isolate_real_roots_in(const Polynomial& p,
                                                const Rational& lo,
                                                const Rational& hi,
                                                double refine_tol = 1e-13);

}  // namespace vortex
