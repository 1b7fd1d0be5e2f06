#pragma once

#include "vortex4/polynomial.hpp"

namespace vortex {

enum class QuarticClass {
  AllRealDistinct,
  AllComplexDistinct,
  TwoRealTwoComplex,
  RepeatedRoots,
};

const char* to_string(QuarticClass c);

// Root-structure report for a degree-4 polynomial a x^4 + b x^3 + ... :
//   shift = b / (4a), so substituting x = y - shift and dividing by a gives
//   the monic depressed quartic y^4 + p y^2 + q y + r;
//   discriminant is the standard discriminant of the input quartic;
//   resolvent is z^3 - 2p z^2 + (p^2 - 4r) z + q^2, whose discriminant
//   equals the discriminant of the depressed quartic.
struct QuarticReport {
  Rational p, q, r;
  Rational shift;
  Rational discriminant;
  Polynomial resolvent;
  QuarticClass classification;
};

// Exact classification by the sign of the discriminant and the signs of p and
// p^2 - 4r. Throws std::domain_error unless degree is exactly 4.
QuarticReport classify_quartic(const Polynomial& quartic);

// Numerator of p((k2 u + k1) / (u + 1)) after clearing (u + 1)^deg(p).
// The map u -> (k2 u + k1)/(u + 1) sends [0, inf) onto [k1, k2), so roots of
// p in [k1, k2) correspond to roots of the result in [0, inf).
// Requires k1 < k2.
Polynomial mobius_transform(const Polynomial& p, const Rational& k1,
                            const Rational& k2);

}  // namespace vortex
