#pragma once

#include <gmpxx.h>

#include <string>

namespace vortex {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Exact dyadic rational equal to the given double. Throws on NaN/inf.
Rational rational_from_double(double x);

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

Rational pow_int(const Rational& base, unsigned exp);

std::string to_string(const Rational& q);

}  // namespace vortex
