#include "vortex4/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace vortex {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational pow_int(const Rational& base, unsigned exp) {
  Rational out(1);
  Rational b = base;
  while (exp) {
    if (exp & 1u) out *= b;
    b *= b;
    exp >>= 1u;
  }
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace vortex
