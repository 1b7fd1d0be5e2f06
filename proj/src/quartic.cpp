#include "vortex4/quartic.hpp"

#include <stdexcept>

namespace vortex {

const char* to_string(QuarticClass c) {
  switch (c) {
    case QuarticClass::AllRealDistinct: return "AllRealDistinct";
    case QuarticClass::AllComplexDistinct: return "AllComplexDistinct";
    case QuarticClass::TwoRealTwoComplex: return "TwoRealTwoComplex";
    case QuarticClass::RepeatedRoots: return "RepeatedRoots";
  }
  return "?";
}

QuarticReport classify_quartic(const Polynomial& quartic) {
  if (quartic.degree() != 4)
    throw std::domain_error("classify_quartic: degree must be exactly 4");
  const Rational a = quartic.coeff(4);
  QuarticReport rep;
  rep.shift = quartic.coeff(3) / (4 * a);
  Polynomial depressed = quartic.shifted(-rep.shift) * (1 / a);
  rep.p = depressed.coeff(2);
  rep.q = depressed.coeff(1);
  rep.r = depressed.coeff(0);
  rep.discriminant = discriminant(quartic);
  const Rational &p = rep.p, &q = rep.q, &r = rep.r;
  rep.resolvent = Polynomial{q * q, p * p - 4 * r, -2 * p, Rational(1)};
  if (rep.discriminant == 0)
    rep.classification = QuarticClass::RepeatedRoots;
  else if (rep.discriminant < 0)
    rep.classification = QuarticClass::TwoRealTwoComplex;
  else if (p < 0 && p * p - 4 * r > 0)
    rep.classification = QuarticClass::AllRealDistinct;
  else
    rep.classification = QuarticClass::AllComplexDistinct;
  return rep;
}

Polynomial mobius_transform(const Polynomial& p, const Rational& k1,
                            const Rational& k2) {
  if (!(k1 < k2)) throw std::invalid_argument("mobius_transform needs k1 < k2");
  if (p.is_zero()) return p;
  const int n = p.degree();
  Polynomial num{k1, k2};        // k2 u + k1
  Polynomial den{Rational(1), Rational(1)};  // u + 1
  Polynomial out;
  Polynomial num_pow{Rational(1)};
  std::vector<Polynomial> den_pows(n + 1);
  den_pows[0] = Polynomial{Rational(1)};
  for (int i = 1; i <= n; ++i) den_pows[i] = den_pows[i - 1] * den;
  for (int i = 0; i <= n; ++i) {
    out = out + num_pow * den_pows[n - i] * p.coeff(i);
    num_pow = num_pow * num;
  }
  return out;
}

}  // namespace vortex
