#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "vortex4/rational.hpp"

namespace vortex {

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending degree order. The zero polynomial has an empty coefficient vector
// and degree -1; otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  static Polynomial from_descending(std::vector<Rational> descending);
  static Polynomial monomial(int degree, const Rational& coeff = Rational(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const;
  Rational coeff(int i) const;  // 0 outside the stored range
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;
  double eval(double x) const;  // Horner on double-converted coefficients
  double eval_derivative(double x) const;

  Polynomial derivative() const;
  Polynomial shifted(const Rational& s) const;  // p(x + s)

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& k) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  // Euclidean division: returns (quotient, remainder) with
  // *this == quotient * div + remainder, deg remainder < deg div.
  std::pair<Polynomial, Polynomial> divide(const Polynomial& div) const;

  Polynomial monic() const;

  friend Polynomial gcd(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Squarefree decomposition (Yun). result[k] holds, monic, the product of
// (x - r) over roots r of multiplicity exactly k+1; trivial factors are the
// constant 1. The input factors as lead * prod result[k]^(k+1).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

Rational resultant(const Polynomial& a, const Polynomial& b);

// Standard discriminant (-1)^(n(n-1)/2) Res(p, p') / lead(p).
Rational discriminant(const Polynomial& p);

std::string to_string(const Polynomial& p, const std::string& var = "x");

}  // namespace vortex
