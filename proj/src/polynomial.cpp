#include "vortex4/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vortex {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> ascending)
    : c_(ascending) {
  trim();
}

Polynomial Polynomial::from_descending(std::vector<Rational> descending) {
  std::reverse(descending.begin(), descending.end());
  return Polynomial(std::move(descending));
}

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Polynomial::lead() const {
  if (c_.empty()) throw std::logic_error("lead of zero polynomial");
  return c_.back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + it->get_d();
  return acc;
}

double Polynomial::eval_derivative(double x) const {
  double acc = 0.0;
  for (int i = degree(); i >= 1; --i) acc = acc * x + i * c_[i].get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& s) const {
  // Repeated synthetic division computes the Taylor coefficients of p at s.
  std::vector<Rational> work = c_;
  std::vector<Rational> out(c_.size(), Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    for (size_t i = c_.size() - 1; i > k; --i) work[i - 1] += s * work[i];
    out[k] = work[k];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& k) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= k;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& div) const {
  if (div.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rational> rem = c_;
  const int dd = div.degree();
  const int dn = degree();
  if (dn < dd) return {Polynomial(), *this};
  std::vector<Rational> quo(dn - dd + 1, Rational(0));
  for (int k = dn - dd; k >= 0; --k) {
    Rational q = rem[k + dd] / div.c_.back();
    quo[k] = q;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= q * div.c_[i];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / lead());
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divide(y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();  // keep coefficients small
  }
  return x.is_zero() ? x : x.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  if (p.degree() <= 0) return {};
  Polynomial f = p.monic();
  Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = f.divide(a).first;       // product of distinct roots
  Polynomial c = fp.divide(a).first;
  Polynomial d = c - b.derivative();
  std::vector<Polynomial> out;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    out.push_back(g.is_zero() ? Polynomial({Rational(1)}) : g.monic());
    b = b.divide(g).first;
    c = d.divide(g).first;
    d = c - b.derivative();
  }
  return out;
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
  // Res(a, b) via the Euclidean recurrence on rational coefficients.
  if (a.is_zero() || b.is_zero()) return Rational(0);
  Polynomial p = a, q = b;
  Rational res(1);
  while (q.degree() > 0) {
    Polynomial r = p.divide(q).second;
    int dp = p.degree(), dq = q.degree();
    int dr = r.is_zero() ? -1 : r.degree();
    if ((dp & 1) && (dq & 1)) res = -res;
    if (r.is_zero()) return Rational(0);
    res *= pow_int(q.lead(), static_cast<unsigned>(dp - dr));
    p = std::move(q);
    q = std::move(r);
  }
  // q is a nonzero constant
  res *= pow_int(q.coeff(0), static_cast<unsigned>(p.degree()));
  return res;
}

Rational discriminant(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  if (n == 1) return Rational(1);
  Rational res = resultant(p, p.derivative());
  Rational d = res / p.lead();
  if (((n * (n - 1)) / 2) & 1) d = -d;
  return d;
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational ab = abs(c);
    if (ab != 1 || i == 0) os << ab.get_str();
    if (i > 0) {
      if (ab != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace vortex
