#include "vortex4/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vortex {

namespace {

Polynomial squarefree_part(const Polynomial& p) {
  Polynomial g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p.monic();
  return p.divide(g).first.monic();
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Power-of-two upper bound on the absolute value of every root (Cauchy bound).
Rational root_bound(const Polynomial& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational a = abs(p.coeff(i) / p.lead());
    if (a > m) m = a;
  }
  Rational b = m + 1;
  Rational pow2(1);
  while (pow2 < b) pow2 *= 2;
  return pow2;
}

}  // namespace

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain;
  Polynomial f = squarefree_part(p);
  chain.push_back(f);
  if (f.degree() < 1) return chain;
  chain.push_back(f.derivative());
  while (chain.back().degree() > 0) {
    Polynomial r = chain[chain.size() - 2].divide(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations_at(const std::vector<Polynomial>& chain, const Rational& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) s.push_back(sign(q(x)));
  return variations(s);
}

int sign_variations_at_neg_inf(const std::vector<Polynomial>& chain) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) {
    if (q.is_zero()) {
      s.push_back(0);
      continue;
    }
    int l = sign(q.lead());
    s.push_back((q.degree() & 1) ? -l : l);
  }
  return variations(s);
}

int sign_variations_at_pos_inf(const std::vector<Polynomial>& chain) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) s.push_back(q.is_zero() ? 0 : sign(q.lead()));
  return variations(s);
}

int count_roots(const std::vector<Polynomial>& chain, const Rational& a,
                const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("count_roots needs a < b");
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

int count_real_roots(const Polynomial& p) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(p);
  return sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain);
}

int descartes_bound(const Polynomial& p) {
  std::vector<int> s;
  for (const auto& c : p.coeffs()) s.push_back(sgn(c));
  return variations(s);
}

namespace {

struct Bracket {
  Rational lo, hi;  // f(lo) and f(hi) nonzero with opposite signs,
                    // or lo == hi at an exact rational root
  const Polynomial* f = nullptr;
  int multiplicity = 1;
};

// Split point inside (lo, hi) avoiding roots of f, biased toward the middle.
Rational split_point(const Polynomial& f, const Rational& lo, const Rational& hi) {
  Rational w = hi - lo;
  for (int k = 2; k < 64; ++k) {
    Rational mid = lo + w / k;
    if (f(mid) != 0) return mid;
  }
  throw std::runtime_error("could not find a root-free split point");
}

void bisect_once(Bracket& br) {
  if (br.lo == br.hi) return;
  Rational mid = split_point(*br.f, br.lo, br.hi);
  if (sign((*br.f)(mid)) == sign((*br.f)(br.lo)))
    br.lo = mid;
  else
    br.hi = mid;
}

double polish(const Polynomial& f, const Bracket& br, double tol) {
  double lo = to_double(br.lo), hi = to_double(br.hi);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 60; ++it) {
    double fx = f.eval(x);
    double dfx = f.eval_derivative(x);
    if (dfx == 0.0) break;
    double step = fx / dfx;
    double nx = x - step;
    if (!(nx >= lo && nx <= hi)) break;
    x = nx;
    if (std::abs(step) <= tol * std::max(1.0, std::abs(x)) * 1e-2) break;
  }
  return x;
}

void isolate_factor(const Polynomial& f, int multiplicity, double tol,
                    std::vector<Bracket>& out) {
  if (f.degree() < 1) return;
  auto chain = sturm_chain(f);
  Rational bound = root_bound(f);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  std::vector<Bracket> isolated;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = count_roots(chain, lo, hi);
    if (n == 0) continue;
    if (n == 1 && f(hi) != 0) {
      // single root strictly inside (lo, hi): f(lo), f(hi) have opposite signs
      isolated.push_back({lo, hi, &f, multiplicity});
      continue;
    }
    if (f(hi) == 0 && n == 1 && count_roots(chain, lo, split_point(f, lo, hi)) == 0) {
      // the only root in (lo, hi] is the exact rational root hi
      isolated.push_back({hi, hi, &f, multiplicity});
      continue;
    }
    Rational mid = split_point(f, lo, hi);
    stack.push_back({lo, mid});
    stack.push_back({mid, hi});
  }
  // refine each bracket to relative width tol
  for (auto& br : isolated) {
    Rational scale = abs(br.hi);
    if (scale < 1) scale = 1;
    Rational target = rational_from_double(tol) * scale;
    int guard = 0;
    while (br.hi - br.lo > target && ++guard < 400) bisect_once(br);
    out.push_back(br);
  }
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p,
                                             double refine_tol) {
  if (p.is_zero())
    throw std::invalid_argument("cannot isolate roots of the zero polynomial");
  std::vector<IsolatedRoot> result;
  if (p.degree() < 1) return result;

  auto factors = squarefree_decomposition(p);
  std::vector<Bracket> brackets;
  for (size_t k = 0; k < factors.size(); ++k)
    isolate_factor(factors[k], static_cast<int>(k) + 1, refine_tol, brackets);

  // brackets of roots from different factors must not overlap
  bool changed = true;
  int guard = 0;
  while (changed && ++guard < 300) {
    changed = false;
    for (size_t i = 0; i < brackets.size(); ++i)
      for (size_t j = i + 1; j < brackets.size(); ++j) {
        Bracket &a = brackets[i], &b = brackets[j];
        if (a.lo < b.hi && b.lo < a.hi) {
          bisect_once(a);
          bisect_once(b);
          changed = true;
        }
      }
  }
  if (changed) throw std::runtime_error("failed to separate root brackets");

  std::sort(brackets.begin(), brackets.end(),
            [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
  for (const auto& br : brackets) {
    IsolatedRoot r;
    r.lower = br.lo;
    r.upper = br.hi;
    r.multiplicity = br.multiplicity;
    r.value = (br.lo == br.hi) ? to_double(br.lo)
                               : polish(*br.f, br, refine_tol);
    result.push_back(std::move(r));
  }
  return result;
}

std::vector<IsolatedRoot> isolate_real_roots_in(const Polynomial& p,
                                                const Rational& lo,
                                                const Rational& hi,
                                                double refine_tol) {
  auto all = isolate_real_roots(p, refine_tol);
  auto sqf = squarefree_part(p);
  std::vector<IsolatedRoot> kept;
  for (auto& r : all) {
    // exact rational root at an endpoint is excluded (open interval)
    if (r.lower == r.upper) {
      if (r.lower > lo && r.lower < hi) kept.push_back(std::move(r));
      continue;
    }
    // shrink until the bracket is strictly clear of both endpoints
    Bracket br{r.lower, r.upper, &sqf, r.multiplicity};
    int guard = 0;
    while (((br.lo < lo && lo < br.hi) || (br.lo < hi && hi < br.hi)) &&
           ++guard < 300) {
      if (sqf(lo) == 0 && br.lo <= lo && lo <= br.hi) break;
      if (sqf(hi) == 0 && br.lo <= hi && hi <= br.hi) break;
      bisect_once(br);
    }
    if (sqf(lo) == 0 && br.lo <= lo && lo <= br.hi) continue;  // root == lo
    if (sqf(hi) == 0 && br.lo <= hi && hi <= br.hi) continue;  // root == hi
    if (br.lo >= lo && br.hi <= hi) {
      r.lower = br.lo;
      r.upper = br.hi;
      r.value = polish(sqf, br, refine_tol);
      kept.push_back(std::move(r));
    }
  }
  return kept;
}

}  // namespace vortex
