#pragma once
// Independent reference procedures used only by tests.

#include <functional>
#include <random>
#include <vector>

#include "subq/core/upoly.hpp"

namespace oracle {

using subq::Integer;
using subq::QPoly;
using subq::Rational;
using subq::ZPoly;

inline std::vector<Integer> divisors_signed(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      if (d * d != n) {
        out.push_back(n / d);
        out.push_back(-(n / d));
      }
    }
  }
  return out;
}

/// Kronecker's method: a primitive integer polynomial of degree n is
/// reducible iff some integer polynomial of degree 1..n/2 divides it; such a
/// factor is pinned down by its values at d+1 points, which divide the values
/// of f there.
inline bool kronecker_irreducible(const ZPoly& f0) {
  ZPoly f = f0.primitive();
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  QPoly fq = f.to_q();
  for (int d = 1; d <= n / 2; ++d) {
    std::vector<Rational> xs;
    std::vector<std::vector<Integer>> choices;
    for (int k = 0; static_cast<int>(xs.size()) <= d; ++k) {
      long x = (k % 2) ? (k + 1) / 2 : -(k / 2);
      Integer v = f.eval(Integer(x));
      if (v == 0) return false;  // linear factor T - x
      xs.emplace_back(x);
      choices.push_back(divisors_signed(v));
    }
    std::vector<std::size_t> idx(xs.size(), 0);
    while (true) {
      std::vector<Rational> ys;
      for (std::size_t i = 0; i < xs.size(); ++i) ys.emplace_back(choices[i][idx[i]]);
      QPoly g = subq::interpolate(xs, ys);
      if (g.degree() >= 1) {
        bool integral = true;
        for (const auto& c : g.coeffs()) integral = integral && c.get_den() == 1;
        if (integral && subq::rem(fq, g).is_zero()) return false;
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return true;
}

inline QPoly random_qpoly(std::mt19937_64& rng, int degree, int coeff_bound, bool monic = false) {
  std::uniform_int_distribution<int> c(-coeff_bound, coeff_bound);
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
  for (auto& x : v) x = c(rng);
  if (monic) v.back() = 1;
  while (v.back() == 0) v.back() = c(rng);
  return QPoly(v);
}

inline bool rational_square(const Rational& q) {
  return q >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

inline Rational rational_sqrt(const Rational& q) {
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

/// Ansatz X^2 + s XY + p Y^2 + u X + v Y + w = (X + aY + b)(X + dY + e)
/// solved over Q: a, d are the roots of z^2 - s z + p, then b, e follow
/// linearly (or from another quadratic when a = d).
inline bool quadric_splits_over_Q(const Rational& s, const Rational& p, const Rational& u, const Rational& v,
                                  const Rational& w) {
  Rational disc = s * s - 4 * p;
  if (!rational_square(disc)) return false;
  Rational r = rational_sqrt(disc);
  for (int sgn : {1, -1}) {
    Rational a = (s + sgn * r) / 2, d = s - a;
    if (a != d) {
      Rational b = (a * u - v) / (a - d), e = u - b;
      if (b * e == w) return true;
    } else if (v == a * u && rational_square(u * u - 4 * w)) {
      return true;
    }
  }
  return false;
}

}  // namespace oracle
