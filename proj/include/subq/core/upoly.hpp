#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subq/core/numbers.hpp"

namespace subq {

/// Dense univariate polynomial over Q; coefficient i multiplies T^i.
/// The zero polynomial has no coefficients; the top coefficient is nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  QPoly(long constant) : QPoly(Rational(constant)) {}  // NOLINT

  static QPoly monomial(const Rational& c, std::size_t degree);
  static QPoly x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Rational& lc() const { return c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  Rational eval(const Rational& t) const;
  QPoly derivative() const;
  QPoly monic() const;
  QPoly operator-() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& s, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  std::string to_string(const std::string& var = "T") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// (quotient, remainder) with deg r < deg b. Throws DomainError if b = 0.
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
QPoly rem(const QPoly& a, const QPoly& b);
/// Exact division; throws DomainError when b does not divide a.
QPoly exact_div(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
/// s, t, g with s*a + t*b = g = gcd(a, b), g monic.
struct ExtendedGcd {
  QPoly s, t, g;
};
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);

QPoly squarefree_part(const QPoly& a);
/// Yun decomposition: returns (factor, multiplicity) with monic pairwise coprime
/// squarefree factors; the product of factor^multiplicity is a.monic().
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& a);

Rational resultant(const QPoly& a, const QPoly& b);
/// p(q(T)).
QPoly compose(const QPoly& p, const QPoly& q);
/// p(T + s).
QPoly taylor_shift(const QPoly& p, const Rational& s);

/// Dense univariate polynomial over Z.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Integer> coeffs);

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Integer& lc() const { return c_.back(); }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const std::vector<Integer>& coeffs() const noexcept { return c_; }

  Integer content() const;
  /// Divides by the content and makes the leading coefficient positive.
  ZPoly primitive() const;
  QPoly to_q() const;
  Integer eval(const Integer& t) const;
  Rational eval(const Rational& t) const;
  /// Sum of absolute values of the coefficients.
  Integer norm1() const;

  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b) = default;

  std::string to_string(const std::string& var = "T") const;

 private:
  void normalize();
  std::vector<Integer> c_;
};

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of q.
ZPoly primitive_integer_part(const QPoly& q);

/// Lexicographic comparison by degree, then coefficients from the top down.
int compare(const ZPoly& a, const ZPoly& b);

/// Sturm sequence for exact real-root counting of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& p);
  /// Number of distinct real roots in (a, b]; a < b.
  int count_roots(const Rational& a, const Rational& b) const;
  int count_all_real_roots() const;
  const QPoly& polynomial() const { return seq_.front(); }

 private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(int sign) const;
  std::vector<QPoly> seq_;
};

/// Generalized Sturm chain of (p, q) used to compute Cauchy indices.
/// Returns I_a^b(q/p); requires p(a) != 0 and p(b) != 0.
int cauchy_index(const QPoly& q, const QPoly& p, const Rational& a, const Rational& b);

/// Upper bound (a power of two) on the absolute value of every complex root.
Rational root_bound(const QPoly& p);

}  // namespace subq

namespace subq {

/// Unique polynomial of degree < n through the n points (xs[i], ys[i]).
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace subq
