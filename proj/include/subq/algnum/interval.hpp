#pragma once

#include <string>

#include "subq/core/numbers.hpp"
#include "subq/core/upoly.hpp"

namespace subq {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo, hi;

  static Interval point(const Rational& x) { return {x, x}; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Rational& s, const Interval& a);
  Interval operator-() const { return {-hi, -lo}; }
  friend bool operator==(const Interval&, const Interval&) = default;

  /// Widens to dyadic endpoints with denominator 2^bits.
  Interval rounded(unsigned bits) const { return {round_down_dyadic(lo, bits), round_up_dyadic(hi, bits)}; }
};

/// Closed axis-parallel rectangle re x im in the complex plane; used both as
/// an isolating region and as a complex interval.
struct ComplexBox {
  Interval re, im;

  static ComplexBox point(const Rational& x, const Rational& y = 0) {
    return {Interval::point(x), Interval::point(y)};
  }
  bool intersects(const ComplexBox& o) const { return re.intersects(o.re) && im.intersects(o.im); }
  bool contains(const ComplexBox& o) const {
    return re.lo <= o.re.lo && o.re.hi <= re.hi && im.lo <= o.im.lo && o.im.hi <= im.hi;
  }
  Rational max_width() const { return re.width() > im.width() ? re.width() : im.width(); }
  ComplexBox conjugate() const { return {re, -im}; }
  ComplexBox rounded(unsigned bits) const { return {re.rounded(bits), im.rounded(bits)}; }

  friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexBox operator*(const Rational& s, const ComplexBox& a) { return {s * a.re, s * a.im}; }
  friend bool operator==(const ComplexBox&, const ComplexBox&) = default;

  /// `re_lo, re_hi, im_lo, im_hi`.
  std::string to_string() const;
};

/// Enclosure of p(z) for z in `z`, by Horner's rule with outward rounding.
ComplexBox evaluate(const QPoly& p, const ComplexBox& z, unsigned bits);

}  // namespace subq
