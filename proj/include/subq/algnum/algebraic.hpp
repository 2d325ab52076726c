#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "subq/algnum/roots.hpp"

namespace subq {

/// Exact algebraic number: a primitive irreducible integer minimal
/// polynomial with positive leading coefficient and the index of one of its
/// roots in canonical order.
class AlgebraicNumber {
 public:
  /// Zero.
  AlgebraicNumber();
  static AlgebraicNumber rational(const Rational& q);
  /// Root number `index` (canonical order) of an irreducible polynomial.
  static AlgebraicNumber root_of(const ZPoly& irreducible, std::size_t index);

  const ZPoly& minpoly() const { return roots_->polynomial(); }
  int degree() const { return minpoly().degree(); }
  std::size_t root_index() const noexcept { return index_; }
  const RootSet& root_set() const { return *roots_; }

  bool is_rational() const { return degree() == 1; }
  /// Throws DomainError unless rational.
  Rational rational_value() const;
  bool is_real() const { return roots_->is_real(index_); }

  /// Canonical isolating region.
  const ComplexBox& region() const { return roots_->initial_box(index_); }
  /// Isolating box of width at most `max_width` (exact point for rationals).
  ComplexBox enclosure(const Rational& max_width) const;
  /// A point within `eps` of the number.
  std::pair<Rational, Rational> approximate(const Rational& eps) const;

  /// All roots of the minimal polynomial in canonical order.
  std::vector<AlgebraicNumber> conjugates() const;
  AlgebraicNumber complex_conjugate() const;
  AlgebraicNumber negate() const;

  /// Plain rational or `root(minpoly; re_lo, re_hi, im_lo, im_hi)`.
  std::string to_string() const;

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.index_ == b.index_ && a.minpoly() == b.minpoly();
  }
  /// Storage order: degree, minimal polynomial, root index.
  friend std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b);

 private:
  AlgebraicNumber(std::shared_ptr<const RootSet> roots, std::size_t index)
      : roots_(std::move(roots)), index_(index) {}
  std::shared_ptr<const RootSet> roots_;
  std::size_t index_ = 0;
};

/// The unique root of the irreducible `minpoly` compatible with a shrinking
/// enclosure. `enclose(w)` must return boxes that contain the value and
/// shrink to it as w goes to 0.
AlgebraicNumber identify_root(const ZPoly& irreducible,
                              const std::function<ComplexBox(const Rational& w)>& enclose);

/// The unique root of `p` in a closed region. Proper rectangles must not
/// carry a root of p on the boundary; segments and points are allowed.
/// Throws DomainError unless exactly one distinct root lies in the region.
AlgebraicNumber root_in_region(const QPoly& p, const ComplexBox& region);

/// Accepts `root(p; re_lo, re_hi, im_lo, im_hi)`, `sqrt(n)`, `rat(p/q)` and
/// plain rationals. Throws ParseError or DomainError.
AlgebraicNumber parse_algebraic(std::string_view text);

/// Parses a univariate polynomial in T (X is accepted as a synonym).
QPoly parse_univariate(std::string_view text);

/// Canonical `root(...)` literal even for rationals.
std::string root_literal(const AlgebraicNumber& a);

}  // namespace subq
