#pragma once

#include <memory>
#include <optional>
#include <string>

#include "subq/core/upoly.hpp"

namespace subq {

/// Elements of Q[T]/(m) are kept as reduced polynomials of degree < deg m.
using Elem = QPoly;

/// Exact arithmetic in Q[T]/(m) for a monic irreducible modulus m.
/// The modulus T gives Q itself.
class CoeffField {
 public:
  explicit CoeffField(QPoly modulus);
  virtual ~CoeffField() = default;

  int degree() const noexcept { return modulus_.degree(); }
  bool is_rational() const noexcept { return degree() == 1; }
  const QPoly& modulus() const noexcept { return modulus_; }

  Elem reduce(const QPoly& p) const;
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const;
  /// Throws DomainError for zero.
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, unsigned e) const;

  static bool is_zero(const Elem& a) { return a.is_zero(); }
  static bool is_one(const Elem& a) { return a.degree() == 0 && a.lc() == 1; }
  static std::optional<Rational> as_rational(const Elem& a);

  /// Coordinates in the power basis, padded to the field degree.
  std::vector<Rational> coords(const Elem& a) const;

  /// Text for a coefficient; the base version prints rationals and
  /// otherwise a polynomial in `theta`.
  virtual std::string format(const Elem& a) const;

  /// True when both describe the same field with the same generator.
  virtual bool same_as(const CoeffField& other) const;

 private:
  QPoly modulus_;
};

using FieldPtr = std::shared_ptr<const CoeffField>;

/// Shared instance of Q.
FieldPtr rational_field();

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || a->same_as(*b);
}

}  // namespace subq
