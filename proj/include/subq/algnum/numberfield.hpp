#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subq/algnum/algebraic.hpp"
#include "subq/core/field.hpp"

namespace subq {

/// Q(theta) for an algebraic generator theta, with exact power-basis
/// arithmetic and the embedding theta -> generator.
class NumberField : public CoeffField {
 public:
  explicit NumberField(AlgebraicNumber generator);

  const AlgebraicNumber& generator() const noexcept { return generator_; }

  /// Enclosure of the complex value of an element, of width roughly <= w.
  ComplexBox enclose(const Elem& e, const Rational& w) const;
  /// Primitive integer minimal polynomial of an element.
  ZPoly minimal_polynomial(const Elem& e) const;
  AlgebraicNumber to_algebraic(const Elem& e) const;

  std::string format(const Elem& e) const override;
  bool same_as(const CoeffField& other) const override;

 private:
  AlgebraicNumber generator_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

/// Shared Q with generator 0.
NumberFieldPtr rational_number_field();
NumberFieldPtr make_number_field(const AlgebraicNumber& generator);
/// Views any coefficient field as a number field (degree-1 fields become Q).
NumberFieldPtr as_number_field(const FieldPtr& field);

/// Element of a number field with value semantics.
class FieldElement {
 public:
  FieldElement(NumberFieldPtr field, Elem value) : field_(std::move(field)), value_(field_->reduce(value)) {}
  const NumberFieldPtr& field() const noexcept { return field_; }
  const Elem& value() const noexcept { return value_; }
  /// Power-basis coordinates, length equal to the field degree.
  std::vector<Rational> coords() const { return field_->coords(value_); }
  bool is_zero() const { return value_.is_zero(); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(a.field_, b.field_) && a.value_ == b.value_;
  }

 private:
  NumberFieldPtr field_;
  Elem value_;
};

/// Primitive integer minimal polynomial of x over Q.
ZPoly minimal_polynomial(const FieldElement& x);

// ------------------------------------------------------------ K[T]

/// Dense univariate polynomial over a coefficient field.
struct KPoly {
  FieldPtr field;
  std::vector<Elem> c;  // trimmed; zero polynomial is empty

  KPoly() : field(rational_field()) {}
  KPoly(FieldPtr f, std::vector<Elem> coeffs);
  static KPoly from_q(FieldPtr f, const QPoly& p);
  static KPoly x(FieldPtr f) { return KPoly(std::move(f), {Elem(), Elem(1)}); }
  static KPoly constant(FieldPtr f, const Elem& e) { return KPoly(std::move(f), {e}); }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Elem& lc() const { return c.back(); }
  /// Rational coefficients when every coefficient is rational.
  std::optional<QPoly> to_q() const;
  KPoly monic() const;
  KPoly derivative() const;
  Elem eval(const Elem& t) const;
  std::string to_string(const std::string& var = "T") const;

  friend KPoly operator+(const KPoly& a, const KPoly& b);
  friend KPoly operator-(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  friend bool operator==(const KPoly& a, const KPoly& b) { return a.c == b.c; }
  KPoly scale(const Elem& s) const;
};

std::pair<KPoly, KPoly> divrem(const KPoly& a, const KPoly& b);
KPoly gcd(const KPoly& a, const KPoly& b);
KPoly squarefree_part(const KPoly& a);
/// Inverse of a modulo m; throws DomainError unless they are coprime.
KPoly inverse_mod(const KPoly& a, const KPoly& m);
/// p(q(T)).
KPoly compose(const KPoly& p, const KPoly& q);
/// Norm over Q: Res_Y(m(Y), p(T, Y)), i.e. the product of the conjugates.
QPoly norm(const KPoly& p);

struct KFactorization {
  Elem unit;
  std::vector<std::pair<KPoly, int>> factors;  // monic, irreducible over the field
};

/// Exact factorization over the coefficient field (Trager's norm method).
KFactorization factor_over_field(const KPoly& p);

// ------------------------------------------------------------ generated fields

struct PrimitiveElement {
  AlgebraicNumber gamma;
  int k = 0;  // gamma = alpha + k beta
  NumberFieldPtr field;
  Elem alpha;  // alpha and beta in the power basis of gamma
  Elem beta;
};

PrimitiveElement primitive_element(const AlgebraicNumber& alpha, const AlgebraicNumber& beta);

/// beta as an element of `field` when it lies there.
std::optional<Elem> express_in(const NumberFieldPtr& field, const AlgebraicNumber& beta);

struct GeneratedField {
  NumberFieldPtr field;
  std::vector<Elem> generators;  // each input in the power basis
};

/// Q(a_1, ..., a_n) flattened to a single primitive generator.
GeneratedField field_of(const std::vector<AlgebraicNumber>& elements);

struct Membership {
  bool member = false;
  GeneratedField field;
  Elem expression;  // valid when member
};

Membership is_member(const AlgebraicNumber& beta, const std::vector<AlgebraicNumber>& generators);

}  // namespace subq
