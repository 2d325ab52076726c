#include "subq/core/field.hpp"

#include <typeinfo>

namespace subq {

CoeffField::CoeffField(QPoly modulus) : modulus_(modulus.monic()) {
  if (modulus_.degree() < 1) throw DomainError("field modulus must have positive degree");
}

Elem CoeffField::reduce(const QPoly& p) const {
  if (p.degree() < degree()) return p;
  if (degree() == 1) return QPoly(p.eval(-modulus_.coeff(0)));
  return rem(p, modulus_);
}

Elem CoeffField::mul(const Elem& a, const Elem& b) const {
  if (degree() == 1) {
    if (a.is_zero() || b.is_zero()) return {};
    return QPoly(a.lc() * b.lc());
  }
  return reduce(a * b);
}

Elem CoeffField::inv(const Elem& a) const {
  if (a.is_zero()) throw DomainError("division by zero in field");
  if (a.degree() == 0) return QPoly(1 / a.lc());
  auto eg = extended_gcd(a, modulus_);
  if (eg.g.degree() != 0) throw DomainError("modulus is not irreducible");
  return reduce(eg.s);
}

Elem CoeffField::pow(const Elem& a, unsigned e) const {
  Elem result(1);
  Elem base = a;
  while (e) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

std::optional<Rational> CoeffField::as_rational(const Elem& a) {
  if (a.is_zero()) return Rational(0);
  if (a.degree() == 0) return a.lc();
  return std::nullopt;
}

std::vector<Rational> CoeffField::coords(const Elem& a) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
  return c;
}

std::string CoeffField::format(const Elem& a) const {
  if (auto q = as_rational(a)) return q->get_str();
  return "(" + a.to_string("theta") + ")";
}

bool CoeffField::same_as(const CoeffField& other) const {
  return modulus_ == other.modulus_ && (is_rational() || typeid(*this) == typeid(other));
}

FieldPtr rational_field() {
  static const FieldPtr q = std::make_shared<const CoeffField>(QPoly::x());
  return q;
}

}  // namespace subq
