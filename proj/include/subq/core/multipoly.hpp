#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subq/core/field.hpp"
#include "subq/core/multidegree.hpp"

namespace subq {

struct Term {
  MultiDegree exp;
  Elem coeff;
};

/// Variable names X, Y1, Y2, ... by index; indices past `nvars - 1` are
/// never printed.
std::string default_variable_name(std::size_t index);

/// Sparse polynomial over a CoeffField in a fixed number of variables
/// (X, Y1, ..., Ym). Terms are kept in strictly decreasing multidegree order,
/// so the first term carries the multidegree.
class MultiPoly {
 public:
  MultiPoly() : MultiPoly(rational_field(), 1) {}
  MultiPoly(FieldPtr field, std::size_t nvars);
  /// Takes terms in any order; merges duplicates and drops zeros.
  MultiPoly(FieldPtr field, std::size_t nvars, std::vector<Term> terms);

  static MultiPoly constant(FieldPtr field, std::size_t nvars, const Elem& c);
  static MultiPoly variable(FieldPtr field, std::size_t nvars, std::size_t index);
  static MultiPoly monomial(FieldPtr field, std::size_t nvars, const Elem& c, MultiDegree exp);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value (zero polynomial gives 0); nullopt when nonconstant.
  std::optional<Elem> constant_value() const;
  int total_degree() const;
  int degree_in(std::size_t v) const;
  bool uses_variable(std::size_t v) const { return degree_in(v) > 0; }

  /// Throws DomainError on the zero polynomial.
  const MultiDegree& multidegree() const;
  const Term& leading_term() const;
  const Elem& leading_coeff() const { return leading_term().coeff; }
  /// Divides by the leading coefficient.
  MultiPoly monic() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scale(const Elem& c) const;
  MultiPoly pow(unsigned e) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  /// Multiplies by the monomial with exponent `shift` and coefficient 1.
  MultiPoly shift(const MultiDegree& shift) const;

  /// Same field, same variable count, same terms.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Coefficients of v^0, v^1, ... as polynomials with v absent.
  std::vector<MultiPoly> coefficients_in(std::size_t v) const;
  MultiPoly leading_coeff_in(std::size_t v) const;
  /// Rebuilds sum_k c_k v^k.
  static MultiPoly from_coefficients_in(std::size_t v, const std::vector<MultiPoly>& cs,
                                        FieldPtr field, std::size_t nvars);

  /// Substitutes `value` for variable v; v is absent in the result.
  MultiPoly substitute(std::size_t v, const MultiPoly& value) const;
  MultiPoly evaluate_at(std::size_t v, const Elem& value) const;
  /// Value at a full point.
  Elem evaluate(const std::vector<Elem>& point) const;

  /// Dense univariate coefficients in v; throws unless only v occurs.
  std::vector<Elem> univariate_coeffs(std::size_t v) const;
  static MultiPoly from_univariate(FieldPtr field, std::size_t nvars, std::size_t v,
                                   const std::vector<Elem>& coeffs);

  /// Variable count changed; dropped variables must be absent.
  MultiPoly resize(std::size_t nvars) const;
  /// New variable i is old variable perm[i].
  MultiPoly permute(const std::vector<std::size_t>& perm) const;
  /// Applies `map` to every coefficient and moves into `target`.
  MultiPoly map_coefficients(FieldPtr target, const std::function<Elem(const Elem&)>& map) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void normalize();
  FieldPtr field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// f = q g + r with deg_v r < deg_v g. The leading coefficient of g in v must
/// be a nonzero constant.
std::pair<MultiPoly, MultiPoly> divrem_in(const MultiPoly& f, const MultiPoly& g, std::size_t v);

/// lc_v(g)^(deg_v f - deg_v g + 1) f = q g + r.
MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, std::size_t v);

/// Quotient when g divides f exactly, nullopt otherwise.
std::optional<MultiPoly> exact_quotient(const MultiPoly& f, const MultiPoly& g);

inline bool divides(const MultiPoly& g, const MultiPoly& f) { return exact_quotient(f, g).has_value(); }

}  // namespace subq
