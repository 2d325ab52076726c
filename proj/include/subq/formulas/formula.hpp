#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "subq/algnum/numberfield.hpp"
#include "subq/core/multipoly.hpp"

namespace subq {

/// Existential formula in the free variable X. All polynomials share one
/// coefficient field and one variable count (X plus every Yk mentioned).
struct Formula {
  enum class Kind { Equation, Inequation, And, Or, Exists };
  Kind kind = Kind::Equation;
  MultiPoly poly;                  // atoms: poly = 0 or poly != 0
  std::vector<std::size_t> bound;  // Exists: variable indices, Yk has index k
  std::vector<Formula> kids;       // And/Or: two or more; Exists: the body

  static Formula equation(MultiPoly p) { return {Kind::Equation, std::move(p), {}, {}}; }
  static Formula inequation(MultiPoly p) { return {Kind::Inequation, std::move(p), {}, {}}; }
  static Formula conjunction(std::vector<Formula> kids) { return {Kind::And, {}, {}, std::move(kids)}; }
  static Formula disjunction(std::vector<Formula> kids) { return {Kind::Or, {}, {}, std::move(kids)}; }
  static Formula exists(std::vector<std::size_t> vars, Formula body) {
    return {Kind::Exists, {}, std::move(vars), {std::move(body)}};
  }

  bool is_atom() const { return kind == Kind::Equation || kind == Kind::Inequation; }
  /// Field and variable count of the first atom.
  const MultiPoly& first_atom() const;
};

/// Grammar:
///   disj  := conj ("|" conj)*
///   conj  := unary ("&" unary)*
///   unary := "E" var+ "." conj | "(" disj ")" | atom
///   atom  := "(" poly ("=" | "!=") poly ")"
/// Parameters (`root(...)`, `sqrt(...)`, `rat(...)`) generate the coefficient
/// field; with `declared` set they must lie in that field instead.
/// Throws ParseError for syntax errors, unbound or rebound variables and
/// parameters outside the declared field.
Formula parse_formula(std::string_view text, const NumberFieldPtr& declared = nullptr);

/// Polynomials with parameters, sharing one coefficient field (generated by
/// their literals, or `declared`) and one variable count.
std::vector<MultiPoly> parse_polynomials(const std::vector<std::string>& texts, const NumberFieldPtr& declared = nullptr);
MultiPoly parse_polynomial(std::string_view text, const NumberFieldPtr& declared = nullptr);

/// Atoms print as `(p = 0)` / `(p != 0)`; parse_formula(print) gives the same
/// structure.
std::string to_string(const Formula& f);

/// Same tree, same bound variables, polynomials with equal coefficients as
/// algebraic numbers.
bool same_structure(const Formula& a, const Formula& b);

/// Polynomials equal as maps from exponents to algebraic numbers, even when
/// carried by different presentations of the coefficient field or by
/// different numbers of trailing unused variables.
bool same_values(const MultiPoly& a, const MultiPoly& b);

}  // namespace subq
