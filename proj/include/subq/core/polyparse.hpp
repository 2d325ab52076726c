#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "subq/core/multipoly.hpp"

namespace subq {

/// Syntax tree of the polynomial text syntax. Algebraic-number literals
/// (`root(...)`, `sqrt(...)`) are kept as raw text; `rat(p/q)` becomes a number.
struct PolyExpr {
  enum class Kind { Number, Variable, Literal, Add, Sub, Mul, Pow, Neg };
  Kind kind = Kind::Number;
  Rational number;
  std::string text;  // variable name or literal source
  unsigned exponent = 0;
  std::vector<PolyExpr> kids;
  std::size_t pos = 0;
};

/// Parses a polynomial starting at `pos`; stops before the first character
/// that cannot continue the expression and advances `pos` past the parsed text.
PolyExpr parse_poly_expr(std::string_view text, std::size_t& pos);
/// Parses the whole string as one polynomial.
PolyExpr parse_poly_expr(std::string_view text);

void collect_literals(const PolyExpr& e, std::vector<std::string>& out);
void collect_variables(const PolyExpr& e, std::vector<std::string>& out);

/// Index of X / Yk, or nullopt for other names.
std::optional<std::size_t> standard_variable_index(const std::string& name);

struct PolyBuildContext {
  FieldPtr field;
  std::size_t nvars = 1;
  /// Maps a variable name to its index; throws ParseError on unknown names.
  std::function<std::size_t(const std::string& name, std::size_t pos)> variable;
  /// Value of an algebraic literal in `field`.
  std::function<Elem(const std::string& literal, std::size_t pos)> literal;
};

MultiPoly build_poly(const PolyExpr& e, const PolyBuildContext& ctx);

/// Rational-coefficient convenience: variables X, Y1..., count inferred
/// (at least `min_vars`). Rejects algebraic literals.
MultiPoly parse_rational_poly(std::string_view text, std::size_t min_vars = 1);

}  // namespace subq
