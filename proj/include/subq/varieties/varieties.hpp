#pragma once

#include <vector>

#include "subq/core/multipoly.hpp"

namespace subq {

enum class MonomialOrder { GrevLex, Lex };

/// Generators of an ideal in K[X, Y1, ..., Ym]; zero generators are dropped.
struct IdealPresentation {
  FieldPtr field;
  std::size_t nvars = 1;
  std::vector<MultiPoly> generators;

  IdealPresentation(FieldPtr f, std::size_t n, std::vector<MultiPoly> gens);
};

/// Sign of a - b under a monomial order.
int compare_monomials(const MultiDegree& a, const MultiDegree& b, MonomialOrder order);
MultiDegree leading_monomial(const MultiPoly& f, MonomialOrder order);

/// Reduced Groebner basis: monic, sorted by leading monomial (ascending).
/// The unit ideal gives {1}; the zero ideal gives {}.
std::vector<MultiPoly> groebner(const IdealPresentation& ideal, MonomialOrder order = MonomialOrder::GrevLex);

/// Remainder of f on division by a Groebner basis.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      MonomialOrder order = MonomialOrder::GrevLex);

/// Krull dimension of K[vars]/I, -1 for the unit ideal.
int dim_affine(const IdealPresentation& ideal);

/// Dimension of V(fs) minus V(g), via one extra variable Z and Z*g - 1.
/// Throws DomainError when g = 0.
int dim_open(const std::vector<MultiPoly>& fs, const MultiPoly& g);

}  // namespace subq
