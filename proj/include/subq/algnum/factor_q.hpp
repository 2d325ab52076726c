#pragma once

#include <utility>
#include <vector>

#include "subq/core/upoly.hpp"

namespace subq {

/// p = unit * prod factor^multiplicity with monic irreducible factors sorted
/// by degree, then coefficients from the top down.
struct UniFactorization {
  Rational unit;
  std::vector<std::pair<QPoly, int>> factors;
};

/// Exact factorization over Q (modular factoring, Hensel lifting, subset
/// recombination). Throws DomainError for the zero polynomial.
UniFactorization factor_univariate_Q(const QPoly& p);

/// Irreducible primitive factors (positive leading coefficient) of a
/// squarefree primitive integer polynomial of positive degree.
std::vector<ZPoly> factor_squarefree_Z(const ZPoly& f);

bool is_irreducible_Q(const QPoly& p);

/// Total order used to sort factor lists.
bool qpoly_less(const QPoly& a, const QPoly& b);

}  // namespace subq
