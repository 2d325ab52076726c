#pragma once

#include <utility>
#include <vector>

#include "subq/algnum/numberfield.hpp"
#include "subq/core/multipoly.hpp"

namespace subq {

/// content * prod factor^mult. Factors are monic (leading coefficient 1 in
/// the multidegree order), irreducible over `field`, and sorted.
struct Factorization {
  FieldPtr field;
  Elem content;
  std::vector<std::pair<MultiPoly, int>> factors;

  /// Recomputes the product exactly.
  MultiPoly expand(std::size_t nvars) const;
  /// One factor with multiplicity one.
  bool is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

/// Monic gcd; gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
/// Gcd of the coefficients of f viewed as a polynomial in v.
MultiPoly content_in(const MultiPoly& f, std::size_t v);
MultiPoly derivative(const MultiPoly& f, std::size_t v);

/// Monic pairwise coprime squarefree parts with multiplicities.
std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& f);

/// Complete factorization over the coefficient field. Throws DomainError on 0.
Factorization factor_multivariate(const MultiPoly& f);

struct AbsoluteIrreducibility {
  bool absolutely_irreducible = false;
  /// When false: a field containing the base field over which `witness`
  /// splits f nontrivially; the product is checked exactly.
  NumberFieldPtr extension;
  Factorization witness;
};

/// Decides irreducibility over the algebraic closure. Throws DomainError for
/// constant input.
AbsoluteIrreducibility is_absolutely_irreducible(const MultiPoly& f);

/// All roots with multiplicity, grouped by irreducible factor over K and in
/// canonical root order within a group.
std::vector<AlgebraicNumber> enumerate_roots_Qbar(const KPoly& p);

/// Copy of f with coefficients moved into `target`, where `embed` sends the
/// generator of f's field into `target`.
MultiPoly embed_poly(const MultiPoly& f, FieldPtr target, const Elem& image_of_generator);

}  // namespace subq
