#pragma once

#include <vector>

#include "subq/algnum/algebraic.hpp"
#include "subq/formulas/rankable.hpp"

namespace subq {

/// Height |p| + q of a rational; of an algebraic number, the sum of the
/// absolute values of its minimal polynomial coefficients plus its degree
/// minus one (so both notions agree on Q).
Integer algebraic_height(const AlgebraicNumber& a);

/// Rationals of height h: 0 for h = 1; otherwise positives by decreasing
/// numerator, then the negatives in the same order (2, 1/2, -2, -1/2).
std::vector<Rational> rationals_of_height(unsigned h);

/// The rationals in order of height, then the order above; index 0 is 0.
Rational rational_at(std::size_t index);

/// Algebraic numbers of height h: by degree; rationals as above; higher
/// degrees by minimal polynomial coefficients from the top (by absolute value,
/// positive first), then canonical root order.
std::vector<AlgebraicNumber> algebraic_numbers_of_height(unsigned h);

/// c_0, c_1, ...: all of Q-bar in order of height; c_0 = 0.
AlgebraicNumber algebraic_number_at(std::size_t index);

/// Position of a in the listing above.
std::size_t algebraic_number_index(const AlgebraicNumber& a);

/// Formula height: (m + 1) + deg f + deg g + sum of coefficient heights of
/// f and g.
Integer formula_height(const BasicRankable& b);

/// The t-th (t >= 1) valid hypersurface formula. Candidates have m >= 1,
/// every Yi in f, leading coefficients of f and g equal to 1 in the
/// multidegree order, g = 1 when deg g = 0. They are ordered by height, then
/// m, deg f, deg g, the coefficient height of f, and finally by a fixed
/// depth-first choice of coefficients over the monomials.
BasicRankable enumerate_hypersurface_formulas(std::size_t t);

}  // namespace subq
