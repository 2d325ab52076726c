#pragma once

#include <compare>
#include <string>
#include <vector>

#include "subq/formulas/formula.hpp"

namespace subq {

/// E Y1 ... Ym . f1 = 0 & ... & fk = 0 & g != 0, all polynomials in the m+1
/// variables (X, Y1, ..., Ym). No equations and g = 1 is the formula 0 = 0.
struct BasicRankable {
  std::size_t quantifiers = 0;
  std::vector<MultiPoly> equations;
  MultiPoly inequation;

  BasicRankable() = default;
  /// Resizes every polynomial to quantifiers + 1 variables; g = 0 is rejected.
  BasicRankable(std::size_t m, std::vector<MultiPoly> eqs, MultiPoly g);

  std::size_t nvars() const { return quantifiers + 1; }
  const FieldPtr& field() const { return inequation.field(); }
  Formula to_formula() const;
};

/// `E Y1 . (Y1 - X = 0) & (1 != 0)`.
std::string to_string(const BasicRankable& b);
bool same_values(const BasicRankable& a, const BasicRankable& b);

/// (m, e, multidegrees) with e = -1 for an empty variety.
struct Rank {
  std::size_t quantifiers = 0;
  int dimension = 0;
  MultiDegreeMultiset degrees;
};

std::strong_ordering compare_rank(const Rank& a, const Rank& b);
struct RankCompare {
  std::strong_ordering operator()(const Rank& a, const Rank& b) const { return compare_rank(a, b); }
};
using RankMultiset = OrderedMultiset<Rank, RankCompare>;
std::strong_ordering compare_formula_rank(const RankMultiset& a, const RankMultiset& b);

/// `(0, 0, [(1)])`.
std::string to_string(const Rank& r);
/// `[(1, 1, [(0, 2)]), (0, 0, [(1)])]`.
std::string to_string(const RankMultiset& r);

Rank rank(const BasicRankable& b);
RankMultiset rank(const std::vector<BasicRankable>& disjuncts);

/// DNF, quantifiers distributed over the disjuncts, unused quantifiers
/// dropped, inequations multiplied together. Atoms that are constant are
/// decided on the spot; disjuncts that become false disappear.
std::vector<BasicRankable> to_rankable(const Formula& f);

/// Removes quantified variables that occur in g only, replacing g by each
/// nonzero coefficient in that variable; repeated until none remain.
std::vector<BasicRankable> forget_inequation_vars(const BasicRankable& b);

/// Splits every reducible equation into its distinct irreducible factors.
std::vector<BasicRankable> split_reducible(const BasicRankable& b);

struct HypersurfaceCheck {
  bool valid = false;
  std::string reason;
};

/// Requires exactly one equation (DomainError otherwise).
HypersurfaceCheck validate_hypersurface(const BasicRankable& b);

}  // namespace subq
