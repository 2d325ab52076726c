#pragma once

#include <string>

#include "subq/constructor/hilbert.hpp"

namespace subq {

struct ConstructionConfig {
  BasicOpen initial;
  ZPredicate predicate = ZPredicate::integers();
  SearchOptions search;
};

struct ConstructionState {
  ConstructionConfig config;
  BasicOpen context;
  std::size_t stage = 0;
  std::vector<Certificate> log;
};

/// Stage s = 3(t-1) + r: r = 1 avoids S(beta_t, Z), r = 2 avoids
/// S(beta_t, Q \ Z), r = 3 decides c_t from the Q-bar listing.
ConstructionState start_construction(const ConstructionConfig& config);
void run_stage(ConstructionState& state);
ConstructionState run_construction(const ConstructionConfig& config, std::size_t stages);

struct MembershipAnswer {
  bool member = false;
  std::size_t stages_run = 0;
};

/// Decides c in L by running stages until c's fate is fixed: c in Q(a_s)
/// means yes, an exclude in Q(a_s, c) means no; c_t is decided at stage 3t
/// at the latest. `state` may carry stages already run and is advanced.
MembershipAnswer membership_oracle(ConstructionState& state, const AlgebraicNumber& c);
MembershipAnswer membership_oracle(const ConstructionConfig& config, const AlgebraicNumber& c);

struct ConstructedFactor {
  KPoly poly;  // monic, over a field holding its coefficients
  int multiplicity = 1;
};

struct ConstructedFactorization {
  AlgebraicNumber unit;
  std::vector<ConstructedFactor> factors;
};

/// Groups the roots of p into the smallest products with coefficients in L.
/// Throws DomainError when a coefficient of p is not in L.
ConstructedFactorization factor_over_constructed(const KPoly& p,
                                                 const std::function<bool(const AlgebraicNumber&)>& in_field);
ConstructedFactorization factor_over_constructed(const KPoly& p, ConstructionState& state);

/// Human-readable multiset of factors, e.g. `(T - root(...))(T^2 - 3)`.
std::string to_string(const ConstructedFactorization& f);

}  // namespace subq
