#include "subq/constructor/construction.hpp"

#include <algorithm>
#include <map>

#include "subq/formulas/enumeration.hpp"
#include "subq/mvfactor/mvfactor.hpp"

namespace subq {

ConstructionState start_construction(const ConstructionConfig& config) {
  if (is_empty(config.initial)) throw DomainError("the initial open set is empty");
  ConstructionState s;
  s.config = config;
  s.context = config.initial;
  return s;
}

void run_stage(ConstructionState& state) {
  const std::size_t s = state.stage + 1;
  const std::size_t t = (s - 1) / 3 + 1;
  Certificate c;
  switch ((s - 1) % 3) {
    case 0:
    case 1: {
      Side side = (s - 1) % 3 == 0 ? Side::NotInZ : Side::InZ;
      BasicRankable beta = enumerate_hypersurface_formulas(t);
      if (parameters_excluded(beta, state.context)) {
        c.kind = side == Side::InZ ? StageKind::AvoidComplement : StageKind::AvoidZ;
        c.context = state.context;
        c.formula = beta;
        c.vacuous = true;
      } else {
        c = hilbert_specialize(beta, state.context, state.config.predicate, side, state.config.search).certificate;
      }
      c.formula_index = t;
      break;
    }
    default: {
      c.kind = StageKind::DecideElement;
      c.context = state.context;
      c.element_index = t;
      c.element = algebraic_number_at(t);
      BasicOpen with = state.context;
      with.includes.push_back(c.element);
      c.included = !is_empty(with);
      break;
    }
  }
  c.stage = s;
  BasicOpen next = next_context(c);
  if (is_empty(next)) throw DomainError("internal: stage " + std::to_string(s) + " emptied the open set");
  state.context = std::move(next);
  state.log.push_back(std::move(c));
  state.stage = s;
}

ConstructionState run_construction(const ConstructionConfig& config, std::size_t stages) {
  ConstructionState s = start_construction(config);
  for (std::size_t i = 0; i < stages; ++i) run_stage(s);
  return s;
}

MembershipAnswer membership_oracle(ConstructionState& state, const AlgebraicNumber& c) {
  std::optional<std::size_t> deadline;  // found on demand
  std::size_t ran = 0;
  while (true) {
    if (is_member(c, state.context.includes).member) return {true, ran};
    BasicOpen with = state.context;
    with.includes.push_back(c);
    if (is_empty(with)) return {false, ran};
    if (!deadline) deadline = 3 * algebraic_number_index(c);
    if (state.stage >= *deadline) throw DomainError("internal: element undecided after its stage");
    run_stage(state);
    ++ran;
  }
}

MembershipAnswer membership_oracle(const ConstructionConfig& config, const AlgebraicNumber& c) {
  ConstructionState s = start_construction(config);
  return membership_oracle(s, c);
}

namespace {

KPoly product_of_roots(const std::vector<AlgebraicNumber>& roots) {
  GeneratedField gf = field_of(roots);
  KPoly out = KPoly::constant(gf.field, Elem(1));
  for (const auto& r : gf.generators) out = out * KPoly(gf.field, {gf.field->neg(r), Elem(1)});
  return out;
}

}  // namespace

ConstructedFactorization factor_over_constructed(const KPoly& p,
                                                 const std::function<bool(const AlgebraicNumber&)>& in_field) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  NumberFieldPtr k = as_number_field(p.field);
  std::map<std::string, bool> cache;
  auto member = [&](const AlgebraicNumber& a) {
    std::string key = root_literal(a);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache[key] = in_field(a);
  };
  for (const auto& e : p.c)
    if (!member(k->to_algebraic(e))) throw DomainError("coefficient " + k->to_algebraic(e).to_string() + " is not in L");

  ConstructedFactorization out;
  out.unit = k->to_algebraic(p.lc());
  for (const auto& [h, mult] : factor_over_field(p).factors) {
    std::vector<AlgebraicNumber> left = enumerate_roots_Qbar(h);
    const std::size_t total = left.size();
    while (!left.empty()) {
      // Smallest subset, first in index order, whose product lies over L.
      bool found = false;
      for (std::size_t size = 1; size <= left.size() && !found; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
          std::vector<AlgebraicNumber> subset;
          for (auto i : pick) subset.push_back(left[i]);
          KPoly q = size == total ? h : product_of_roots(subset);
          NumberFieldPtr qk = as_number_field(q.field);
          bool ok = true;
          for (const auto& e : q.c) ok = ok && member(qk->to_algebraic(e));
          if (ok) {
            out.factors.push_back({q, mult});
            for (std::size_t i = size; i-- > 0;) left.erase(left.begin() + static_cast<long>(pick[i]));
            found = true;
            break;
          }
          // next combination
          std::size_t i = size;
          while (i > 0 && pick[i - 1] == left.size() - size + i - 1) --i;
          if (i == 0) break;
          ++pick[i - 1];
          for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
      }
      if (!found) throw DomainError("internal: no subset of roots is defined over L");
    }
  }
  return out;
}

ConstructedFactorization factor_over_constructed(const KPoly& p, ConstructionState& state) {
  return factor_over_constructed(p, [&](const AlgebraicNumber& a) { return membership_oracle(state, a).member; });
}

std::string to_string(const ConstructedFactorization& f) {
  std::string out;
  if (!(f.unit == AlgebraicNumber::rational(1))) out = f.unit.to_string() + " * ";
  for (const auto& [q, m] : f.factors) {
    out += "(" + q.to_string() + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace subq
