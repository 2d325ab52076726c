#include "subq/constructor/certificate.hpp"

#include <algorithm>

#include "subq/constructor/hilbert.hpp"
#include "subq/formulas/enumeration.hpp"
#include "subq/mvfactor/mvfactor.hpp"

namespace subq {

ZPredicate ZPredicate::integers() {
  return {"integers", [](const Rational& q) { return q.get_den() == 1; }, std::nullopt};
}

ZPredicate ZPredicate::by_name(const std::string& name) {
  if (name == "integers") return integers();
  throw DomainError("unknown predicate " + name);
}

std::string to_string(StageKind k) {
  switch (k) {
    case StageKind::AvoidZ: return "avoid-Z";
    case StageKind::AvoidComplement: return "avoid-complement";
    case StageKind::DecideElement: return "decide-element";
  }
  return {};
}

StageKind stage_kind_from_string(const std::string& s) {
  if (s == "avoid-Z") return StageKind::AvoidZ;
  if (s == "avoid-complement") return StageKind::AvoidComplement;
  if (s == "decide-element") return StageKind::DecideElement;
  throw ParseError("unknown stage kind " + s, 0);
}

Side side_of(StageKind k) { return k == StageKind::AvoidComplement ? Side::InZ : Side::NotInZ; }

BasicOpen next_context(const Certificate& c) {
  BasicOpen out = c.context;
  if (c.kind == StageKind::DecideElement) {
    if (c.included) {
      if (std::find(out.includes.begin(), out.includes.end(), c.element) == out.includes.end())
        out.includes.push_back(c.element);
    } else if (std::find(out.excludes.begin(), out.excludes.end(), c.element) == out.excludes.end()) {
      out.excludes.push_back(c.element);
    }
    return out;
  }
  if (!c.vacuous && std::find(out.includes.begin(), out.includes.end(), c.y) == out.includes.end())
    out.includes.push_back(c.y);
  return out;
}

namespace {

Verdict fail(std::string reason) { return {false, std::move(reason)}; }

Verdict verify_decide(const Certificate& c) {
  if (c.element_index == 0) return fail("element index must be positive");
  if (!(algebraic_number_at(c.element_index) == c.element)) return fail("element does not match the listing at its index");
  BasicOpen with = c.context;
  with.includes.push_back(c.element);
  if (c.included == is_empty(with)) return fail("decision does not match the emptiness test");
  return {};
}

Verdict verify_avoid(const Certificate& c, const ZPredicate& z) {
  const BasicRankable& beta = c.formula;
  if (beta.equations.size() != 1) return fail("formula is not a hypersurface formula");
  if (beta.quantifiers == 0) return fail("formula has no quantified variable");
  auto check = validate_hypersurface(beta);
  if (!check.valid) return fail("formula is not a valid hypersurface formula: " + check.reason);
  if (c.formula_index > 0 && !same_values(enumerate_hypersurface_formulas(c.formula_index), beta))
    return fail("formula does not match the enumeration at its index");

  bool excluded = parameters_excluded(beta, c.context);
  if (c.vacuous) {
    if (!excluded) return fail("vacuous claim but the context admits the parameters");
    return {};
  }
  if (excluded) return fail("parameters are excluded; only a vacuous record is possible");

  // (i)
  if (z.contains(c.x) != (side_of(c.kind) == Side::InZ)) return fail("x on wrong side of Z");
  if (c.ys.size() + 1 != beta.quantifiers) return fail("wrong number of rational witnesses");

  const MultiPoly& f = beta.equations.front();
  const std::size_t last = beta.quantifiers;
  KPoly fs = specialize(f, c.x, c.ys);
  // (ii)
  if (fs.degree() != f.degree_in(last)) return fail("specialized polynomial has lower degree");
  SearchField sf = search_field(beta, c.context);
  KPoly fk = specialize(sf.equation, c.x, c.ys);
  if (fk.degree() > 1) {
    auto fac = factor_over_field(fk);
    if (fac.factors.size() != 1 || fac.factors.front().second != 1)
      return fail("specialized polynomial reducible over K");
  }
  // y is a root
  auto roots = enumerate_roots_Qbar(fs);
  if (std::find(roots.begin(), roots.end(), c.y) == roots.end())
    return fail("y is not a root of the specialized polynomial");
  // (iii)
  KPoly gs = specialize(beta.inequation, c.x, c.ys);
  if (gs.is_zero() || divrem(gs, fs).second.is_zero())
    return fail("specialized inequation divisible by the specialized equation");
  // (v)
  BasicOpen after = c.context;
  after.includes.push_back(c.y);
  if (is_empty(after)) return fail("extension by y empties the open set");
  return {};
}

}  // namespace

Verdict verify_certificate(const Certificate& c, const ZPredicate& z) {
  try {
    if (is_empty(c.context)) return fail("context is empty");
    if (c.kind == StageKind::DecideElement) return verify_decide(c);
    return verify_avoid(c, z);
  } catch (const std::exception& e) {
    return fail(std::string("malformed record: ") + e.what());
  }
}

}  // namespace subq
