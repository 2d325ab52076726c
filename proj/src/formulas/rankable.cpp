#include "subq/formulas/rankable.hpp"

#include "subq/mvfactor/mvfactor.hpp"
#include "subq/varieties/varieties.hpp"

namespace subq {

namespace {

MultiPoly rename(const MultiPoly& p, const std::vector<std::size_t>& new_index, std::size_t nvars) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    MultiDegree e(nvars, 0);
    for (std::size_t v = 0; v < t.exp.size(); ++v)
      if (t.exp[v] != 0) e[new_index[v]] = t.exp[v];
    terms.push_back({std::move(e), t.coeff});
  }
  return MultiPoly(p.field(), nvars, std::move(terms));
}

// Drops quantified variables that occur nowhere and renumbers the rest.
BasicRankable compact(const std::vector<MultiPoly>& eqs, const MultiPoly& g) {
  const std::size_t n = g.nvars();
  std::vector<bool> used(n, false);
  used[0] = true;
  for (std::size_t v = 1; v < n; ++v) {
    used[v] = g.uses_variable(v);
    for (const auto& f : eqs) used[v] = used[v] || f.uses_variable(v);
  }
  std::vector<std::size_t> index(n, 0);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (used[v]) index[v] = next++;
  std::vector<MultiPoly> renamed;
  for (const auto& f : eqs) renamed.push_back(rename(f, index, next));
  MultiPoly h = g.is_constant() ? MultiPoly::constant(g.field(), next, Elem(1)) : rename(g, index, next);
  return BasicRankable(next - 1, std::move(renamed), std::move(h));
}

using Conjunct = std::vector<const Formula*>;

std::vector<Conjunct> dnf(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Equation:
    case Formula::Kind::Inequation:
      return {{&f}};
    case Formula::Kind::Exists:
      return dnf(f.kids.front());
    case Formula::Kind::Or: {
      std::vector<Conjunct> out;
      for (const auto& k : f.kids)
        for (auto& c : dnf(k)) out.push_back(std::move(c));
      return out;
    }
    case Formula::Kind::And: {
      std::vector<Conjunct> acc{{}};
      for (const auto& k : f.kids) {
        std::vector<Conjunct> next;
        auto part = dnf(k);
        for (const auto& a : acc)
          for (const auto& b : part) {
            Conjunct c = a;
            c.insert(c.end(), b.begin(), b.end());
            next.push_back(std::move(c));
          }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

BasicRankable::BasicRankable(std::size_t m, std::vector<MultiPoly> eqs, MultiPoly g) : quantifiers(m) {
  if (g.is_zero()) throw DomainError("the inequation polynomial must be nonzero");
  for (auto& f : eqs) equations.push_back(f.resize(m + 1));
  inequation = g.resize(m + 1);
}

Formula BasicRankable::to_formula() const {
  std::vector<Formula> atoms;
  for (const auto& f : equations) atoms.push_back(Formula::equation(f));
  atoms.push_back(Formula::inequation(inequation));
  Formula body = atoms.size() == 1 ? std::move(atoms.front()) : Formula::conjunction(std::move(atoms));
  if (quantifiers == 0) return body;
  std::vector<std::size_t> vars;
  for (std::size_t v = 1; v <= quantifiers; ++v) vars.push_back(v);
  return Formula::exists(std::move(vars), std::move(body));
}

std::string to_string(const BasicRankable& b) { return to_string(b.to_formula()); }

bool same_values(const BasicRankable& a, const BasicRankable& b) {
  if (a.quantifiers != b.quantifiers || a.equations.size() != b.equations.size()) return false;
  for (std::size_t i = 0; i < a.equations.size(); ++i)
    if (!same_values(a.equations[i], b.equations[i])) return false;
  return same_values(a.inequation, b.inequation);
}

std::strong_ordering compare_rank(const Rank& a, const Rank& b) {
  if (auto c = a.quantifiers <=> b.quantifiers; c != 0) return c;
  if (auto c = a.dimension <=> b.dimension; c != 0) return c;
  return compare_multiset(a.degrees, b.degrees);
}

std::strong_ordering compare_formula_rank(const RankMultiset& a, const RankMultiset& b) {
  return compare_multiset(a, b);
}

std::string to_string(const Rank& r) {
  return "(" + std::to_string(r.quantifiers) + ", " + std::to_string(r.dimension) + ", " + to_string(r.degrees) +
         ")";
}

std::string to_string(const RankMultiset& r) {
  std::string out = "[";
  for (std::size_t i = 0; i < r.items().size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.items()[i]);
  }
  return out + "]";
}

Rank rank(const BasicRankable& b) {
  Rank r;
  r.quantifiers = b.quantifiers;
  r.dimension = dim_open(b.equations, b.inequation);
  std::vector<MultiDegree> degs;
  for (const auto& f : b.equations) degs.push_back(f.multidegree());
  r.degrees = MultiDegreeMultiset(std::move(degs));
  return r;
}

RankMultiset rank(const std::vector<BasicRankable>& disjuncts) {
  std::vector<Rank> ranks;
  for (const auto& b : disjuncts) ranks.push_back(rank(b));
  return RankMultiset(std::move(ranks));
}

std::vector<BasicRankable> to_rankable(const Formula& f) {
  const MultiPoly& sample = f.first_atom();
  std::vector<BasicRankable> out;
  for (const auto& conj : dnf(f)) {
    std::vector<MultiPoly> eqs;
    MultiPoly g = MultiPoly::constant(sample.field(), sample.nvars(), Elem(1));
    bool satisfiable = true;
    for (const Formula* atom : conj) {
      if (atom->kind == Formula::Kind::Equation) {
        if (atom->poly.is_zero()) continue;
        if (atom->poly.is_constant()) satisfiable = false;
        eqs.push_back(atom->poly);
      } else {
        if (atom->poly.is_zero()) satisfiable = false;
        if (!atom->poly.is_constant()) g *= atom->poly;
      }
    }
    if (satisfiable) out.push_back(compact(eqs, g));
  }
  return out;
}

std::vector<BasicRankable> forget_inequation_vars(const BasicRankable& b) {
  std::vector<BasicRankable> out, work{b};
  while (!work.empty()) {
    BasicRankable cur = std::move(work.back());
    work.pop_back();
    std::size_t target = 0;
    for (std::size_t v = 1; v <= cur.quantifiers && !target; ++v) {
      if (!cur.inequation.uses_variable(v)) continue;
      bool in_eq = false;
      for (const auto& f : cur.equations) in_eq = in_eq || f.uses_variable(v);
      if (!in_eq) target = v;
    }
    if (!target) {
      out.push_back(std::move(cur));
      continue;
    }
    auto coeffs = cur.inequation.coefficients_in(target);
    // Pushed in reverse so the lowest power comes out first.
    for (std::size_t k = coeffs.size(); k-- > 0;)
      if (!coeffs[k].is_zero()) work.push_back(compact(cur.equations, coeffs[k]));
  }
  return out;
}

std::vector<BasicRankable> split_reducible(const BasicRankable& b) {
  std::vector<std::vector<MultiPoly>> choices;
  bool split = false;
  for (const auto& f : b.equations) {
    Factorization fac = factor_multivariate(f);
    if (fac.is_irreducible()) {
      choices.push_back({f});
      continue;
    }
    split = true;
    std::vector<MultiPoly> parts;
    for (const auto& [h, m] : fac.factors) parts.push_back(h);
    choices.push_back(std::move(parts));
  }
  if (!split) return {b};
  std::vector<std::vector<MultiPoly>> combos{{}};
  for (const auto& c : choices) {
    std::vector<std::vector<MultiPoly>> next;
    for (const auto& prefix : combos)
      for (const auto& h : c) {
        auto e = prefix;
        e.push_back(h);
        next.push_back(std::move(e));
      }
    combos = std::move(next);
  }
  std::vector<BasicRankable> out;
  for (const auto& eqs : combos) out.push_back(compact(eqs, b.inequation));
  return out;
}

HypersurfaceCheck validate_hypersurface(const BasicRankable& b) {
  if (b.equations.size() != 1) throw DomainError("a hypersurface formula has exactly one equation");
  const MultiPoly& f = b.equations.front();
  if (f.is_constant()) return {false, "equation is constant"};
  if (!is_absolutely_irreducible(f).absolutely_irreducible) return {false, "equation is not absolutely irreducible"};
  if (divides(f, b.inequation)) return {false, "equation divides the inequation"};
  return {true, ""};
}

}  // namespace subq
