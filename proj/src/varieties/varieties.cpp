#include "subq/varieties/varieties.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace subq {

namespace {

struct OrderDesc {
  MonomialOrder order;
  bool operator()(const MultiDegree& a, const MultiDegree& b) const { return compare_monomials(a, b, order) > 0; }
};

using Work = std::map<MultiDegree, Elem, OrderDesc>;

struct GPoly {
  MultiDegree lm;
  MultiPoly poly;  // monic for the order
};

bool divides_monomial(const MultiDegree& a, const MultiDegree& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MultiDegree lcm(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const MultiDegree& a, const MultiDegree& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

MultiDegree minus(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

MultiPoly make_monic(const MultiPoly& f, MonomialOrder order) {
  MultiDegree lm = leading_monomial(f, order);
  for (const auto& t : f.terms())
    if (t.exp == lm) return f.scale(f.field()->inv(t.coeff));
  return f;
}

MultiPoly reduce(const MultiPoly& f, const std::vector<GPoly>& basis, MonomialOrder order, std::size_t skip = SIZE_MAX) {
  const CoeffField& K = *f.field();
  Work p(OrderDesc{order});
  for (const auto& t : f.terms()) p.emplace(t.exp, t.coeff);
  std::vector<Term> rest;
  while (!p.empty()) {
    auto it = p.begin();
    const GPoly* div = nullptr;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (i != skip && divides_monomial(basis[i].lm, it->first)) {
        div = &basis[i];
        break;
      }
    if (!div) {
      rest.push_back({it->first, it->second});
      p.erase(it);
      continue;
    }
    Elem q = it->second;
    MultiDegree shift = minus(it->first, div->lm);
    for (const auto& t : div->poly.terms()) {
      MultiDegree e = t.exp;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
      Elem c = K.mul(q, t.coeff);
      auto [pos, inserted] = p.emplace(e, K.neg(c));
      if (!inserted) {
        pos->second = K.sub(pos->second, c);
        if (pos->second.is_zero()) p.erase(pos);
      }
    }
  }
  return MultiPoly(f.field(), f.nvars(), std::move(rest));
}

MultiPoly s_polynomial(const GPoly& a, const GPoly& b) {
  MultiDegree l = lcm(a.lm, b.lm);
  return a.poly.shift(minus(l, a.lm)) - b.poly.shift(minus(l, b.lm));
}

}  // namespace

IdealPresentation::IdealPresentation(FieldPtr f, std::size_t n, std::vector<MultiPoly> gens)
    : field(std::move(f)), nvars(n) {
  for (auto& g : gens)
    if (!g.is_zero()) generators.push_back(g.resize(n));
}

int compare_monomials(const MultiDegree& a, const MultiDegree& b, MonomialOrder order) {
  if (order == MonomialOrder::GrevLex) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

MultiDegree leading_monomial(const MultiPoly& f, MonomialOrder order) {
  if (f.is_zero()) throw DomainError("leading monomial of zero");
  const MultiDegree* best = &f.terms().front().exp;
  for (const auto& t : f.terms())
    if (compare_monomials(t.exp, *best, order) > 0) best = &t.exp;
  return *best;
}

std::vector<MultiPoly> groebner(const IdealPresentation& ideal, MonomialOrder order) {
  std::vector<GPoly> G;
  auto add = [&](const MultiPoly& f) {
    MultiPoly m = make_monic(f, order);
    G.push_back({leading_monomial(m, order), m});
  };
  for (const auto& g : ideal.generators) {
    MultiPoly h = reduce(g, G, order);
    if (!h.is_zero()) add(h);
  }
  auto unit = [&] {
    return std::vector<MultiPoly>{MultiPoly::constant(ideal.field, ideal.nvars, Elem(1))};
  };
  for (const auto& g : G)
    if (g.poly.is_constant()) return unit();

  // Pairs ordered by lcm, then by index; `done` feeds the chain criterion.
  auto pair_less = [&](const std::pair<std::size_t, std::size_t>& x, const std::pair<std::size_t, std::size_t>& y) {
    int c = compare_monomials(lcm(G[x.first].lm, G[x.second].lm), lcm(G[y.first].lm, G[y.second].lm), order);
    if (c != 0) return c < 0;
    return x < y;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      pending.emplace_back(i, j);
      open.emplace(i, j);
    }
  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), pair_less);
    auto [i, j] = *best;
    pending.erase(best);
    open.erase({i, j});
    if (coprime(G[i].lm, G[j].lm)) continue;
    MultiDegree l = lcm(G[i].lm, G[j].lm);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || !divides_monomial(G[k].lm, l)) continue;
      chain = !open.count({std::min(i, k), std::max(i, k)}) && !open.count({std::min(j, k), std::max(j, k)});
    }
    if (chain) continue;
    MultiPoly h = reduce(s_polynomial(G[i], G[j]), G, order);
    if (h.is_zero()) continue;
    if (h.is_constant()) return unit();
    add(h);
    std::size_t n = G.size() - 1;
    for (std::size_t k = 0; k < n; ++k) {
      pending.emplace_back(k, n);
      open.emplace(k, n);
    }
  }

  // Minimize, then interreduce.
  std::vector<GPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i || !divides_monomial(G[k].lm, G[i].lm)) continue;
      redundant = G[k].lm != G[i].lm || k < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    MultiPoly tail = minimal[i].poly - MultiPoly::monomial(ideal.field, ideal.nvars, Elem(1), minimal[i].lm);
    minimal[i].poly = MultiPoly::monomial(ideal.field, ideal.nvars, Elem(1), minimal[i].lm) +
                      reduce(tail, minimal, order, i);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const GPoly& a, const GPoly& b) { return compare_monomials(a.lm, b.lm, order) < 0; });
  std::vector<MultiPoly> out;
  for (auto& g : minimal) out.push_back(std::move(g.poly));
  return out;
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, MonomialOrder order) {
  std::vector<GPoly> G;
  for (const auto& g : basis) {
    MultiPoly m = make_monic(g, order);
    G.push_back({leading_monomial(m, order), m});
  }
  return reduce(f, G, order);
}

int dim_affine(const IdealPresentation& ideal) {
  auto basis = groebner(ideal);
  if (basis.size() == 1 && basis[0].is_constant()) return -1;
  std::vector<MultiDegree> lms;
  for (const auto& g : basis) lms.push_back(leading_monomial(g, MonomialOrder::GrevLex));
  const std::size_t n = ideal.nvars;
  int best = 0;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lms) {
      bool inside = true;
      for (std::size_t v = 0; v < n; ++v)
        if (m[v] > 0 && !(mask >> v & 1UL)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

int dim_open(const std::vector<MultiPoly>& fs, const MultiPoly& g) {
  if (g.is_zero()) throw DomainError("the open set needs a nonzero g");
  const std::size_t n = g.nvars();
  std::vector<MultiPoly> gens;
  for (const auto& f : fs) gens.push_back(f.resize(n + 1));
  MultiPoly z = MultiPoly::variable(g.field(), n + 1, n);
  gens.push_back(z * g.resize(n + 1) - MultiPoly::constant(g.field(), n + 1, Elem(1)));
  return dim_affine(IdealPresentation(g.field(), n + 1, std::move(gens)));
}

}  // namespace subq
