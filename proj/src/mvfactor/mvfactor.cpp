#include "subq/mvfactor/mvfactor.hpp"

#include <algorithm>
#include <map>

#include "subq/algnum/factor_q.hpp"

namespace subq {

namespace {

bool poly_less(const MultiPoly& a, const MultiPoly& b) {
  auto c = compare_multidegree(a.multidegree(), b.multidegree());
  if (c != 0) return c < 0;
  return a.to_string() < b.to_string();
}

MultiPoly one_like(const MultiPoly& f) { return MultiPoly::constant(f.field(), f.nvars(), Elem(1)); }

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
  auto q = exact_quotient(f, g);
  if (!q) throw DomainError("internal: inexact multivariate division");
  return *q;
}

int highest_variable(const MultiPoly& f) {
  for (std::size_t v = f.nvars(); v-- > 0;)
    if (f.uses_variable(v)) return static_cast<int>(v);
  return -1;
}

std::vector<std::pair<MultiPoly, int>> yun(const MultiPoly& p, std::size_t v) {
  std::vector<std::pair<MultiPoly, int>> out;
  MultiPoly dp = derivative(p, v);
  MultiPoly g = gcd(p, dp);
  MultiPoly w = divide_exact(p, g);
  MultiPoly y = divide_exact(dp, g);
  MultiPoly z = y - derivative(w, v);
  for (int i = 1; !w.is_constant(); ++i) {
    MultiPoly a = gcd(w, z);
    if (!a.is_constant()) out.emplace_back(a.monic(), i);
    w = divide_exact(w, a);
    y = divide_exact(z, a);
    z = y - derivative(w, v);
  }
  return out;
}

void squarefree_rec(const MultiPoly& f, std::map<int, MultiPoly>& acc) {
  int v = highest_variable(f);
  if (v < 0) return;
  MultiPoly c = content_in(f, static_cast<std::size_t>(v));
  if (!c.is_constant()) squarefree_rec(c, acc);
  for (auto& [part, mult] : yun(divide_exact(f, c), static_cast<std::size_t>(v))) {
    auto it = acc.find(mult);
    if (it == acc.end())
      acc.emplace(mult, part);
    else
      it->second = it->second * part;
  }
}

// ------------------------------------------------------------ bivariate lifting

using Series = std::vector<KPoly>;  // coefficient k multiplies t^k; each a polynomial in Y

KPoly mul_trunc(const KPoly& a, const KPoly& b) { return a * b; }

// Lifts F = prod g_i (mod t) to prec terms. F must be monic in Y and the
// g_i monic, pairwise coprime.
std::vector<Series> hensel_lift(const Series& F, const std::vector<KPoly>& g, std::size_t prec) {
  const FieldPtr& K = g.front().field;
  const std::size_t r = g.size();
  KPoly zero(K, {});
  std::vector<KPoly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    KPoly others = KPoly::constant(K, Elem(1));
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others = others * g[j];
    s[i] = inverse_mod(others, g[i]);
  }
  std::vector<Series> G(r, Series(prec, zero));
  std::vector<Series> P(r, Series(prec, zero));  // prefix products
  for (std::size_t i = 0; i < r; ++i) {
    G[i][0] = g[i];
    P[i][0] = i == 0 ? g[0] : P[i - 1][0] * g[i];
  }
  auto prefix_coeff = [&](std::size_t k) {
    P[0][k] = G[0][k];
    for (std::size_t i = 1; i < r; ++i) {
      KPoly acc = zero;
      for (std::size_t a = 0; a <= k; ++a) {
        if (P[i - 1][a].is_zero() || G[i][k - a].is_zero()) continue;
        acc = acc + mul_trunc(P[i - 1][a], G[i][k - a]);
      }
      P[i][k] = acc;
    }
  };
  for (std::size_t k = 1; k < prec; ++k) {
    prefix_coeff(k);
    KPoly err = (k < F.size() ? F[k] : zero) - P[r - 1][k];
    if (err.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) G[i][k] = divrem(err * s[i], g[i]).second;
    prefix_coeff(k);
  }
  return G;
}

Series series_product(const std::vector<const Series*>& parts, std::size_t prec, const FieldPtr& K) {
  Series acc(prec, KPoly(K, {}));
  acc[0] = KPoly::constant(K, Elem(1));
  for (const Series* s : parts) {
    Series next(prec, KPoly(K, {}));
    for (std::size_t a = 0; a < prec; ++a) {
      if (acc[a].is_zero()) continue;
      for (std::size_t b = 0; a + b < prec; ++b) {
        if ((*s)[b].is_zero()) continue;
        next[a + b] = next[a + b] + acc[a] * (*s)[b];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// Two-variable polynomial (index 0 = t, index 1 = Y) <-> series.
Series to_series(const MultiPoly& F) {
  const FieldPtr& K = F.field();
  Series out(static_cast<std::size_t>(std::max(F.degree_in(0) + 1, 1)), KPoly(K, {}));
  std::vector<std::vector<Elem>> dense(out.size(), std::vector<Elem>(static_cast<std::size_t>(F.degree_in(1) + 1)));
  for (const auto& t : F.terms()) dense[static_cast<std::size_t>(t.exp[0])][static_cast<std::size_t>(t.exp[1])] = t.coeff;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = KPoly(K, dense[k]);
  return out;
}

MultiPoly from_series(const Series& s, const FieldPtr& K) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < s.size(); ++k)
    for (std::size_t j = 0; j < s[k].c.size(); ++j)
      if (!s[k].c[j].is_zero()) terms.push_back({MultiDegree{static_cast<int>(k), static_cast<int>(j)}, s[k].c[j]});
  return MultiPoly(K, 2, std::move(terms));
}

std::vector<MultiPoly> factor_univariate_part(const MultiPoly& p, std::size_t y) {
  KPoly u(p.field(), p.univariate_coeffs(y));
  std::vector<MultiPoly> out;
  for (auto& [h, m] : factor_over_field(u).factors) {
    (void)m;
    out.push_back(MultiPoly::from_univariate(p.field(), p.nvars(), y, h.c));
  }
  return out;
}

// Small integer vectors in order of max norm, then 0, 1, -1, 2, -2, ... per slot.
std::vector<std::vector<long>> small_vectors(std::size_t n, long radius) {
  std::vector<long> vals{0};
  for (long k = 1; k <= radius; ++k) {
    vals.push_back(k);
    vals.push_back(-k);
  }
  std::vector<std::vector<long>> all{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<long>> next;
    for (const auto& v : all)
      for (long x : vals) {
        auto w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    all = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    long na = 0, nb = 0;
    for (long x : a) na = std::max(na, std::labs(x));
    for (long x : b) nb = std::max(nb, std::labs(x));
    return na < nb;
  });
  return all;
}

// x_j -> x_j + a_j y for the listed variables.
MultiPoly shear(const MultiPoly& f, const std::vector<std::size_t>& vars, const std::vector<long>& a,
                std::size_t y, int direction) {
  MultiPoly out = f;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (a[i] == 0) continue;
    MultiPoly value = MultiPoly::variable(f.field(), f.nvars(), vars[i]) +
                      MultiPoly::variable(f.field(), f.nvars(), y).scale(Elem(Rational(direction * a[i])));
    out = out.substitute(vars[i], value);
  }
  return out;
}

// p squarefree, primitive in y, positive degree in y.
std::vector<MultiPoly> factor_primitive(const MultiPoly& p, std::size_t y) {
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < p.nvars(); ++v)
    if (v != y && p.uses_variable(v)) others.push_back(v);
  if (others.empty()) return factor_univariate_part(p, y);
  const FieldPtr& K = p.field();

  // Make the polynomial monic in y.
  std::vector<long> shift;
  MultiPoly q;
  for (const auto& a : small_vectors(others.size(), 3)) {
    q = shear(p, others, a, y, 1);
    if (q.leading_coeff_in(y).is_constant()) {
      shift = a;
      break;
    }
  }
  if (shift.empty()) throw DomainError("internal: no monic shear found");
  q = q.scale(K->inv(*q.leading_coeff_in(y).constant_value()));

  int base = 0;
  for (std::size_t v : others) base = std::max(base, q.degree_in(v) + 1);
  for (int attempt = 0; attempt < 8; ++attempt, ++base) {
    // Kronecker map to (t, y).
    std::vector<Term> terms;
    for (const auto& t : q.terms()) {
      int e = 0, scale = 1;
      for (std::size_t v : others) {
        e += t.exp[v] * scale;
        scale *= base;
      }
      terms.push_back({MultiDegree{e, t.exp[y]}, t.coeff});
    }
    MultiPoly F(K, 2, std::move(terms));
    int n = F.degree_in(1);
    int degt = F.degree_in(0);

    std::optional<Rational> t0;
    KPoly F0;
    int tries = 2 * n * (degt + 1) + 2;
    for (int i = 0; i < tries && !t0; ++i) {
      Rational cand = (i % 2 == 0) ? Rational(i / 2) : Rational(-(i + 1) / 2);
      KPoly u(K, F.evaluate_at(0, Elem(cand)).univariate_coeffs(1));
      if (u.degree() == n && gcd(u, u.derivative()).degree() == 0) {
        t0 = cand;
        F0 = u;
      }
    }
    if (!t0) continue;

    auto uf = factor_over_field(F0);
    std::vector<KPoly> g;
    for (auto& [h, m] : uf.factors) g.push_back(h);
    if (g.size() == 1) return {p.monic()};

    MultiPoly tvar = MultiPoly::variable(K, 2, 0);
    MultiPoly shifted = F.substitute(0, tvar + MultiPoly::constant(K, 2, Elem(*t0)));
    Series Fs = to_series(shifted);
    std::size_t prec = static_cast<std::size_t>(degt) + 1;
    auto G = hensel_lift(Fs, g, prec);
    MultiPoly unshift = tvar - MultiPoly::constant(K, 2, Elem(*t0));

    long limit = 1;
    for (std::size_t i = 0; i < others.size(); ++i) limit *= base;
    auto from_kronecker = [&](const MultiPoly& H) -> std::optional<MultiPoly> {
      std::vector<Term> out;
      for (const auto& t : H.terms()) {
        long e = t.exp[0];
        if (e >= limit) return std::nullopt;
        MultiDegree exp(q.nvars(), 0);
        for (std::size_t v : others) {
          exp[v] = static_cast<int>(e % base);
          e /= base;
        }
        exp[y] = t.exp[1];
        out.push_back({exp, t.coeff});
      }
      return MultiPoly(K, q.nvars(), std::move(out));
    };

    std::vector<std::size_t> rest(g.size());
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = i;
    MultiPoly remaining = q;
    std::vector<MultiPoly> found;
    for (std::size_t size = 1; 2 * size <= rest.size();) {
      bool hit = false;
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        std::vector<const Series*> parts;
        for (std::size_t i : pick) parts.push_back(&G[rest[i]]);
        MultiPoly H = from_series(series_product(parts, prec, K), K).substitute(0, unshift);
        if (auto cand = from_kronecker(H)) {
          if (auto quo = exact_quotient(remaining, *cand)) {
            found.push_back(*cand);
            remaining = *quo;
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < rest.size(); ++i)
              if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(rest[i]);
            rest = std::move(keep);
            hit = true;
            break;
          }
        }
        // next combination
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == rest.size() - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (!hit) ++size;
    }
    if (!remaining.is_constant()) found.push_back(remaining);
    std::vector<MultiPoly> out;
    for (const auto& h : found) out.push_back(shear(h, others, shift, y, -1).monic());
    return out;
  }
  throw DomainError("internal: no squarefree Kronecker image found");
}

std::vector<MultiPoly> factor_squarefree(const MultiPoly& s) {
  int v = highest_variable(s);
  if (v < 0) return {};
  MultiPoly c = content_in(s, static_cast<std::size_t>(v));
  std::vector<MultiPoly> out = factor_squarefree(c);
  for (auto& h : factor_primitive(divide_exact(s, c), static_cast<std::size_t>(v))) out.push_back(std::move(h));
  return out;
}

ComplexBox evaluate_over(const NumberField& K, const KPoly& g, const ComplexBox& z, const Rational& w) {
  ComplexBox acc = ComplexBox::point(0);
  for (std::size_t k = g.c.size(); k-- > 0;) acc = acc * z + K.enclose(g.c[k], w);
  return acc;
}

}  // namespace

MultiPoly Factorization::expand(std::size_t nvars) const {
  MultiPoly acc = MultiPoly::constant(field, nvars, content);
  for (const auto& [f, m] : factors) acc = acc * f.pow(static_cast<unsigned>(m));
  return acc;
}

MultiPoly derivative(const MultiPoly& f, std::size_t v) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.exp[v] == 0) continue;
    Term u = t;
    u.coeff = Rational(t.exp[v]) * t.coeff;
    u.exp[v] -= 1;
    terms.push_back(std::move(u));
  }
  return MultiPoly(f.field(), f.nvars(), std::move(terms));
}

MultiPoly content_in(const MultiPoly& f, std::size_t v) {
  MultiPoly acc(f.field(), f.nvars());
  for (const auto& c : f.coefficients_in(v)) {
    if (c.is_zero()) continue;
    acc = gcd(acc, c);
    if (acc.is_constant()) break;
  }
  return acc;
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  int hv = std::max(highest_variable(a), highest_variable(b));
  if (hv < 0) return one_like(a);
  auto v = static_cast<std::size_t>(hv);
  if (!a.uses_variable(v)) return gcd(a, content_in(b, v));
  if (!b.uses_variable(v)) return gcd(content_in(a, v), b);
  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly c = gcd(ca, cb);
  MultiPoly r0 = divide_exact(a, ca), r1 = divide_exact(b, cb);
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  MultiPoly g;
  while (true) {
    MultiPoly r = pseudo_remainder(r0, r1, v);
    if (r.is_zero()) {
      g = r1;
      break;
    }
    if (!r.uses_variable(v)) {
      g = one_like(a);
      break;
    }
    r = divide_exact(r, content_in(r, v));
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return (c * g).monic();
}

std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::map<int, MultiPoly> acc;
  squarefree_rec(f.monic(), acc);
  std::vector<std::pair<MultiPoly, int>> out;
  for (auto& [m, p] : acc) out.emplace_back(p.monic(), m);
  return out;
}

Factorization factor_multivariate(const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization out{f.field(), f.leading_coeff(), {}};
  if (f.total_degree() == 1) {
    out.factors.emplace_back(f.monic(), 1);
    return out;
  }
  for (const auto& [part, mult] : squarefree_decomposition(f))
    for (auto& h : factor_squarefree(part)) out.factors.emplace_back(std::move(h), mult);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

MultiPoly embed_poly(const MultiPoly& f, FieldPtr target, const Elem& image_of_generator) {
  const CoeffField& K = *target;
  return f.map_coefficients(target, [&](const Elem& e) {
    Elem acc;
    for (std::size_t k = e.coeffs().size(); k-- > 0;) acc = K.add(K.mul(acc, image_of_generator), Elem(e.coeffs()[k]));
    return acc;
  });
}

AbsoluteIrreducibility is_absolutely_irreducible(const MultiPoly& f) {
  if (f.is_zero() || f.is_constant()) throw DomainError("absolute irreducibility needs a nonconstant polynomial");
  AbsoluteIrreducibility out;
  if (f.total_degree() == 1) {
    out.absolutely_irreducible = true;
    return out;
  }
  NumberFieldPtr K = as_number_field(f.field());
  MultiPoly fk = f.map_coefficients(K, [](const Elem& e) { return e; });
  Factorization base = factor_multivariate(fk);
  if (!base.is_irreducible()) {
    out.extension = K;
    out.witness = std::move(base);
    return out;
  }
  // Specialize all but one variable so the fibre polynomial keeps its degree
  // and stays squarefree.
  auto y = static_cast<std::size_t>(highest_variable(fk));
  std::vector<std::size_t> others;
  for (std::size_t v = 0; v < fk.nvars(); ++v)
    if (v != y && fk.uses_variable(v)) others.push_back(v);
  int n = fk.degree_in(y);
  std::optional<KPoly> fibre;
  for (long radius = 1; !fibre; ++radius) {
    for (const auto& a : small_vectors(others.size(), radius)) {
      MultiPoly s = fk;
      for (std::size_t i = 0; i < others.size(); ++i) s = s.evaluate_at(others[i], Elem(Rational(a[i])));
      KPoly u(K, s.univariate_coeffs(y));
      if (u.degree() == n && gcd(u, u.derivative()).degree() == 0) {
        fibre = u;
        break;
      }
    }
    if (radius > 64) throw DomainError("internal: no squarefree fibre found");
  }
  KPoly smallest = factor_over_field(*fibre).factors.front().first;
  for (const auto& [h, m] : factor_over_field(*fibre).factors)
    if (h.degree() < smallest.degree()) smallest = h;
  if (smallest.degree() == 1) {
    out.absolutely_irreducible = true;
    return out;
  }
  AlgebraicNumber beta = enumerate_roots_Qbar(smallest).front();
  PrimitiveElement pe = primitive_element(K->generator(), beta);
  MultiPoly lifted = embed_poly(fk, pe.field, pe.alpha);
  Factorization over = factor_multivariate(lifted);
  if (over.is_irreducible()) {
    out.absolutely_irreducible = true;
    return out;
  }
  if (!(over.expand(lifted.nvars()) == lifted)) throw DomainError("internal: witness does not multiply back");
  out.extension = pe.field;
  out.witness = std::move(over);
  return out;
}

std::vector<AlgebraicNumber> enumerate_roots_Qbar(const KPoly& p) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  NumberFieldPtr K = as_number_field(p.field);
  KPoly pk(K, p.c);
  std::vector<AlgebraicNumber> out;
  for (const auto& [h, m] : factor_over_field(pk).factors) {
    std::vector<AlgebraicNumber> group;
    if (h.degree() == 1) {
      group.push_back(K->to_algebraic(K->neg(h.c[0])));
    } else {
      for (const auto& [q, qm] : factor_univariate_Q(norm(h)).factors) {
        (void)qm;
        KPoly g = gcd(h, KPoly::from_q(K, q));
        if (g.degree() <= 0) continue;
        ZPoly qz = primitive_integer_part(q);
        std::vector<AlgebraicNumber> cands;
        for (int i = 0; i <= q.degree() - 1; ++i) cands.push_back(AlgebraicNumber::root_of(qz, static_cast<std::size_t>(i)));
        for (Rational w(1, 16);; w /= 16) {
          std::vector<AlgebraicNumber> hits;
          for (const auto& c : cands)
            if (auto b = evaluate_over(*K, g, c.enclosure(w), w); b.re.contains_zero() && b.im.contains_zero())
              hits.push_back(c);
          if (static_cast<int>(hits.size()) == g.degree()) {
            for (auto& r : hits) group.push_back(std::move(r));
            break;
          }
        }
      }
      std::sort(group.begin(), group.end());
    }
    for (int k = 0; k < m; ++k)
      for (const auto& r : group) out.push_back(r);
  }
  return out;
}

}  // namespace subq
