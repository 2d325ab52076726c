#include "subq/formulas/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "subq/algnum/factor_q.hpp"

namespace subq {

namespace {

std::mutex height_mutex;
std::deque<std::vector<AlgebraicNumber>> height_cache;  // index h - 1; deque keeps references valid

// Coefficient vectors (top first) of degree n with absolute sum s, ordered by
// (|a|, sign) from the top coefficient down.
void coefficient_vectors(int n, int s, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  std::size_t pos = cur.size();
  int left = s;
  for (long x : cur) left -= static_cast<int>(std::labs(x));
  if (pos == static_cast<std::size_t>(n)) {
    // constant term takes the rest and must be nonzero
    if (left == 0) return;
    for (long v : {static_cast<long>(left), -static_cast<long>(left)}) {
      cur.push_back(v);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int mag = pos == 0 ? 1 : 0; mag <= left; ++mag) {
    for (int sgn : {1, -1}) {
      if (sgn == -1 && (mag == 0 || pos == 0)) continue;
      cur.push_back(sgn * mag);
      coefficient_vectors(n, s, cur, out);
      cur.pop_back();
    }
  }
}

std::vector<AlgebraicNumber> compute_height(unsigned h) {
  std::vector<AlgebraicNumber> out;
  for (const auto& q : rationals_of_height(h)) out.push_back(AlgebraicNumber::rational(q));
  for (int n = 2; n + 1 <= static_cast<int>(h); ++n) {
    int s = static_cast<int>(h) - n + 1;
    std::vector<std::vector<long>> vecs;
    std::vector<long> cur;
    coefficient_vectors(n, s, cur, vecs);
    for (const auto& v : vecs) {
      std::vector<Integer> coeffs(v.rbegin(), v.rend());
      Integer g = 0;
      for (const auto& c : coeffs) g = gcd(g, c);
      if (g != 1) continue;
      ZPoly p(coeffs);
      if (!is_irreducible_Q(p.to_q())) continue;
      for (int i = 0; i < n; ++i) out.push_back(AlgebraicNumber::root_of(p, static_cast<std::size_t>(i)));
    }
  }
  return out;
}

const std::vector<AlgebraicNumber>& of_height(unsigned h) {
  std::lock_guard<std::mutex> lock(height_mutex);
  while (height_cache.size() < h) height_cache.push_back(compute_height(static_cast<unsigned>(height_cache.size() + 1)));
  return height_cache[h - 1];
}

// ------------------------------------------------------------ formula listing

using Shape = std::vector<std::pair<MultiDegree, AlgebraicNumber>>;

std::vector<MultiDegree> monomials_up_to(std::size_t n, int d) {
  std::vector<MultiDegree> out;
  MultiDegree cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), MultiDegreeLess{});
  return out;
}

int total(const MultiDegree& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Polynomials with support among monomials of degree <= d, exact total
// degree d, leading coefficient 1 and coefficient heights summing to h.
std::vector<Shape> shapes(std::size_t n, int d, int h, bool all_quantified) {
  std::vector<Shape> out;
  auto monos = monomials_up_to(n, d);
  for (std::size_t lead = 0; lead < monos.size(); ++lead) {
    Shape cur{{monos[lead], AlgebraicNumber::rational(1)}};
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
      if (j == lead) {
        if (left != 0) return;
        int deg = 0;
        std::vector<bool> seen(n, false);
        for (const auto& [e, c] : cur) {
          deg = std::max(deg, total(e));
          for (std::size_t v = 0; v < n; ++v) seen[v] = seen[v] || e[v] > 0;
        }
        if (deg != d) return;
        if (all_quantified)
          for (std::size_t v = 1; v < n; ++v)
            if (!seen[v]) return;
        out.push_back(cur);
        return;
      }
      rec(j + 1, left);
      for (int k = 2; k <= left; ++k)
        for (const auto& c : of_height(static_cast<unsigned>(k))) {
          if (c.is_rational() && c.rational_value() == 0) continue;
          cur.emplace_back(monos[j], c);
          rec(j + 1, left - k);
          cur.pop_back();
        }
    };
    rec(0, h - 2);
  }
  return out;
}

BasicRankable realize(std::size_t m, const Shape& f, const Shape& g) {
  std::vector<AlgebraicNumber> gens;
  for (const Shape* s : {&f, &g})
    for (const auto& [e, c] : *s)
      if (!c.is_rational()) gens.push_back(c);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  NumberFieldPtr field = rational_number_field();
  std::vector<Elem> images;
  if (!gens.empty()) {
    GeneratedField gf = field_of(gens);
    field = gf.field;
    images = gf.generators;
  }
  auto value = [&](const AlgebraicNumber& c) {
    if (c.is_rational()) return Elem(c.rational_value());
    return images[static_cast<std::size_t>(std::lower_bound(gens.begin(), gens.end(), c) - gens.begin())];
  };
  auto build = [&](const Shape& s) {
    std::vector<Term> terms;
    for (const auto& [e, c] : s) terms.push_back({e, value(c)});
    return MultiPoly(field, m + 1, std::move(terms));
  };
  MultiPoly gp = g.empty() ? MultiPoly::constant(field, m + 1, Elem(1)) : build(g);
  return BasicRankable(m, {build(f)}, gp);
}

std::mutex listing_mutex;
std::vector<BasicRankable> survivors;
int next_height = 1;

void extend_listing(int H) {
  for (std::size_t m = 1; m + 1 <= static_cast<std::size_t>(H); ++m) {
    int budget0 = H - static_cast<int>(m + 1);
    for (int df = 1; df + 4 <= budget0; ++df)
      for (int dg = 0; df + dg + 4 <= budget0; ++dg) {
        int B = budget0 - df - dg;
        for (int hf = 2; hf + 2 <= B; ++hf) {
          int hg = B - hf;
          std::vector<Shape> gs;
          if (dg == 0) {
            if (hg != 2) continue;
            gs.push_back({});
          } else {
            gs = shapes(m + 1, dg, hg, false);
          }
          if (gs.empty()) continue;
          for (const auto& f : shapes(m + 1, df, hf, true))
            for (const auto& g : gs) {
              BasicRankable b = realize(m, f, g);
              if (validate_hypersurface(b).valid) survivors.push_back(std::move(b));
            }
        }
      }
  }
}

}  // namespace

Integer algebraic_height(const AlgebraicNumber& a) {
  Integer s = 0;
  for (const auto& c : a.minpoly().coeffs()) s += abs(c);
  return s + a.degree() - 1;
}

std::vector<Rational> rationals_of_height(unsigned h) {
  if (h == 0) return {};
  if (h == 1) return {Rational(0)};
  std::vector<Rational> pos;
  for (unsigned p = h - 1; p >= 1; --p) {
    unsigned q = h - p;
    if (std::gcd(p, q) == 1) pos.push_back(make_rational(static_cast<long>(p), static_cast<long>(q)));
  }
  std::vector<Rational> out = pos;
  for (const auto& x : pos) out.push_back(-x);
  return out;
}

Rational rational_at(std::size_t index) {
  for (unsigned h = 1;; ++h) {
    auto r = rationals_of_height(h);
    if (index < r.size()) return r[index];
    index -= r.size();
  }
}

std::vector<AlgebraicNumber> algebraic_numbers_of_height(unsigned h) {
  if (h == 0) return {};
  return of_height(h);
}

AlgebraicNumber algebraic_number_at(std::size_t index) {
  for (unsigned h = 1;; ++h) {
    const auto& r = of_height(h);
    if (index < r.size()) return r[index];
    index -= r.size();
  }
}

std::size_t algebraic_number_index(const AlgebraicNumber& a) {
  auto h = static_cast<unsigned>(algebraic_height(a).get_ui());
  std::size_t offset = 0;
  for (unsigned k = 1; k < h; ++k) offset += of_height(k).size();
  const auto& r = of_height(h);
  auto it = std::find(r.begin(), r.end(), a);
  if (it == r.end()) throw DomainError("internal: number missing from its height class");
  return offset + static_cast<std::size_t>(it - r.begin());
}

Integer formula_height(const BasicRankable& b) {
  NumberFieldPtr K = as_number_field(b.field());
  Integer h = static_cast<unsigned long>(b.quantifiers + 1);
  for (const auto& f : b.equations) {
    h += f.total_degree();
    for (const auto& t : f.terms()) h += algebraic_height(K->to_algebraic(t.coeff));
  }
  h += b.inequation.total_degree();
  for (const auto& t : b.inequation.terms()) h += algebraic_height(K->to_algebraic(t.coeff));
  return h;
}

BasicRankable enumerate_hypersurface_formulas(std::size_t t) {
  if (t == 0) throw DomainError("formula indices start at 1");
  std::lock_guard<std::mutex> lock(listing_mutex);
  while (survivors.size() < t) extend_listing(next_height++);
  return survivors[t - 1];
}

}  // namespace subq
