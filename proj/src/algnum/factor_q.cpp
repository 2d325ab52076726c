#include "subq/algnum/factor_q.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>

namespace subq {

namespace {

// ------------------------------------------------------------ arithmetic mod p

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // low to high, trimmed

struct Zp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

  ModPoly from(const ZPoly& f) const {
    ModPoly r(f.coeffs().size());
    Integer pp = static_cast<unsigned long>(p);
    for (std::size_t i = 0; i < r.size(); ++i) {
      Integer m;
      mpz_fdiv_r(m.get_mpz_t(), f.coeffs()[i].get_mpz_t(), pp.get_mpz_t());
      r[i] = m.get_ui();
    }
    trim(r);
    return r;
  }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }

  ModPoly scale(const ModPoly& a, u64 s) const {
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], s);
    trim(r);
    return r;
  }

  std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) const {
    ModPoly r = a;
    if (deg(a) < deg(b)) return {{}, r};
    ModPoly q(a.size() - b.size() + 1, 0);
    u64 inv_lc = inv(b.back());
    for (int k = deg(a); k >= deg(b); --k) {
      u64 c = mul(r[k], inv_lc);
      if (!c) continue;
      q[k - deg(b)] = c;
      for (int j = 0; j <= deg(b); ++j) r[k - deg(b) + j] = sub(r[k - deg(b) + j], mul(c, b[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
  }

  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divrem(a, b).second; }

  ModPoly monic(const ModPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s, t with s a + t b = 1 for coprime a, b.
  std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divrem(r0, r1);
      ModPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 c = inv(r0.back());
    return {scale(s0, c), scale(t0, c)};
  }

  ModPoly derivative(const ModPoly& a) const {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p));
    trim(r);
    return r;
  }

  ModPoly powmod(ModPoly base, Integer e, const ModPoly& m) const {
    ModPoly r{1};
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base), m);
      e >>= 1;
      if (e > 0) base = rem(mul(base, base), m);
    }
    return r;
  }

  // Distinct-degree factorization of a monic squarefree polynomial.
  std::vector<std::pair<ModPoly, int>> ddf(ModPoly f) const {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly x{0, 1};
    ModPoly h = x;
    for (int i = 1; 2 * i <= deg(f); ++i) {
      h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
      ModPoly g = gcd(sub(h, x), f);
      if (deg(g) > 0) {
        out.emplace_back(g, i);
        f = divrem(f, g).first;
        h = rem(h, f);
      }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
  }

  // Equal-degree splitting (odd p).
  void edf(const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) const {
    if (deg(g) == d) {
      out.push_back(monic(g));
      return;
    }
    Integer pd = 1;
    for (int k = 0; k < d; ++k) pd *= static_cast<unsigned long>(p);
    Integer e = (pd - 1) / 2;
    std::uniform_int_distribution<u64> coef(0, p - 1);
    while (true) {
      ModPoly a(static_cast<std::size_t>(deg(g)));
      for (auto& c : a) c = coef(rng);
      trim(a);
      if (deg(a) < 1) continue;
      ModPoly b = sub(powmod(a, e, g), ModPoly{1});
      ModPoly c = gcd(b, g);
      if (deg(c) > 0 && deg(c) < deg(g)) {
        edf(c, d, rng, out);
        edf(divrem(g, c).first, d, rng, out);
        return;
      }
    }
  }
};

// ------------------------------------------------------------ arithmetic mod M

using IPoly = std::vector<Integer>;

void trim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IPoly reduce(IPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

IPoly imul(const IPoly& a, const IPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(std::move(r), m);
}

IPoly isub(const IPoly& a, const IPoly& b, const Integer& m) {
  IPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(std::move(r), m);
}

IPoly to_ipoly(const ModPoly& a) {
  IPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

ModPoly to_mod(const IPoly& a, const Zp& zp) {
  ModPoly r;
  Integer pp = static_cast<unsigned long>(zp.p);
  for (const auto& c : a) {
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
    r.push_back(m.get_ui());
  }
  Zp::trim(r);
  return r;
}

IPoly symmetric(IPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

// Lifts f = g h (mod p) with g monic to f = G H (mod p^k).
std::pair<IPoly, IPoly> hensel_pair(const IPoly& f, const ModPoly& g, const ModPoly& h, const Zp& zp, int k,
                                    const Integer& modulus) {
  auto [s, t] = zp.bezout(g, h);
  IPoly G = to_ipoly(g), H = to_ipoly(h);
  Integer pj = static_cast<unsigned long>(zp.p);
  for (int j = 1; j < k; ++j) {
    IPoly e = isub(f, imul(G, H, modulus), modulus);
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    ModPoly ep = to_mod(e, zp);
    ModPoly dg = zp.rem(zp.mul(t, ep), g);
    auto [dh, r] = zp.divrem(zp.sub(ep, zp.mul(dg, h)), g);
    if (!r.empty()) throw DomainError("Hensel step failed");
    IPoly DG = to_ipoly(dg), DH = to_ipoly(dh);
    G.resize(std::max(G.size(), DG.size()), Integer(0));
    H.resize(std::max(H.size(), DH.size()), Integer(0));
    for (std::size_t i = 0; i < DG.size(); ++i) G[i] += pj * DG[i];
    for (std::size_t i = 0; i < DH.size(); ++i) H[i] += pj * DH[i];
    G = reduce(std::move(G), modulus);
    H = reduce(std::move(H), modulus);
    pj *= static_cast<unsigned long>(zp.p);
  }
  return {G, H};
}

ModPoly product_mod(const std::vector<ModPoly>& fs, std::size_t lo, std::size_t hi, const Zp& zp) {
  ModPoly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = zp.mul(r, fs[i]);
  return r;
}

// f = lc * prod factors (mod p), factors monic; returns the lifted monic
// factors modulo p^k.
void hensel_tree(const IPoly& f, const std::vector<ModPoly>& factors, std::size_t lo, std::size_t hi,
                 const Zp& zp, int k, const Integer& modulus, std::vector<IPoly>& out) {
  if (hi - lo == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    IPoly r = f;
    for (auto& c : r) c *= inv;
    out.push_back(reduce(std::move(r), modulus));
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  ModPoly g = product_mod(factors, lo, mid, zp);
  ModPoly h = zp.scale(product_mod(factors, mid, hi, zp), to_mod(IPoly{f.back()}, zp)[0]);
  auto [G, H] = hensel_pair(f, g, h, zp, k, modulus);
  hensel_tree(G, factors, lo, mid, zp, k, modulus, out);
  hensel_tree(H, factors, mid, hi, zp, k, modulus, out);
}

bool divides_exactly(const ZPoly& g, const ZPoly& f, ZPoly& quotient) {
  auto [q, r] = divrem(f.to_q(), g.to_q());
  if (!r.is_zero()) return false;
  std::vector<Integer> qc;
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) return false;
    qc.push_back(c.get_num());
  }
  quotient = ZPoly(std::move(qc));
  return true;
}

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  const Integer& lc = f.lc();

  // Pick the admissible prime with the fewest modular factors among the
  // first few candidates.
  static const unsigned long primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                                         67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137,
                                         139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211,
                                         223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283};
  u64 best_p = 0;
  std::size_t best_count = 0;
  int tried = 0;
  for (unsigned long p : primes) {
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    Zp zp{p};
    ModPoly fp = zp.from(f);
    if (zp.deg(zp.gcd(fp, zp.derivative(fp))) != 0) continue;
    std::size_t count = 0;
    for (const auto& [g, d] : zp.ddf(zp.monic(fp))) count += static_cast<std::size_t>(Zp::deg(g) / d);
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (count == 1 || ++tried >= 6) break;
  }
  if (best_p == 0) throw DomainError("no admissible prime for factoring");
  if (best_count == 1) return {f};

  Zp zp{best_p};
  ModPoly fp = zp.monic(zp.from(f));
  std::mt19937_64 rng(0x5eed);
  std::vector<ModPoly> modular;
  for (const auto& [g, d] : zp.ddf(fp)) zp.edf(g, d, rng, modular);
  std::sort(modular.begin(), modular.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });

  // Coefficient bound for lc * (factor / lc(factor)).
  Integer bound = Integer(abs(lc)) * f.norm1();
  bound <<= static_cast<unsigned>(n + 1);
  Integer modulus = static_cast<unsigned long>(best_p);
  int k = 1;
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(best_p);
    ++k;
  }
  IPoly fi(f.coeffs().begin(), f.coeffs().end());
  std::vector<IPoly> lifted;
  hensel_tree(reduce(fi, modulus), modular, 0, modular.size(), zp, k, modulus, lifted);

  // Subset recombination with the leading-coefficient trick.
  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t d = 1;
  while (2 * d <= remaining.size()) {
    bool progress = false;
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    while (true) {
      Integer rlc = rest.lc();
      Integer c0 = rlc;
      for (std::size_t i : pick) c0 = (c0 * lifted[remaining[i]][0]) % modulus;
      IPoly c0s = symmetric(IPoly{c0}, modulus);
      Integer c0v = c0s.empty() ? Integer(0) : c0s[0];
      Integer tail = rlc * rest.coeffs()[0];
      bool plausible = c0v != 0 && mpz_divisible_p(tail.get_mpz_t(), c0v.get_mpz_t());
      if (plausible) {
        IPoly g{rlc};
        for (std::size_t i : pick) g = imul(g, lifted[remaining[i]], modulus);
        ZPoly cand = ZPoly(symmetric(g, modulus)).primitive();
        ZPoly quotient;
        if (cand.degree() > 0 && divides_exactly(cand, rest, quotient)) {
          found.push_back(cand);
          rest = quotient.primitive();
          std::vector<std::size_t> next;
          for (std::size_t i = 0; i < remaining.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) next.push_back(remaining[i]);
          remaining = std::move(next);
          progress = true;
          break;
        }
      }
      // Next combination.
      std::size_t i = d;
      while (i > 0 && pick[i - 1] == remaining.size() - d + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!progress) ++d;
  }
  if (rest.degree() > 0) found.push_back(rest.primitive());
  return found;
}

}  // namespace

bool qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k)
    if (a.coeffs()[k] != b.coeffs()[k]) return a.coeffs()[k] < b.coeffs()[k];
  return false;
}

std::vector<ZPoly> factor_squarefree_Z(const ZPoly& f0) {
  ZPoly f = f0.primitive();
  std::vector<ZPoly> out;
  if (f.degree() < 1) return out;
  if (f.coeffs()[0] == 0) {
    out.push_back(ZPoly({Integer(0), Integer(1)}));
    std::vector<Integer> shifted(f.coeffs().begin() + 1, f.coeffs().end());
    f = ZPoly(std::move(shifted)).primitive();
  }
  if (f.degree() >= 1) {
    for (auto& g : zassenhaus(f)) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const ZPoly& a, const ZPoly& b) { return compare(a, b) < 0; });
  return out;
}

UniFactorization factor_univariate_Q(const QPoly& p) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  UniFactorization out;
  out.unit = p.lc();
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (const auto& g : factor_squarefree_Z(primitive_integer_part(part)))
      out.factors.emplace_back(g.to_q().monic(), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (qpoly_less(a.first, b.first)) return true;
    if (qpoly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible_Q(const QPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor_univariate_Q(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace subq
