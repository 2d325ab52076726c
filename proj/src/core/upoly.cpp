#include "subq/core/upoly.hpp"

#include <algorithm>
#include <numeric>

namespace subq {

namespace {

template <class C>
std::string poly_to_string(const std::vector<C>& c, const std::string& var) {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    const C& a = c[k];
    if (a == 0) continue;
    bool neg = sgn(a) < 0;
    C mag = neg ? C(-a) : a;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (k == 0) {
      out += mag.get_str();
    } else {
      if (!unit) out += mag.get_str() + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  QPoly r = *this;
  Rational inv = 1 / lc();
  for (auto& a : r.c_) a *= inv;
  return r;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly operator*(const Rational& s, const QPoly& a) {
  if (s == 0) return {};
  QPoly r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::string QPoly::to_string(const std::string& var) const { return poly_to_string(c_, var); }

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  Rational inv = 1 / b.lc();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly rem(const QPoly& a, const QPoly& b) { return divrem(a, b).second; }

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {QPoly{}, QPoly{}, QPoly{}};
  Rational inv = 1 / r0.lc();
  return {inv * s0, inv * t0, inv * r0};
}

QPoly squarefree_part(const QPoly& a) {
  if (a.degree() <= 0) return a.monic();
  QPoly g = gcd(a, a.derivative());
  return exact_div(a, g).monic();
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& a) {
  std::vector<std::pair<QPoly, int>> out;
  if (a.degree() <= 0) return out;
  QPoly f = a.monic();
  QPoly d = f.derivative();
  QPoly g = gcd(f, d);
  QPoly b = exact_div(f, g);
  QPoly c = exact_div(d, g);
  QPoly dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly h = gcd(b, dd);
    if (h.degree() > 0) out.emplace_back(h, i);
    b = exact_div(b, h);
    c = exact_div(dd, h);
    dd = c - b.derivative();
    ++i;
  }
  return out;
}

Rational resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int m = a.degree(), n = b.degree();
  if (n == 0) {
    Rational r = 1;
    for (int i = 0; i < m; ++i) r *= b.lc();
    return r;
  }
  if (m == 0) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= a.lc();
    return r;
  }
  QPoly r = rem(a, b);
  if (r.is_zero()) return 0;
  Rational factor = ((m * n) % 2 == 1) ? Rational(-1) : Rational(1);
  for (int i = 0; i < m - r.degree(); ++i) factor *= b.lc();
  return factor * resultant(b, r);
}

QPoly compose(const QPoly& p, const QPoly& q) {
  QPoly acc;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * q + QPoly(p.coeffs()[k]);
  return acc;
}

QPoly taylor_shift(const QPoly& p, const Rational& s) {
  std::vector<Rational> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += s * c[j];
  return QPoly(std::move(c));
}

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }

void ZPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer ZPoly::content() const {
  Integer g = 0;
  for (const auto& a : c_) g = ::gcd(g, a);
  return g;
}

ZPoly ZPoly::primitive() const {
  if (is_zero()) return {};
  Integer g = content();
  if (sgn(lc()) < 0) g = -g;
  std::vector<Integer> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(r));
}

QPoly ZPoly::to_q() const {
  std::vector<Rational> r(c_.begin(), c_.end());
  return QPoly(std::move(r));
}

Integer ZPoly::eval(const Integer& t) const {
  Integer acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

Rational ZPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

Integer ZPoly::norm1() const {
  Integer s = 0;
  for (const auto& a : c_) s += abs(a);
  return s;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return ZPoly(std::move(r));
}

std::string ZPoly::to_string(const std::string& var) const { return poly_to_string(c_, var); }

ZPoly primitive_integer_part(const QPoly& q) {
  if (q.is_zero()) return {};
  Integer den = 1;
  for (const auto& a : q.coeffs()) den = lcm(den, Integer(a.get_den()));
  std::vector<Integer> r(q.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    Rational s = q.coeffs()[i] * den;
    r[i] = s.get_num();
  }
  return ZPoly(std::move(r)).primitive();
}

int compare(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    int c = cmp(a.coeffs()[k], b.coeffs()[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------- Sturm

namespace {

std::vector<QPoly> signed_remainder_sequence(const QPoly& p, const QPoly& q) {
  std::vector<QPoly> seq;
  seq.push_back(p);
  if (q.is_zero()) return seq;
  seq.push_back(q);
  while (true) {
    QPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and tames coefficient growth.
    Integer den = 1;
    for (const auto& a : r.coeffs()) den = lcm(den, Integer(a.get_den()));
    Integer num = 0;
    for (const auto& a : r.coeffs()) num = ::gcd(num, Integer(a.get_num()));
    seq.push_back(make_rational(-den, num) * r);
  }
  return seq;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int seq_variations(const std::vector<QPoly>& seq, const Rational& x) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& p : seq) s.push_back(sgn(p.eval(x)));
  return variations(s);
}

}  // namespace

SturmSequence::SturmSequence(const QPoly& p) : seq_(signed_remainder_sequence(p, p.derivative())) {}

int SturmSequence::variations_at(const Rational& x) const { return seq_variations(seq_, x); }

int SturmSequence::variations_at_infinity(int s) const {
  std::vector<int> signs;
  for (const auto& p : seq_) {
    if (p.is_zero()) continue;
    int sg = sgn(p.lc());
    if (s < 0 && p.degree() % 2 == 1) sg = -sg;
    signs.push_back(sg);
  }
  return variations(signs);
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_all_real_roots() const {
  return variations_at_infinity(-1) - variations_at_infinity(1);
}

int cauchy_index(const QPoly& q, const QPoly& p, const Rational& a, const Rational& b) {
  auto seq = signed_remainder_sequence(p, q);
  return seq_variations(seq, a) - seq_variations(seq, b);
}

Rational root_bound(const QPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[i] / p.lc());
    if (r > m) m = r;
  }
  Rational bound = 1 + m;
  Rational pow2 = 1;
  while (pow2 < bound) pow2 *= 2;
  return pow2;
}

}  // namespace subq

namespace subq {

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly acc;
  for (std::size_t k = n; k-- > 0;) acc = acc * (QPoly::x() - QPoly(xs[k])) + QPoly(dd[k]);
  return acc;
}

}  // namespace subq
