#include "subq/algnum/numberfield.hpp"

#include <algorithm>

#include "subq/algnum/factor_q.hpp"

namespace subq {

namespace {

unsigned bits_for(const Rational& w) {
  Rational inv = 1 / w;
  return static_cast<unsigned>(mpz_sizeinbase(inv.get_num_mpz_t(), 2)) + 24;
}

// Res_Y(m(Y), q(t, Y)) interpolated in t, for q given by evaluation.
template <class AtPoint>
QPoly interpolated_resultant(const QPoly& m, int degree_bound, AtPoint at) {
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= degree_bound; ++t) {
    xs.emplace_back(t);
    ys.push_back(resultant(m, at(Rational(t))));
  }
  return interpolate(xs, ys);
}

AlgebraicNumber identify_among(const std::vector<ZPoly>& candidates,
                               const std::function<ComplexBox(const Rational& w)>& enclose) {
  Rational w = make_rational(1, 16);
  std::vector<std::shared_ptr<const RootSet>> sets;
  for (const auto& c : candidates) sets.push_back(RootSet::of(c.primitive()));
  for (int iter = 0; iter < 1000; ++iter) {
    ComplexBox e = enclose(w);
    int hits = 0;
    std::size_t which_poly = 0, which_root = 0;
    for (std::size_t k = 0; k < sets.size(); ++k) {
      for (std::size_t i = 0; i < sets[k]->size(); ++i) {
        ComplexBox b = candidates[k].degree() == 1 ? ComplexBox::point(-Rational(candidates[k].coeffs()[0]) /
                                                                        Rational(candidates[k].coeffs()[1]))
                                                   : sets[k]->box(i, w);
        if (b.intersects(e)) {
          ++hits;
          which_poly = k;
          which_root = i;
        }
      }
    }
    if (hits == 1) return AlgebraicNumber::root_of(candidates[which_poly], which_root);
    if (hits == 0) throw DomainError("value is not a root of any candidate polynomial");
    w /= 16;
  }
  throw DomainError("root identification did not converge");
}

// Total order on monic K-polynomials for deterministic factor lists.
bool kpoly_less(const KPoly& a, const KPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    auto ca = a.field->coords(a.c[k]), cb = b.field->coords(b.c[k]);
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

// ------------------------------------------------------------ NumberField

NumberField::NumberField(AlgebraicNumber generator)
    : CoeffField(generator.minpoly().to_q()), generator_(std::move(generator)) {}

ComplexBox NumberField::enclose(const Elem& e, const Rational& w) const {
  if (auto q = as_rational(e)) return ComplexBox::point(*q);
  Rational inner = w;
  for (int iter = 0; iter < 200; ++iter) {
    ComplexBox g = generator_.enclosure(inner);
    ComplexBox v = evaluate(e, g, bits_for(inner));
    if (v.max_width() <= w) return v;
    inner /= 16;
  }
  throw DomainError("enclosure did not converge");
}

ZPoly NumberField::minimal_polynomial(const Elem& e) const {
  if (auto q = as_rational(e)) return primitive_integer_part(QPoly({-*q, Rational(1)}));
  // Characteristic polynomial Res_Y(m(Y), T - e(Y)) is a power of the minimal polynomial.
  QPoly charpoly = interpolated_resultant(modulus(), degree(), [&](const Rational& t) { return QPoly(t) - e; });
  return primitive_integer_part(subq::squarefree_part(charpoly));
}

AlgebraicNumber NumberField::to_algebraic(const Elem& e) const {
  Elem r = reduce(e);
  if (auto q = as_rational(r)) return AlgebraicNumber::rational(*q);
  return identify_root(minimal_polynomial(r), [&](const Rational& w) { return enclose(r, w); });
}

std::string NumberField::format(const Elem& e) const {
  if (auto q = as_rational(e)) return q->get_str();
  return to_algebraic(e).to_string();
}

bool NumberField::same_as(const CoeffField& other) const {
  if (is_rational() && other.is_rational()) return true;
  auto* nf = dynamic_cast<const NumberField*>(&other);
  return nf && nf->generator_ == generator_;
}

NumberFieldPtr rational_number_field() {
  static const NumberFieldPtr q = std::make_shared<const NumberField>(AlgebraicNumber::rational(0));
  return q;
}

NumberFieldPtr make_number_field(const AlgebraicNumber& generator) {
  if (generator.is_rational()) return rational_number_field();
  return std::make_shared<const NumberField>(generator);
}

NumberFieldPtr as_number_field(const FieldPtr& field) {
  if (auto nf = std::dynamic_pointer_cast<const NumberField>(field)) return nf;
  if (field->is_rational()) return rational_number_field();
  throw DomainError("coefficient field has no embedding");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field_, a.field_->add(a.value_, b.value_));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field_, a.field_->sub(a.value_, b.value_));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field_, a.field_->mul(a.value_, b.value_));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.field_, a.field_->div(a.value_, b.value_));
}

ZPoly minimal_polynomial(const FieldElement& x) { return x.field()->minimal_polynomial(x.value()); }

// ------------------------------------------------------------ KPoly

KPoly::KPoly(FieldPtr f, std::vector<Elem> coeffs) : field(std::move(f)), c(std::move(coeffs)) {
  for (auto& e : c) e = field->reduce(e);
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

KPoly KPoly::from_q(FieldPtr f, const QPoly& p) {
  std::vector<Elem> c;
  for (const auto& q : p.coeffs()) c.emplace_back(q);
  return KPoly(std::move(f), std::move(c));
}

std::optional<QPoly> KPoly::to_q() const {
  std::vector<Rational> out;
  for (const auto& e : c) {
    auto q = CoeffField::as_rational(e);
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return QPoly(std::move(out));
}

KPoly KPoly::scale(const Elem& s) const {
  std::vector<Elem> r;
  for (const auto& e : c) r.push_back(field->mul(e, s));
  return KPoly(field, std::move(r));
}

KPoly KPoly::monic() const {
  if (is_zero()) return *this;
  return scale(field->inv(lc()));
}

KPoly KPoly::derivative() const {
  std::vector<Elem> r;
  for (std::size_t k = 1; k < c.size(); ++k) r.push_back(Rational(static_cast<long>(k)) * c[k]);
  return KPoly(field, std::move(r));
}

Elem KPoly::eval(const Elem& t) const {
  Elem acc;
  for (std::size_t k = c.size(); k-- > 0;) acc = field->add(field->mul(acc, t), c[k]);
  return acc;
}

std::string KPoly::to_string(const std::string& var) const {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::string coeff = field->format(c[k]);
    auto q = CoeffField::as_rational(c[k]);
    bool neg = q && sgn(*q) < 0;
    if (q) coeff = Rational(abs(*q)).get_str();
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    bool unit = q && abs(*q) == 1;
    if (k == 0) {
      out += coeff;
    } else {
      if (!unit) out += coeff + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

KPoly operator+(const KPoly& a, const KPoly& b) {
  std::vector<Elem> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return KPoly(a.field, std::move(r));
}

KPoly operator-(const KPoly& a, const KPoly& b) {
  std::vector<Elem> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return KPoly(a.field, std::move(r));
}

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (a.is_zero() || b.is_zero()) return KPoly(a.field, {});
  std::vector<Elem> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return KPoly(a.field, std::move(r));
}

std::pair<KPoly, KPoly> divrem(const KPoly& a, const KPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto& f = a.field;
  if (a.degree() < b.degree()) return {KPoly(f, {}), a};
  std::vector<Elem> r = a.c;
  std::vector<Elem> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  Elem inv = f->inv(b.lc());
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    r[k] = f->reduce(r[k]);
    if (r[k].is_zero()) continue;
    Elem m = f->mul(r[k], inv);
    q[k - db] = m;
    for (int j = 0; j <= db; ++j) r[k - db + j] = f->sub(r[k - db + j], f->mul(m, b.c[j]));
  }
  r.resize(static_cast<std::size_t>(db));
  return {KPoly(f, std::move(q)), KPoly(f, std::move(r))};
}

KPoly gcd(const KPoly& a, const KPoly& b) {
  KPoly x = a, y = b;
  while (!y.is_zero()) {
    KPoly r = divrem(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

KPoly inverse_mod(const KPoly& a, const KPoly& m) {
  const auto& f = m.field;
  KPoly r0 = m, r1 = divrem(a, m).second, t0(f, {}), t1 = KPoly::constant(f, Elem(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    KPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw DomainError("polynomials are not coprime");
  return divrem(t0.scale(f->inv(r0.lc())), m).second;
}

KPoly squarefree_part(const KPoly& a) {
  if (a.degree() <= 0) return a.monic();
  return divrem(a, gcd(a, a.derivative())).first.monic();
}

KPoly compose(const KPoly& p, const KPoly& q) {
  KPoly acc(p.field, {});
  for (std::size_t k = p.c.size(); k-- > 0;) acc = acc * q + KPoly::constant(p.field, p.c[k]);
  return acc;
}

QPoly norm(const KPoly& p) {
  if (p.field->is_rational()) return *p.to_q();
  const QPoly& m = p.field->modulus();
  int bound = std::max(p.degree(), 0) * m.degree();
  return interpolated_resultant(m, bound, [&](const Rational& t) {
    QPoly acc;
    for (std::size_t k = p.c.size(); k-- > 0;) acc = acc * QPoly(t) + p.c[k];
    return acc;
  });
}

namespace {

std::vector<std::pair<KPoly, int>> squarefree_decomposition(const KPoly& a) {
  std::vector<std::pair<KPoly, int>> out;
  if (a.degree() <= 0) return out;
  KPoly f = a.monic();
  KPoly d = f.derivative();
  KPoly g = gcd(f, d);
  KPoly b = divrem(f, g).first;
  KPoly c = divrem(d, g).first;
  KPoly dd = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    KPoly h = gcd(b, dd);
    if (h.degree() > 0) out.emplace_back(h, i);
    b = divrem(b, h).first;
    c = divrem(dd, h).first;
    dd = c - b.derivative();
  }
  return out;
}

std::vector<KPoly> trager(const KPoly& f) {
  if (f.degree() <= 1) return {f.monic()};
  const FieldPtr& field = f.field;
  Elem theta = QPoly::x();
  for (int attempt = 0; attempt < 64; ++attempt) {
    long s = (attempt + 1) / 2 * ((attempt % 2) ? 1 : -1);
    KPoly shift_down(field, {Rational(-s) * theta, Elem(1)});
    KPoly fs = compose(f, shift_down);
    QPoly n = norm(fs);
    if (gcd(n, n.derivative()).degree() > 0) continue;
    auto fac = factor_univariate_Q(n);
    if (fac.factors.size() == 1) return {f.monic()};
    KPoly shift_up(field, {Rational(s) * theta, Elem(1)});
    std::vector<KPoly> out;
    for (const auto& [g, mult] : fac.factors) {
      KPoly h = gcd(fs, KPoly::from_q(field, g));
      out.push_back(compose(h, shift_up).monic());
    }
    return out;
  }
  throw DomainError("no squarefree norm found");
}

}  // namespace

KFactorization factor_over_field(const KPoly& p) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  KFactorization out;
  out.unit = p.lc();
  if (p.field->is_rational()) {
    auto f = factor_univariate_Q(*p.to_q());
    for (const auto& [g, m] : f.factors) out.factors.emplace_back(KPoly::from_q(p.field, g), m);
    return out;
  }
  for (const auto& [part, mult] : squarefree_decomposition(p))
    for (auto& g : trager(part)) out.factors.emplace_back(std::move(g), mult);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (kpoly_less(a.first, b.first)) return true;
    if (kpoly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

// ------------------------------------------------------------ generated fields

std::optional<Elem> express_in(const NumberFieldPtr& field, const AlgebraicNumber& beta) {
  if (beta.is_rational()) return Elem(beta.rational_value());
  if (field->degree() % beta.degree() != 0) return std::nullopt;
  if (field->generator() == beta) return Elem(QPoly::x());
  KPoly m = KPoly::from_q(field, beta.minpoly().to_q());
  for (const auto& [g, mult] : factor_over_field(m).factors) {
    if (g.degree() != 1) continue;
    Elem b = field->neg(g.c[0]);
    AlgebraicNumber value =
        identify_root(beta.minpoly(), [&](const Rational& w) { return field->enclose(b, w); });
    if (value == beta) return b;
  }
  return std::nullopt;
}

PrimitiveElement primitive_element(const AlgebraicNumber& alpha, const AlgebraicNumber& beta) {
  PrimitiveElement out;
  if (alpha.is_rational() && beta.is_rational()) {
    out.gamma = alpha;
    out.field = rational_number_field();
    out.alpha = Elem(alpha.rational_value());
    out.beta = Elem(beta.rational_value());
    return out;
  }
  if (!alpha.is_rational()) {
    NumberFieldPtr k0 = make_number_field(alpha);
    if (auto b = express_in(k0, beta)) {
      out.gamma = alpha;
      out.field = k0;
      out.alpha = QPoly::x();
      out.beta = *b;
      return out;
    }
  }
  const QPoly ma = alpha.minpoly().to_q(), mb = beta.minpoly().to_q();
  for (int k = 1;; ++k) {
    QPoly r = interpolated_resultant(mb, ma.degree() * mb.degree(), [&](const Rational& t) {
      return compose(ma, QPoly({t, Rational(-k)}));
    });
    std::vector<ZPoly> candidates;
    for (const auto& [g, mult] : factor_univariate_Q(r).factors) candidates.push_back(primitive_integer_part(g));
    AlgebraicNumber gamma = identify_among(candidates, [&](const Rational& w) {
      return alpha.enclosure(w / 2) + Rational(k) * beta.enclosure(w / (2 * k));
    });
    if (gamma.degree() < std::max(alpha.degree(), beta.degree())) continue;
    NumberFieldPtr field = make_number_field(gamma);
    Elem theta = QPoly::x();
    // Common roots of m_beta(Y) and m_alpha(gamma - k Y).
    KPoly y = KPoly::x(field);
    KPoly shifted = compose(KPoly::from_q(field, ma), KPoly::constant(field, theta) - y.scale(Elem(k)));
    KPoly g = gcd(KPoly::from_q(field, mb), shifted);
    std::optional<Elem> b;
    if (g.degree() == 1) b = field->neg(g.c[0]);
    else b = express_in(field, beta);
    if (!b) continue;
    Elem a = field->sub(theta, field->mul(Elem(k), *b));
    if (!KPoly::from_q(field, ma).eval(a).is_zero() || !KPoly::from_q(field, mb).eval(*b).is_zero())
      throw DomainError("primitive element expressions failed verification");
    out.gamma = gamma;
    out.k = k;
    out.field = field;
    out.alpha = a;
    out.beta = *b;
    return out;
  }
}

GeneratedField field_of(const std::vector<AlgebraicNumber>& elements) {
  GeneratedField out{rational_number_field(), {}};
  for (const auto& a : elements) {
    if (auto e = express_in(out.field, a)) {
      out.generators.push_back(*e);
      continue;
    }
    PrimitiveElement pe = primitive_element(out.field->generator(), a);
    std::vector<Elem> moved;
    for (const auto& old : out.generators) {
      KPoly as_poly = KPoly::from_q(pe.field, old);
      moved.push_back(as_poly.eval(pe.alpha));
    }
    moved.push_back(pe.beta);
    out.field = pe.field;
    out.generators = std::move(moved);
  }
  return out;
}

Membership is_member(const AlgebraicNumber& beta, const std::vector<AlgebraicNumber>& generators) {
  Membership m;
  m.field = field_of(generators);
  if (auto e = express_in(m.field.field, beta)) {
    m.member = true;
    m.expression = *e;
  }
  return m;
}

}  // namespace subq
