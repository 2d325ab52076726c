#include "subq/core/multipoly.hpp"

#include <map>

namespace subq {

namespace {

using TermMap = std::map<MultiDegree, Elem, MultiDegreeGreater>;

void require_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw DomainError("polynomials have different variable counts");
  if (!same_field(a.field(), b.field())) throw DomainError("polynomials have different coefficient fields");
}

}  // namespace

std::string default_variable_name(std::size_t index) {
  if (index == 0) return "X";
  return "Y" + std::to_string(index);
}

MultiPoly::MultiPoly(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

MultiPoly::MultiPoly(FieldPtr field, std::size_t nvars, std::vector<Term> terms)
    : field_(std::move(field)), nvars_(nvars), terms_(std::move(terms)) {
  normalize();
}

void MultiPoly::normalize() {
  TermMap acc;
  for (auto& t : terms_) {
    if (t.exp.size() != nvars_) throw DomainError("exponent vector length mismatch");
    auto [it, inserted] = acc.try_emplace(std::move(t.exp), t.coeff);
    if (!inserted) it->second = it->second + t.coeff;
  }
  terms_.clear();
  for (auto& [e, c] : acc) {
    Elem r = field_->reduce(c);
    if (!r.is_zero()) terms_.push_back({e, std::move(r)});
  }
}

MultiPoly MultiPoly::constant(FieldPtr field, std::size_t nvars, const Elem& c) {
  MultiPoly p(std::move(field), nvars);
  Elem r = p.field_->reduce(c);
  if (!r.is_zero()) p.terms_.push_back({MultiDegree(nvars, 0), r});
  return p;
}

MultiPoly MultiPoly::variable(FieldPtr field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError("variable index out of range");
  MultiDegree e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(field), nvars, Elem(1), std::move(e));
}

MultiPoly MultiPoly::monomial(FieldPtr field, std::size_t nvars, const Elem& c, MultiDegree exp) {
  if (exp.size() != nvars) throw DomainError("exponent vector length mismatch");
  MultiPoly p(std::move(field), nvars);
  Elem r = p.field_->reduce(c);
  if (!r.is_zero()) p.terms_.push_back({std::move(exp), r});
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 &&
                            std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(),
                                        [](int d) { return d == 0; }));
}

std::optional<Elem> MultiPoly::constant_value() const {
  if (terms_.empty()) return Elem();
  if (!is_constant()) return std::nullopt;
  return terms_[0].coeff;
}

int MultiPoly::total_degree() const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int d : t.exp) s += d;
    best = std::max(best, s);
  }
  return best;
}

int MultiPoly::degree_in(std::size_t v) const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) best = std::max(best, t.exp[v]);
  return best;
}

const MultiDegree& MultiPoly::multidegree() const { return leading_term().exp; }

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no multidegree");
  return terms_.front();
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scale(field_->inv(leading_coeff()));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_compatible(a, b);
  MultiPoly r(a.field_, a.nvars_);
  std::size_t i = 0, j = 0;
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && compare_multidegree(x[i].exp, y[j].exp) > 0)) {
      r.terms_.push_back(x[i++]);
    } else if (i == x.size() || compare_multidegree(x[i].exp, y[j].exp) < 0) {
      r.terms_.push_back(y[j++]);
    } else {
      Elem c = x[i].coeff + y[j].coeff;
      if (!c.is_zero()) r.terms_.push_back({x[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_compatible(a, b);
  TermMap acc;
  MultiDegree e(a.nvars_);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = s.exp[k] + t.exp[k];
      Elem c = s.coeff * t.coeff;
      auto [it, inserted] = acc.try_emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  MultiPoly r(a.field_, a.nvars_);
  for (auto& [exp, c] : acc) {
    Elem red = a.field_->reduce(c);
    if (!red.is_zero()) r.terms_.push_back({exp, std::move(red)});
  }
  return r;
}

MultiPoly MultiPoly::scale(const Elem& c) const {
  Elem red = field_->reduce(c);
  MultiPoly r(field_, nvars_);
  if (red.is_zero()) return r;
  for (const auto& t : terms_) r.terms_.push_back({t.exp, field_->mul(t.coeff, red)});
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(field_, nvars_, Elem(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::shift(const MultiDegree& s) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_)
    for (std::size_t k = 0; k < nvars_; ++k) t.exp[k] += s[k];
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  if (!same_field(a.field_, b.field_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t v) const {
  int d = degree_in(v);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(d + 1, 0)));
  for (const auto& t : terms_) {
    Term u = t;
    u.exp[v] = 0;
    buckets[static_cast<std::size_t>(t.exp[v])].push_back(std::move(u));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    MultiPoly p(field_, nvars_);
    p.terms_ = std::move(b);  // already sorted: removing one coordinate keeps relative order within a bucket
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::leading_coeff_in(std::size_t v) const {
  if (is_zero()) return *this;
  return coefficients_in(v).back();
}

MultiPoly MultiPoly::from_coefficients_in(std::size_t v, const std::vector<MultiPoly>& cs, FieldPtr field,
                                          std::size_t nvars) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    for (const auto& t : cs[k].terms()) {
      Term u = t;
      u.exp[v] += static_cast<int>(k);
      terms.push_back(std::move(u));
    }
  }
  return MultiPoly(std::move(field), nvars, std::move(terms));
}

MultiPoly MultiPoly::substitute(std::size_t v, const MultiPoly& value) const {
  auto cs = coefficients_in(v);
  MultiPoly acc(field_, nvars_);
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * value + cs[k];
  return acc;
}

MultiPoly MultiPoly::evaluate_at(std::size_t v, const Elem& value) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term u = t;
    u.coeff = field_->mul(t.coeff, field_->pow(value, static_cast<unsigned>(t.exp[v])));
    u.exp[v] = 0;
    terms.push_back(std::move(u));
  }
  return MultiPoly(field_, nvars_, std::move(terms));
}

Elem MultiPoly::evaluate(const std::vector<Elem>& point) const {
  if (point.size() != nvars_) throw DomainError("point has wrong dimension");
  Elem acc;
  for (const auto& t : terms_) {
    Elem m = t.coeff;
    for (std::size_t k = 0; k < nvars_; ++k)
      if (t.exp[k]) m = field_->mul(m, field_->pow(point[k], static_cast<unsigned>(t.exp[k])));
    acc += m;
  }
  return field_->reduce(acc);
}

std::vector<Elem> MultiPoly::univariate_coeffs(std::size_t v) const {
  std::vector<Elem> out(static_cast<std::size_t>(std::max(degree_in(v) + 1, 0)));
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < nvars_; ++k)
      if (k != v && t.exp[k] != 0) throw DomainError("polynomial is not univariate in the requested variable");
    out[static_cast<std::size_t>(t.exp[v])] = t.coeff;
  }
  return out;
}

MultiPoly MultiPoly::from_univariate(FieldPtr field, std::size_t nvars, std::size_t v,
                                     const std::vector<Elem>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    MultiDegree e(nvars, 0);
    e[v] = static_cast<int>(k);
    terms.push_back({std::move(e), coeffs[k]});
  }
  return MultiPoly(std::move(field), nvars, std::move(terms));
}

MultiPoly MultiPoly::resize(std::size_t nvars) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    for (std::size_t k = nvars; k < nvars_; ++k)
      if (t.exp[k] != 0) throw DomainError("cannot drop a variable that occurs");
    Term u{MultiDegree(nvars, 0), t.coeff};
    for (std::size_t k = 0; k < std::min(nvars, nvars_); ++k) u.exp[k] = t.exp[k];
    terms.push_back(std::move(u));
  }
  return MultiPoly(field_, nvars, std::move(terms));
}

MultiPoly MultiPoly::permute(const std::vector<std::size_t>& perm) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    Term u{MultiDegree(perm.size(), 0), t.coeff};
    for (std::size_t i = 0; i < perm.size(); ++i) u.exp[i] = t.exp[perm[i]];
    terms.push_back(std::move(u));
  }
  return MultiPoly(field_, perm.size(), std::move(terms));
}

MultiPoly MultiPoly::map_coefficients(FieldPtr target, const std::function<Elem(const Elem&)>& map) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) terms.push_back({t.exp, map(t.coeff)});
  return MultiPoly(std::move(target), nvars_, std::move(terms));
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t k) { return k < names.size() ? names[k] : default_variable_name(k); };
  std::string out;
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (t.exp[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(k);
      if (t.exp[k] > 1) mono += "^" + std::to_string(t.exp[k]);
    }
    auto q = CoeffField::as_rational(t.coeff);
    bool negative = q && sgn(*q) < 0;
    std::string coeff;
    if (q) {
      Rational mag = abs(*q);
      if (mag != 1 || mono.empty()) coeff = mag.get_str();
    } else {
      coeff = field_->format(t.coeff);
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

std::pair<MultiPoly, MultiPoly> divrem_in(const MultiPoly& f, const MultiPoly& g, std::size_t v) {
  require_compatible(f, g);
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  const auto& field = f.field();
  const std::size_t n = f.nvars();
  int dg = g.degree_in(v);
  auto lc = g.leading_coeff_in(v).constant_value();
  if (!lc) throw DomainError("leading coefficient in the division variable is not a unit");
  Elem lc_inv = field->inv(*lc);
  MultiPoly q(field, n), r = f;
  while (!r.is_zero() && r.degree_in(v) >= dg) {
    int dr = r.degree_in(v);
    MultiDegree s(n, 0);
    s[v] = dr - dg;
    MultiPoly t = r.leading_coeff_in(v).scale(lc_inv).shift(s);
    q += t;
    r -= t * g;
  }
  return {q, r};
}

MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, std::size_t v) {
  require_compatible(f, g);
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  const std::size_t n = f.nvars();
  int dg = g.degree_in(v);
  MultiPoly l = g.leading_coeff_in(v);
  int e = std::max(f.degree_in(v) - dg + 1, 0);
  MultiPoly r = f;
  while (!r.is_zero() && r.degree_in(v) >= dg) {
    MultiDegree s(n, 0);
    s[v] = r.degree_in(v) - dg;
    r = r * l - (r.leading_coeff_in(v).shift(s)) * g;
    --e;
  }
  if (e > 0) r = r * l.pow(static_cast<unsigned>(e));
  return r;
}

std::optional<MultiPoly> exact_quotient(const MultiPoly& f, const MultiPoly& g) {
  require_compatible(f, g);
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  const auto& field = f.field();
  const std::size_t n = f.nvars();
  const Term& lt = g.leading_term();
  Elem lc_inv = field->inv(lt.coeff);
  std::vector<Term> q;
  MultiPoly r = f;
  while (!r.is_zero()) {
    const Term& rt = r.leading_term();
    MultiDegree s(n);
    for (std::size_t k = 0; k < n; ++k) {
      s[k] = rt.exp[k] - lt.exp[k];
      if (s[k] < 0) return std::nullopt;
    }
    MultiPoly t = MultiPoly::monomial(field, n, field->mul(rt.coeff, lc_inv), s);
    q.push_back(t.terms().front());
    r -= t * g;
  }
  return MultiPoly(field, n, std::move(q));
}

}  // namespace subq
