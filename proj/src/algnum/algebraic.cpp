#include "subq/algnum/algebraic.hpp"

#include <cctype>

#include "subq/algnum/factor_q.hpp"
#include "subq/core/polyparse.hpp"

namespace subq {

namespace {

ZPoly linear(const Rational& root) {
  return primitive_integer_part(QPoly({-root, Rational(1)}));
}

const Rational& identification_floor() {
  static const Rational f = make_rational(Integer(1), Integer(1) << 4000);
  return f;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(rational(0)) {}

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) {
  return AlgebraicNumber(RootSet::of(linear(q)), 0);
}

AlgebraicNumber AlgebraicNumber::root_of(const ZPoly& irreducible, std::size_t index) {
  ZPoly p = irreducible.primitive();
  auto rs = RootSet::of(p);
  if (index >= rs->size()) throw DomainError("root index out of range");
  return AlgebraicNumber(rs, index);
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw DomainError("algebraic number is not rational");
  return -Rational(minpoly().coeffs()[0]) / Rational(minpoly().coeffs()[1]);
}

ComplexBox AlgebraicNumber::enclosure(const Rational& max_width) const {
  if (is_rational()) return ComplexBox::point(rational_value());
  return roots_->box(index_, max_width);
}

std::pair<Rational, Rational> AlgebraicNumber::approximate(const Rational& eps) const {
  if (eps <= 0) throw DomainError("approximation tolerance must be positive");
  ComplexBox b = enclosure(eps / 8);
  return {b.re.mid(), b.im.mid()};
}

std::vector<AlgebraicNumber> AlgebraicNumber::conjugates() const {
  std::vector<AlgebraicNumber> out;
  for (std::size_t i = 0; i < roots_->size(); ++i) out.push_back(AlgebraicNumber(roots_, i));
  return out;
}

AlgebraicNumber AlgebraicNumber::complex_conjugate() const {
  return AlgebraicNumber(roots_, roots_->conjugate(index_));
}

AlgebraicNumber AlgebraicNumber::negate() const {
  if (is_rational()) return rational(-rational_value());
  std::vector<Integer> c = minpoly().coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  ZPoly p = ZPoly(std::move(c)).primitive();
  AlgebraicNumber self = *this;
  return identify_root(p, [self](const Rational& w) { return Rational(-1) * self.enclosure(w); });
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return rational_value().get_str();
  return root_literal(*this);
}

std::string root_literal(const AlgebraicNumber& a) {
  if (a.is_rational()) {
    Rational q = a.rational_value();
    return "root(" + a.minpoly().to_string("T") + "; " + ComplexBox::point(q).to_string() + ")";
  }
  return "root(" + a.minpoly().to_string("T") + "; " + a.region().to_string() + ")";
}

std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  int c = compare(a.minpoly(), b.minpoly());
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.index_ <=> b.index_;
}

AlgebraicNumber identify_root(const ZPoly& irreducible,
                              const std::function<ComplexBox(const Rational& w)>& enclose) {
  ZPoly p = irreducible.primitive();
  if (p.degree() == 1) return AlgebraicNumber::root_of(p, 0);
  auto rs = RootSet::of(p);
  Rational w = make_rational(1, 16);
  while (w > identification_floor()) {
    ComplexBox e = enclose(w);
    std::size_t hits = 0, which = 0;
    for (std::size_t i = 0; i < rs->size(); ++i) {
      if (rs->box(i, w).intersects(e)) {
        ++hits;
        which = i;
      }
    }
    if (hits == 1) return AlgebraicNumber::root_of(p, which);
    if (hits == 0) throw DomainError("value is not a root of the given polynomial");
    w /= 16;
  }
  throw DomainError("root identification did not converge");
}

AlgebraicNumber root_in_region(const QPoly& p, const ComplexBox& region) {
  if (p.degree() < 1) throw DomainError("root literal needs a nonconstant polynomial");
  if (region.re.lo > region.re.hi || region.im.lo > region.im.hi) throw DomainError("empty root region");
  auto fac = factor_univariate_Q(p);
  int total = 0;
  const QPoly* chosen = nullptr;
  for (const auto& [g, mult] : fac.factors) {
    auto c = count_roots_in_region(g, region);
    if (!c) throw DomainError("a root of the polynomial lies on the region boundary");
    total += *c;
    if (*c > 0) chosen = &g;
  }
  if (total != 1) throw DomainError("region contains " + std::to_string(total) + " roots, expected exactly one");
  ZPoly z = primitive_integer_part(*chosen);
  if (z.degree() == 1) return AlgebraicNumber::root_of(z, 0);
  auto rs = RootSet::of(z);
  Rational w = make_rational(1, 4);
  while (true) {
    std::size_t hits = 0, which = 0;
    for (std::size_t i = 0; i < rs->size(); ++i) {
      if (rs->box(i, w).intersects(region)) {
        ++hits;
        which = i;
      }
    }
    if (hits == 1) return AlgebraicNumber::root_of(z, which);
    w /= 4;
  }
}

QPoly parse_univariate(std::string_view text) {
  PolyExpr e = parse_poly_expr(text);
  PolyBuildContext ctx;
  ctx.field = rational_field();
  ctx.nvars = 1;
  ctx.variable = [](const std::string& name, std::size_t pos) -> std::size_t {
    if (name == "T" || name == "X") return 0;
    throw ParseError("unknown variable " + name + " in univariate polynomial", pos);
  };
  MultiPoly m = build_poly(e, ctx);
  std::vector<Rational> c;
  for (const auto& el : m.univariate_coeffs(0)) c.push_back(el.is_zero() ? Rational(0) : el.lc());
  return QPoly(std::move(c));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view call_body(std::string_view s, std::string_view name) {
  std::string_view rest = trim(s.substr(name.size()));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
    throw ParseError("expected " + std::string(name) + "(...)", name.size());
  return rest.substr(1, rest.size() - 2);
}

}  // namespace

AlgebraicNumber parse_algebraic(std::string_view text) {
  std::string_view s = trim(text);
  if (s.substr(0, 4) == "root") {
    std::string_view body = call_body(s, "root");
    std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) throw ParseError("root literal needs ';'", 4);
    QPoly p = parse_univariate(body.substr(0, semi));
    std::vector<Rational> nums;
    std::string_view rest = body.substr(semi + 1);
    while (true) {
      std::size_t comma = rest.find(',');
      nums.push_back(parse_rational(trim(rest.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (nums.size() != 4) throw ParseError("root literal needs four region bounds", semi);
    return root_in_region(p, {{nums[0], nums[1]}, {nums[2], nums[3]}});
  }
  if (s.substr(0, 4) == "sqrt") {
    Rational q = parse_rational(trim(call_body(s, "sqrt")));
    QPoly p({-q, Rational(0), Rational(1)});
    if (q >= 0) return root_in_region(p, {{0, q + 1}, {0, 0}});
    return root_in_region(p, {{0, 0}, {0, -q + 1}});
  }
  if (s.substr(0, 3) == "rat") return AlgebraicNumber::rational(parse_rational(trim(call_body(s, "rat"))));
  return AlgebraicNumber::rational(parse_rational(s));
}

}  // namespace subq
