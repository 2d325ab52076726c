#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "subq/core/polyparse.hpp"
#include "subq/mvfactor/mvfactor.hpp"

using namespace subq;

namespace {

MultiPoly P(const char* s, std::size_t nvars = 2) { return parse_rational_poly(s, nvars); }

std::size_t factor_count(const Factorization& f) {
  std::size_t n = 0;
  for (const auto& [g, m] : f.factors) n += static_cast<std::size_t>(m);
  return n;
}

bool has_factor(const Factorization& f, const MultiPoly& g) {
  for (const auto& [h, m] : f.factors)
    if (h == g.monic()) return true;
  return false;
}

void check_factorization(const MultiPoly& f) {
  Factorization fac = factor_multivariate(f);
  CHECK(fac.expand(f.nvars()) == f);
  for (const auto& [g, m] : fac.factors) {
    CHECK(g.leading_coeff() == Elem(1));
    CHECK(factor_multivariate(g).is_irreducible());
  }
}

MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int degree) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, degree);
  std::vector<Term> terms;
  for (int k = 0; k < 4; ++k) {
    MultiDegree e(nvars, 0);
    int budget = degree;
    for (std::size_t v = 0; v < nvars; ++v) {
      e[v] = std::uniform_int_distribution<int>(0, budget)(rng);
      budget -= e[v];
    }
    terms.push_back({e, Elem(Rational(coeff(rng)))});
  }
  MultiPoly p(rational_field(), nvars, std::move(terms));
  return p.is_constant() ? p + MultiPoly::variable(rational_field(), nvars, 0) : p;
}

// Monic product of (T - root) enclosed to width w; each coefficient box must
// contain the corresponding exact coefficient.
bool roots_multiply_back(const KPoly& p, const std::vector<AlgebraicNumber>& roots) {
  NumberFieldPtr K = as_number_field(p.field);
  Rational w(1, Integer(1) << 40);
  std::vector<ComplexBox> acc{ComplexBox::point(1)};
  for (const auto& r : roots) {
    ComplexBox z = r.enclosure(w);
    std::vector<ComplexBox> next(acc.size() + 1, ComplexBox::point(0));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] = next[k + 1] + acc[k];
      next[k] = next[k] - z * acc[k];
    }
    acc = std::move(next);
  }
  KPoly m = p.monic();
  if (acc.size() != m.c.size()) return false;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    ComplexBox c = K->enclose(m.c[k], w);
    ComplexBox lo = acc[k] - c;
    Rational slack(1, Integer(1) << 20);
    if (lo.re.lo > slack || lo.re.hi < -slack || lo.im.lo > slack || lo.im.hi < -slack) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("multivariate gcd and squarefree parts") {
  MultiPoly a = P("(X + Y1)^2 * (X - 1)"), b = P("(X + Y1) * (X*Y1 + 2)");
  CHECK(gcd(a, b) == P("X + Y1"));
  // Monic means leading coefficient 1 in the multidegree order, where Y1 outranks X.
  CHECK(gcd(P("X^2 - Y1^2"), P("X^3 - Y1^3")) == P("Y1 - X"));
  CHECK(gcd(P("X"), P("Y1")).is_constant());
  CHECK(content_in(P("X*Y1 + X"), 1) == P("X"));
  auto sq = squarefree_decomposition(P("3*(X + Y1)^2 * (X - 1) * Y1^3"));
  REQUIRE(sq.size() == 3);
  CHECK(sq[0].first == P("X - 1"));
  CHECK(sq[1].first == P("X + Y1"));
  CHECK(sq[2].first == P("Y1"));
}

TEST_CASE("factorization over Q") {
  Factorization d = factor_multivariate(P("X^2 - Y1^2"));
  REQUIRE(d.factors.size() == 2);
  CHECK(has_factor(d, P("X - Y1")));
  CHECK(has_factor(d, P("X + Y1")));

  // X^2 + Y1^2 against the degree-1 ansatz.
  CHECK_FALSE(oracle::quadric_splits_over_Q(0, 1, 0, 0, 0));
  CHECK(factor_multivariate(P("X^2 + Y1^2")).is_irreducible());
  CHECK_FALSE(oracle::quadric_splits_over_Q(0, -1, 0, 0, -1));
  CHECK(factor_multivariate(P("X^2 - Y1^2 - 1")).is_irreducible());
  CHECK(oracle::quadric_splits_over_Q(0, -1, 0, 0, 0));

  MultiPoly u = P("Y1 - X^2"), v = P("Y1 + X");
  Factorization r = factor_multivariate(u * v);
  REQUIRE(r.factors.size() == 2);
  CHECK(has_factor(r, u));
  CHECK(has_factor(r, v));

  check_factorization(P("2*X*Y1 + 2*X"));
  check_factorization(P("(X + Y1)^2 * (X - 1) * (Y1^2 + X)^3"));
  check_factorization(P("(X + Y1 + Y2) * (X*Y2 - Y1^2) * (Y2 + 1)", 3));
  check_factorization(P("(X^2 + X*Y1 + Y1^2 + 1) * (X^3 - Y1^2 + 2)"));
  CHECK(factor_count(factor_multivariate(P("(X^2 - 2*Y1^2) * (X^2 + Y1^2)"))) == 2);
  CHECK_THROWS_AS(factor_multivariate(MultiPoly(rational_field(), 2)), DomainError);
}

TEST_CASE("factorization of random products") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t nvars = trial % 3 == 2 ? 3 : 2;
    MultiPoly a = random_poly(rng, nvars, 2), b = random_poly(rng, nvars, 3);
    MultiPoly f = a * b;
    Factorization fa = factor_multivariate(a), fb = factor_multivariate(b), ff = factor_multivariate(f);
    CHECK(ff.expand(nvars) == f);
    CHECK(factor_count(ff) == factor_count(fa) + factor_count(fb));
    for (const auto& [g, m] : ff.factors) CHECK(factor_multivariate(g).is_irreducible());
  }
}

TEST_CASE("factorization over a number field") {
  NumberFieldPtr K = make_number_field(parse_algebraic("sqrt(2)"));
  MultiPoly f = embed_poly(P("X^2 - 2*Y1^2"), K, Elem(QPoly::x()));
  Factorization fac = factor_multivariate(f);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.expand(2) == f);
  MultiPoly X = MultiPoly::variable(K, 2, 0), Y = MultiPoly::variable(K, 2, 1);
  MultiPoly s2Y = Y.scale(Elem(QPoly::x()));
  CHECK(has_factor(fac, X - s2Y));
  CHECK(has_factor(fac, X + s2Y));
  CHECK(factor_multivariate(embed_poly(P("X^2 - 3*Y1^2"), K, Elem(QPoly::x()))).is_irreducible());
}

TEST_CASE("absolute irreducibility") {
  CHECK(is_absolutely_irreducible(P("X + Y1")).absolutely_irreducible);
  CHECK(is_absolutely_irreducible(P("X + 3*Y1 + 2*Y2 - 1", 3)).absolutely_irreducible);

  auto circle = is_absolutely_irreducible(P("X^2 + Y1^2"));
  CHECK_FALSE(circle.absolutely_irreducible);
  REQUIRE(circle.extension);
  CHECK(circle.extension->degree() == 2);
  CHECK(circle.extension->generator().minpoly() == ZPoly({1, 0, 1}));
  CHECK(circle.witness.factors.size() == 2);
  for (const auto& [g, m] : circle.witness.factors) CHECK(g.total_degree() == 1);
  CHECK(circle.witness.expand(2) == embed_poly(P("X^2 + Y1^2"), circle.extension, Elem(QPoly::x())));

  CHECK(is_absolutely_irreducible(P("X^2 - Y1^2 - 1")).absolutely_irreducible);
  CHECK(is_absolutely_irreducible(P("Y1^2 - X^3 - X")).absolutely_irreducible);
  CHECK(is_absolutely_irreducible(P("Y1^2 - X")).absolutely_irreducible);
  CHECK(is_absolutely_irreducible(P("Y1^2 - X^2 * Y2", 3)).absolutely_irreducible);

  auto twisted = is_absolutely_irreducible(P("X^2 - 2*Y1^2"));
  CHECK_FALSE(twisted.absolutely_irreducible);
  CHECK(twisted.extension->degree() == 2);

  auto quartic = is_absolutely_irreducible(P("X^4 + Y1^4"));
  CHECK_FALSE(quartic.absolutely_irreducible);
  CHECK(quartic.witness.expand(2).total_degree() == 4);

  CHECK_THROWS_AS(is_absolutely_irreducible(P("3")), DomainError);
  CHECK_THROWS_AS(is_absolutely_irreducible(MultiPoly(rational_field(), 2)), DomainError);
}

TEST_CASE("absolute irreducibility is consistent with factoring over K") {
  for (const char* s : {"X^2 - Y1^2", "X*Y1", "X^2 + Y1^2", "X^3 - Y1^2", "(X + 1)^2", "X^2*Y1 + Y1^3 + 1",
                        "X^4 - 4*Y1^4", "X^2 + 2*X*Y1 + Y1^2 - 2"}) {
    MultiPoly f = P(s);
    bool over_k = factor_multivariate(f).is_irreducible();
    auto abs = is_absolutely_irreducible(f);
    if (!over_k) CHECK_FALSE(abs.absolutely_irreducible);
    if (abs.absolutely_irreducible) CHECK(over_k);
    if (!abs.absolutely_irreducible) {
      CHECK(abs.witness.expand(2).total_degree() == f.total_degree());
      CHECK(factor_count(abs.witness) >= 2);
    }
  }
}

TEST_CASE("roots over the algebraic closure") {
  auto r = enumerate_roots_Qbar(KPoly::from_q(rational_field(), parse_univariate("T^2 - 2")));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == parse_algebraic("root(T^2 - 2; -2, -1, 0, 0)"));
  CHECK(r[1] == parse_algebraic("sqrt(2)"));

  auto ones = enumerate_roots_Qbar(KPoly::from_q(rational_field(), parse_univariate("(T - 1)^2")));
  REQUIRE(ones.size() == 2);
  CHECK(ones[0] == AlgebraicNumber::rational(1));
  CHECK(ones[1] == AlgebraicNumber::rational(1));

  NumberFieldPtr K = make_number_field(parse_algebraic("sqrt(2)"));
  KPoly p(K, {Elem(QPoly(std::vector<Rational>{0, -1})), Elem(0), Elem(1)});  // T^2 - sqrt(2)
  auto q = enumerate_roots_Qbar(p);
  REQUIRE(q.size() == 2);
  // Oracle: the roots satisfy Res_Y(Y^2 - 2, T^2 - Y) = T^4 - 2.
  for (const auto& x : q) CHECK(x.minpoly() == ZPoly({-2, 0, 0, 0, 1}));
  CHECK(q[0] != q[1]);
  CHECK(roots_multiply_back(p, q));

  KPoly cubic = KPoly::from_q(K, parse_univariate("(T^2 - 2) * (T^3 - T - 1)"));
  auto c = enumerate_roots_Qbar(cubic);
  CHECK(c.size() == 5);
  CHECK(roots_multiply_back(cubic, c));
  CHECK_THROWS_AS(enumerate_roots_Qbar(KPoly(K, {})), DomainError);
}
