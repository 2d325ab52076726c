#include <random>

#include "doctest.h"
#include "subq/core/multipoly.hpp"
#include "subq/core/polyparse.hpp"
#include "subq/core/upoly.hpp"

using namespace subq;

namespace {

MultiPoly P(const char* s, std::size_t n = 2) { return parse_rational_poly(s, n); }

MultiPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    MultiDegree e(nvars);
    for (auto& d : e) d = deg(rng);
    ts.push_back({e, Elem(Rational(coef(rng)))});
  }
  return MultiPoly(rational_field(), nvars, ts);
}

// Multiset order straight from the definition: the descending sequences are
// compared position by position; running out first means smaller.
int brute_multiset_cmp(std::vector<int> a, std::vector<int> b) {
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  for (std::size_t i = 0;; ++i) {
    if (i == a.size() && i == b.size()) return 0;
    if (i == a.size()) return -1;
    if (i == b.size()) return 1;
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
}

}  // namespace

TEST_CASE("rational parsing and rounding") {
  CHECK(parse_rational("-7/2") == make_rational(-7, 2));
  CHECK(parse_rational(" 6/4 ") == make_rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1x"), ParseError);
  CHECK(rational_height(make_rational(-3, 4)) == 7);
  CHECK(round_down_dyadic(make_rational(1, 3), 4) == make_rational(5, 16));
  CHECK(round_up_dyadic(make_rational(1, 3), 4) == make_rational(6, 16));
  CHECK(floor(make_rational(-1, 2)) == -1);
}

TEST_CASE("univariate basics") {
  QPoly t = QPoly::x();
  QPoly p = t * t - QPoly(2);
  CHECK(p.to_string() == "T^2 - 2");
  auto [q, r] = divrem(t * t * t - QPoly(1), t - QPoly(1));
  CHECK(r.is_zero());
  CHECK(q == t * t + t + QPoly(1));
  CHECK(gcd(t * t - QPoly(1), t * t + QPoly(2) * t + QPoly(1)) == t + QPoly(1));
  CHECK(resultant(t * t - QPoly(2), t * t - QPoly(3)) == 1);
  CHECK(resultant(t - QPoly(2), t * t + QPoly(1)) == 5);
  auto sq = squarefree_decomposition((t - QPoly(1)) * (t - QPoly(1)) * (t + QPoly(2)));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].first == t + QPoly(2));
  CHECK(sq[1].first == t - QPoly(1));
  CHECK(sq[1].second == 2);
  CHECK(taylor_shift(t * t, 1) == t * t + QPoly(2) * t + QPoly(1));
  auto eg = extended_gcd(t * t + QPoly(1), t);
  CHECK(eg.s * (t * t + QPoly(1)) + eg.t * t == eg.g);
}

TEST_CASE("sturm counting and cauchy index") {
  QPoly t = QPoly::x();
  QPoly p = (t * t - QPoly(2)) * (t - QPoly(3));
  SturmSequence s(p);
  CHECK(s.count_all_real_roots() == 3);
  CHECK(s.count_roots(0, 2) == 1);
  CHECK(s.count_roots(-2, 3) == 3);  // (a, b] includes 3
  CHECK(s.count_roots(-2, 2) == 2);
  CHECK(SturmSequence(t * t + QPoly(1)).count_all_real_roots() == 0);
  // 1/T jumps from -inf to +inf at 0.
  CHECK(cauchy_index(QPoly(1), t, -1, 1) == 1);
  CHECK(cauchy_index(QPoly(-1), t, -1, 1) == -1);
  Rational b = root_bound(p);
  CHECK(b >= 3);
  CHECK(SturmSequence(p).count_roots(-b, b) == 3);
}

TEST_CASE("integer polynomials") {
  ZPoly z({Integer(4), Integer(-6), Integer(-2)});
  CHECK(z.content() == 2);
  CHECK(z.primitive() == ZPoly({Integer(-2), Integer(3), Integer(1)}));
  CHECK(primitive_integer_part(QPoly({make_rational(1, 2), make_rational(-1, 3)})) ==
        ZPoly({Integer(-3), Integer(2)}));
}

TEST_CASE("multidegree order") {
  CHECK(P("X").multidegree() == MultiDegree{1, 0});
  CHECK(P("X^3*Y1^2 + X*Y1^5").multidegree() == MultiDegree{1, 5});
  CHECK(compare_multidegree({5, 0}, {0, 1}) < 0);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    MultiPoly f = random_poly(rng, 3, 4, 6);
    if (f.is_zero()) continue;
    // Exhaustive scan with an independent comparator.
    MultiDegree best = f.terms()[0].exp;
    for (const auto& t : f.terms()) {
      bool bigger = false;
      for (std::size_t k = 3; k-- > 0;) {
        if (t.exp[k] != best[k]) {
          bigger = t.exp[k] > best[k];
          break;
        }
      }
      if (bigger) best = t.exp;
    }
    CHECK(f.multidegree() == best);
  }
}

TEST_CASE("multidegree of products adds leading exponents") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    MultiPoly f = random_poly(rng, 2, 3, 4), g = random_poly(rng, 2, 3, 4);
    if (f.is_zero() || g.is_zero()) continue;
    MultiDegree sum(2);
    for (int k = 0; k < 2; ++k) sum[k] = f.multidegree()[k] + g.multidegree()[k];
    CHECK((f * g).multidegree() == sum);
  }
}

TEST_CASE("multiset comparison") {
  using M = MultiDegreeMultiset;
  M a(std::vector<MultiDegree>{{2}}), b(std::vector<MultiDegree>{{2}, {1}});
  CHECK(compare_multiset(a, b) < 0);
  CHECK(compare_multiset(b, b) == 0);

  // Every multiset of size <= 3 over {0,1,2}.
  std::vector<std::vector<int>> all{{}};
  for (int size = 1; size <= 3; ++size) {
    std::vector<int> cur(size, 0);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
      if (pos == size) {
        all.push_back(cur);
        return;
      }
      for (int v = lo; v <= 2; ++v) {
        cur[pos] = v;
        rec(pos + 1, v);
      }
    };
    rec(0, 0);
  }
  auto wrap = [](const std::vector<int>& v) {
    std::vector<MultiDegree> items;
    for (int x : v) items.push_back({x});
    return M(items);
  };
  for (const auto& x : all)
    for (const auto& y : all) {
      auto c = compare_multiset(wrap(x), wrap(y));
      int got = c < 0 ? -1 : (c > 0 ? 1 : 0);
      CHECK(got == brute_multiset_cmp(x, y));
    }
  // Transitivity and a unique minimum on the full sample.
  for (const auto& x : all)
    for (const auto& y : all)
      for (const auto& z : all)
        if (compare_multiset(wrap(x), wrap(y)) < 0 && compare_multiset(wrap(y), wrap(z)) < 0)
          CHECK(compare_multiset(wrap(x), wrap(z)) < 0);
  int minima = 0;
  for (const auto& x : all) {
    bool least = true;
    for (const auto& y : all) least = least && compare_multiset(wrap(x), wrap(y)) <= 0;
    minima += least;
  }
  CHECK(minima == 1);
}

TEST_CASE("polynomial arithmetic") {
  CHECK((P("X + Y1") + P("X - Y1")) == P("2*X"));
  auto [q, r] = divrem_in(P("X^2 - Y1^2"), P("X - Y1"), 0);
  CHECK(q == P("X + Y1"));
  CHECK(r.is_zero());
  CHECK(P("-X^2 + 3/2*Y1 - 1").to_string() == "3/2*Y1 - X^2 - 1");
  CHECK(P("(X+1)^3").to_string() == "X^3 + 3*X^2 + 3*X + 1");
  CHECK(P("X*Y1^2 - X^3").to_string() == "X*Y1^2 - X^3");
  CHECK(P("rat(-5/3)*X") == P("-5/3*X"));
  CHECK_THROWS_AS(parse_rational_poly("X +"), ParseError);
  CHECK_THROWS_AS(parse_rational_poly("sqrt(2)*X"), ParseError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    MultiPoly a = random_poly(rng, 2, 4, 4), b = random_poly(rng, 2, 4, 4), c = random_poly(rng, 2, 3, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    // Round trip after making the divisor monic in X.
    MultiPoly g = b + P("X^5");
    auto [qq, rr] = divrem_in(a * g, g, 0);
    CHECK(qq == a);
    CHECK(rr.is_zero());
    if (!b.is_zero()) {
      auto eq = exact_quotient(a * b, b);
      REQUIRE(eq.has_value());
      CHECK(*eq == a);
    }
  }
  CHECK_FALSE(exact_quotient(P("X^2 + 1"), P("X + 1")).has_value());
  CHECK(pseudo_remainder(P("X^2"), P("Y1*X + 1"), 0) == P("1"));
}

TEST_CASE("substitution and coefficients") {
  MultiPoly f = P("Y1^2 - X");
  CHECK(f.evaluate_at(0, Elem(2)) == P("Y1^2 - 2"));
  CHECK(f.substitute(1, P("X")) == P("X^2 - X"));
  auto cs = f.coefficients_in(1);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == P("-X"));
  CHECK(cs[1].is_zero());
  CHECK(cs[2] == P("1"));
  CHECK(MultiPoly::from_coefficients_in(1, cs, f.field(), 2) == f);
  CHECK(f.evaluate({Elem(4), Elem(2)}).is_zero());
  CHECK(f.permute({1, 0}) == P("X^2 - Y1"));
}

TEST_CASE("field arithmetic modulo an irreducible") {
  CoeffField k(QPoly::x() * QPoly::x() - QPoly(2));
  Elem theta = QPoly::x();
  CHECK(k.mul(theta, theta) == QPoly(2));
  Elem a = QPoly({Rational(1), Rational(1)});
  CHECK(k.mul(a, k.inv(a)) == QPoly(1));
  CHECK_THROWS_AS(k.inv(Elem()), DomainError);
}
