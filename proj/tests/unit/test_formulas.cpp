#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "subq/core/polyparse.hpp"
#include "subq/formulas/enumeration.hpp"
#include "subq/formulas/rankable.hpp"
#include "subq/mvfactor/mvfactor.hpp"
#include "support/formula_oracle.hpp"

using namespace subq;

namespace {

MultiPoly P(const char* s, std::size_t nvars) { return parse_rational_poly(s, nvars); }

BasicRankable B(std::size_t m, std::vector<const char*> eqs, const char* g) {
  std::vector<MultiPoly> fs;
  for (const char* f : eqs) fs.push_back(P(f, m + 1));
  return BasicRankable(m, fs, P(g, m + 1));
}

Rank R(std::size_t m, int e, std::vector<MultiDegree> degs) { return Rank{m, e, MultiDegreeMultiset(std::move(degs))}; }

// Random formula over Q or Q(sqrt 2), built directly as a tree.
Formula random_tree(std::mt19937_64& rng, const NumberFieldPtr& K, int depth, std::size_t& next_var) {
  std::uniform_int_distribution<int> kind(0, 4), c(-3, 3), deg(0, 2);
  const std::size_t n = 4;
  auto poly = [&] {
    std::vector<Term> terms;
    for (int i = 0; i < 3; ++i) {
      MultiDegree e(n, 0);
      e[0] = deg(rng);
      e[1 + static_cast<std::size_t>(rng() % 3)] = deg(rng);
      Elem coeff = Elem(Rational(c(rng)));
      if (K->degree() > 1 && rng() % 2) coeff = K->reduce(coeff * QPoly(std::vector<Rational>{0, 1}));
      terms.push_back({e, coeff});
    }
    MultiPoly p(K, n, std::move(terms));
    return p.is_zero() ? MultiPoly::variable(K, n, 0) : p;
  };
  int k = depth == 0 ? kind(rng) % 2 : kind(rng);
  switch (k) {
    case 0: return Formula::equation(poly());
    case 1: return Formula::inequation(poly());
    case 2: return Formula::conjunction({random_tree(rng, K, depth - 1, next_var), random_tree(rng, K, depth - 1, next_var)});
    case 3: return Formula::disjunction({random_tree(rng, K, depth - 1, next_var), random_tree(rng, K, depth - 1, next_var)});
    default: {
      Formula body = random_tree(rng, K, depth - 1, next_var);
      if (next_var > 3) return body;
      return Formula::exists({next_var++}, body);
    }
  }
}

// Every Yk in the formula sits under a quantifier for it.
bool closed(const Formula& f, std::vector<bool> scope) {
  if (f.is_atom()) {
    for (std::size_t v = 1; v < f.poly.nvars(); ++v)
      if (f.poly.uses_variable(v) && !scope[v]) return false;
    return true;
  }
  for (auto v : f.bound) scope[v] = true;
  for (const auto& k : f.kids)
    if (!closed(k, scope)) return false;
  return true;
}

}  // namespace

TEST_CASE("parsing and printing") {
  Formula f = parse_formula("E Y1 . (Y1^2 - X = 0)");
  CHECK(f.kind == Formula::Kind::Exists);
  CHECK(f.bound == std::vector<std::size_t>{1});
  REQUIRE(f.kids.size() == 1);
  CHECK(f.kids[0].kind == Formula::Kind::Equation);
  CHECK(f.kids[0].poly == P("Y1^2 - X", 2));
  CHECK(to_string(f) == "E Y1 . (Y1^2 - X = 0)");

  Formula g = parse_formula("(X - rat(5) = 0)");
  CHECK(g.kind == Formula::Kind::Equation);
  CHECK(g.poly == P("X - 5", 1));

  Formula h = parse_formula("E Y1 . ((Y1 = 0) | (X = 0)) & (X != 1)");
  CHECK(to_string(h) == "E Y1 . ((Y1 = 0) | (X = 0)) & (X - 1 != 0)");
  CHECK(same_structure(parse_formula(to_string(h)), h));

  Formula s = parse_formula("(X^2 - sqrt(2)*X = 0)");
  CHECK(as_number_field(s.poly.field())->degree() == 2);
  CHECK(same_structure(parse_formula(to_string(s)), s));

  CHECK_THROWS_AS(parse_formula("(Y1 = 0)"), ParseError);
  CHECK_THROWS_AS(parse_formula("E Y1 . (Y1 = 0) & E Y1 . (Y1 = 1)"), ParseError);
  CHECK_THROWS_AS(parse_formula("E X . (X = 0)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(X = 0"), ParseError);
  CHECK_THROWS_AS(parse_formula("(X = 0) &"), ParseError);
  CHECK_THROWS_AS(parse_formula("(X + sqrt(3) = 0)", make_number_field(parse_algebraic("sqrt(2)"))), ParseError);
  CHECK_NOTHROW(parse_formula("(X + sqrt(8) = 0)", make_number_field(parse_algebraic("sqrt(2)"))));
  try {
    parse_formula("(X = 0) (X = 1)");
    FAIL("accepted trailing input");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("random formulas round-trip through the printer") {
  std::mt19937_64 rng(11);
  NumberFieldPtr root2 = make_number_field(parse_algebraic("sqrt(2)"));
  int done = 0;
  while (done < 200) {
    std::size_t next_var = 1;
    Formula f = random_tree(rng, done % 2 ? root2 : rational_number_field(), 3, next_var);
    if (!closed(f, std::vector<bool>(4, false))) continue;
    Formula back = parse_formula(to_string(f));
    INFO(to_string(f));
    CHECK(same_structure(back, f));
    CHECK(to_string(back) == to_string(f));
    ++done;
  }
}

TEST_CASE("conversion to rankable form") {
  auto a = to_rankable(parse_formula("E Y1 . (Y1 - X = 0) & (Y1 != 0) & (X != 0)"));
  REQUIRE(a.size() == 1);
  CHECK(a[0].quantifiers == 1);
  CHECK(a[0].equations == std::vector<MultiPoly>{P("Y1 - X", 2)});
  CHECK(a[0].inequation == P("X*Y1", 2));

  auto b = to_rankable(parse_formula("E Y1 . ((Y1 = 0) | (X = 0))"));
  REQUIRE(b.size() == 2);
  CHECK(b[0].quantifiers == 1);
  CHECK(b[1].quantifiers == 0);
  CHECK(b[1].equations == std::vector<MultiPoly>{P("X", 1)});
  CHECK(b[1].inequation == P("1", 1));

  // Constant atoms are decided.
  CHECK(to_rankable(parse_formula("(1 = 0) | (X = 2)")).size() == 1);
  auto trivial = to_rankable(parse_formula("(0 = 0)"));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].equations.empty());
  CHECK(to_string(trivial[0]) == "(1 != 0)");
}

TEST_CASE("rank") {
  auto r1 = rank(to_rankable(parse_formula("(X - rat(5) = 0)")));
  CHECK(to_string(r1) == "[(0, 0, [(1)])]");
  for (int c = -4; c <= 4; ++c) {
    auto b = to_rankable(parse_formula(("(X - " + std::to_string(c) + " = 0)").c_str()));
    CHECK(compare_rank(rank(b[0]), R(0, 0, {{1}})) == 0);
  }
  Rank zero = rank(BasicRankable(0, {}, P("1", 1)));
  CHECK(zero.dimension == 1);
  CHECK(compare_rank(R(0, 0, {{1}}), zero) < 0);
  CHECK(to_string(rank(to_rankable(parse_formula("E Y1 . (Y1^2 - X = 0)"))[0])) == "(1, 1, [(0, 2)])");
  CHECK(rank(B(1, {"Y1 - X", "Y1 + X"}, "X")).dimension == -1);

  CHECK(compare_rank(R(0, 2, {{3}, {3}}), R(1, 0, {{1}})) < 0);
  CHECK(compare_rank(R(1, 0, {{1, 0}}), R(1, 0, {{1, 0}, {0, 1}})) < 0);
  RankMultiset small({R(0, 0, {{1}})}), big({R(0, 0, {{1}}), R(0, 0, {{1}})});
  CHECK(compare_formula_rank(small, big) < 0);
}

TEST_CASE("rank order is total on small triples") {
  std::vector<MultiDegree> base{{1, 0}, {0, 1}, {2, 0}};
  std::vector<std::vector<MultiDegree>> multisets{{}};
  for (std::size_t i = 0; i < 3; ++i) {
    multisets.push_back({base[i]});
    for (std::size_t j = i; j < 3; ++j) multisets.push_back({base[i], base[j]});
  }
  std::vector<Rank> all;
  for (std::size_t m = 0; m <= 2; ++m)
    for (int e = -1; e <= 2; ++e)
      for (const auto& ms : multisets) all.push_back(R(m, e, ms));
  // Independent comparator straight from the definitions.
  auto key = [](const Rank& r) {
    std::vector<MultiDegree> d = r.degrees.items();
    std::vector<std::vector<int>> rev;
    for (auto e : d) rev.push_back(std::vector<int>(e.rbegin(), e.rend()));
    std::sort(rev.rbegin(), rev.rend());
    return std::make_tuple(r.quantifiers, r.dimension, rev);
  };
  for (const auto& a : all)
    for (const auto& b : all) {
      auto c = compare_rank(a, b);
      CHECK((c < 0) == (key(a) < key(b)));
      CHECK((c == 0) == (key(a) == key(b)));
    }
}

TEST_CASE("forgetting inequation variables") {
  auto out = forget_inequation_vars(B(2, {"Y1 - X"}, "Y2"));
  REQUIRE(out.size() == 1);
  CHECK(to_string(out[0]) == "E Y1 . (Y1 - X = 0) & (1 != 0)");
  auto same = forget_inequation_vars(B(1, {"Y1 - X"}, "Y1"));
  REQUIRE(same.size() == 1);
  CHECK(same_values(same[0], B(1, {"Y1 - X"}, "Y1")));
  auto two = forget_inequation_vars(B(2, {"Y1^2 - X"}, "X*Y2 + Y1 - 1"));
  REQUIRE(two.size() == 2);
  for (const auto& b : two) CHECK(b.quantifiers == 1);
}

TEST_CASE("splitting reducible equations") {
  auto b = B(1, {"Y1^2 - X^2"}, "1");
  auto out = split_reducible(b);
  REQUIRE(out.size() == 2);
  std::set<std::string> got{to_string(out[0]), to_string(out[1])};
  CHECK(got == std::set<std::string>{"E Y1 . (Y1 - X = 0) & (1 != 0)", "E Y1 . (Y1 + X = 0) & (1 != 0)"});
  for (const auto& d : out) CHECK(compare_rank(rank(d), rank(b)) < 0);
  auto irr = split_reducible(B(1, {"Y1^2 - X"}, "X"));
  REQUIRE(irr.size() == 1);
  CHECK(same_values(irr[0], B(1, {"Y1^2 - X"}, "X")));
}

TEST_CASE("rewrites preserve the satisfied set") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    Formula f = oracle::random_formula(rng);
    INFO(to_string(f));
    auto expected = oracle::satisfied_set(f);
    auto rk = to_rankable(f);
    CHECK(oracle::satisfied_set(rk) == expected);
    std::vector<BasicRankable> forgotten, split;
    for (const auto& b : rk) {
      for (auto& d : forget_inequation_vars(b)) {
        if (d.quantifiers < b.quantifiers) CHECK(compare_rank(rank(d), rank(b)) < 0);
        forgotten.push_back(d);
      }
      for (auto& d : split_reducible(b)) {
        CHECK(compare_rank(rank(d), rank(b)) <= 0);
        split.push_back(d);
      }
    }
    CHECK(oracle::satisfied_set(forgotten) == expected);
    CHECK(oracle::satisfied_set(split) == expected);
  }
}

TEST_CASE("hypersurface validation") {
  CHECK(validate_hypersurface(B(1, {"Y1^2 - X"}, "1")).valid);
  auto circle = validate_hypersurface(B(1, {"X^2 + Y1^2"}, "1"));
  CHECK_FALSE(circle.valid);
  CHECK(circle.reason == "equation is not absolutely irreducible");
  auto div = validate_hypersurface(B(1, {"Y1 - X"}, "Y1 - X"));
  CHECK_FALSE(div.valid);
  CHECK(div.reason == "equation divides the inequation");
  CHECK(validate_hypersurface(B(1, {"3"}, "1")).reason == "equation is constant");
  CHECK_THROWS_AS(validate_hypersurface(B(1, {"Y1", "X"}, "1")), DomainError);
}

TEST_CASE("rational and algebraic listings") {
  CHECK(rationals_of_height(1) == std::vector<Rational>{0});
  CHECK(rationals_of_height(3) == std::vector<Rational>{2, Rational(1, 2), -2, Rational(-1, 2)});
  CHECK(rational_at(0) == 0);
  CHECK(rational_at(1) == 1);
  CHECK(rational_at(2) == -1);
  CHECK(rational_at(4) == Rational(1, 2));
  CHECK(algebraic_number_at(0) == AlgebraicNumber());
  // Every number sits at its own index, and heights never decrease.
  Integer last = 0;
  for (std::size_t i = 0; i < 60; ++i) {
    AlgebraicNumber a = algebraic_number_at(i);
    CHECK(algebraic_number_index(a) == i);
    CHECK(algebraic_height(a) >= last);
    last = algebraic_height(a);
  }
  CHECK(algebraic_height(parse_algebraic("sqrt(2)")) == 4);
  CHECK(algebraic_height(parse_algebraic("rat(-3/4)")) == 7);
}

TEST_CASE("hypersurface enumeration") {
  std::ifstream golden(std::string(SUBQ_GOLDEN_DIR) + "/hypersurface_t1.txt");
  std::string first;
  std::getline(golden, first);
  CHECK(to_string(enumerate_hypersurface_formulas(1)) == first);
  CHECK_THROWS_AS(enumerate_hypersurface_formulas(0), DomainError);

  std::vector<BasicRankable> seen;
  Integer last = 0;
  for (std::size_t t = 1; t <= 50; ++t) {
    BasicRankable b = enumerate_hypersurface_formulas(t);
    INFO(t, " ", to_string(b));
    CHECK(validate_hypersurface(b).valid);
    CHECK(formula_height(b) >= last);
    last = formula_height(b);
    for (const auto& other : seen) CHECK_FALSE(same_values(other, b));
    seen.push_back(b);
  }
  CHECK(same_values(enumerate_hypersurface_formulas(2), B(1, {"Y1"}, "X")));
}
