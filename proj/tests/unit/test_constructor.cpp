#include <algorithm>

#include "doctest.h"
#include "subq/algnum/factor_q.hpp"
#include "subq/constructor/transcript.hpp"
#include "subq/formulas/enumeration.hpp"
#include "subq/mvfactor/mvfactor.hpp"

using namespace subq;

namespace {

AlgebraicNumber A(const char* s) { return parse_algebraic(s); }
BasicRankable F(const char* s) { return to_rankable(parse_formula(s)).front(); }

ConstructionConfig golden_config() {
  ConstructionConfig c;
  c.initial = parse_open("inc: sqrt(2); exc: sqrt(3)");
  return c;
}

KPoly Q(const char* s) { return KPoly::from_q(rational_field(), parse_univariate(s)); }

// Moves a polynomial into `field` coefficient by coefficient.
KPoly move_to(const KPoly& p, const NumberFieldPtr& field) {
  NumberFieldPtr k = as_number_field(p.field);
  std::vector<Elem> cs;
  for (const auto& e : p.c) cs.push_back(*express_in(field, k->to_algebraic(e)));
  return KPoly(field, cs);
}

// Product of the factors equals p, computed in a field holding everything.
bool multiplies_back(const ConstructedFactorization& f, const KPoly& p) {
  std::vector<AlgebraicNumber> gens{f.unit};
  auto add = [&](const KPoly& q) {
    NumberFieldPtr k = as_number_field(q.field);
    for (const auto& e : q.c) gens.push_back(k->to_algebraic(e));
  };
  add(p);
  for (const auto& [q, m] : f.factors) add(q);
  NumberFieldPtr big = field_of(gens).field;
  KPoly prod = KPoly::constant(big, *express_in(big, f.unit));
  for (const auto& [q, m] : f.factors)
    for (int i = 0; i < m; ++i) prod = prod * move_to(q, big);
  return prod == move_to(p, big);
}

}  // namespace

TEST_CASE("candidate order") {
  CandidateStream one(1);
  std::vector<Rational> xs;
  for (int i = 0; i < 7; ++i) xs.push_back(one.next().front());
  CHECK(xs == std::vector<Rational>{0, 1, -1, 2, Rational(1, 2), -2, Rational(-1, 2)});
  CandidateStream two(2);
  CHECK(two.next() == std::vector<Rational>{0, 0});
  CHECK(two.next() == std::vector<Rational>{0, 1});
  CHECK(two.next() == std::vector<Rational>{0, -1});
  CHECK(two.next() == std::vector<Rational>{1, 0});
  CHECK(two.next() == std::vector<Rational>{-1, 0});
}

TEST_CASE("hilbert specialization") {
  ZPredicate z = ZPredicate::integers();
  auto r = hilbert_specialize(F("E Y1 . (Y1^2 - X = 0)"), BasicOpen(), z, Side::NotInZ);
  const Certificate& c = r.certificate;
  CHECK(c.x == Rational(1, 2));
  CHECK(c.y.minpoly() == ZPoly(std::vector<Integer>{-1, 0, 2}));
  auto conj = c.y.conjugates();
  CHECK(c.y == *std::min_element(conj.begin(), conj.end()));
  CHECK(c.y.root_index() == 0);
  CHECK(r.candidates == 5);
  CHECK(verify_certificate(c, z).pass);
  CHECK(is_irreducible_Q(specialize(c.formula.equations.front(), c.x, c.ys).to_q()->monic()));

  auto lin = hilbert_specialize(F("E Y1 . (Y1 - X = 0)"), BasicOpen(), z, Side::NotInZ).certificate;
  CHECK(lin.x == Rational(1, 2));
  CHECK(lin.y == AlgebraicNumber::rational(Rational(1, 2)));
  auto in = hilbert_specialize(F("E Y1 . (Y1 - X = 0) & (X != 0)"), BasicOpen(), z, Side::InZ).certificate;
  CHECK(in.x == 1);

  // Two quantifiers: Y1 is a rational witness.
  auto two = hilbert_specialize(F("E Y1 Y2 . (Y2^2 - X*Y1 - 1 = 0)"), BasicOpen(), z, Side::NotInZ).certificate;
  CHECK(two.ys.size() == 1);
  CHECK(verify_certificate(two, z).pass);

  // Inside a context the root must keep the excludes out.
  BasicOpen u = parse_open("inc: sqrt(2); exc: sqrt(3)");
  auto ctx = hilbert_specialize(F("E Y1 . (Y1^2 - X = 0)"), u, z, Side::InZ).certificate;
  CHECK(ctx.x == -1);  // 0, 1 and 2 give reducible or degenerate fibres over Q(sqrt 2, sqrt 3)
  CHECK(verify_certificate(ctx, z).pass);

  CHECK_THROWS_AS(hilbert_specialize(F("E Y1 . (Y1^2 + X^2 = 0)"), BasicOpen(), z, Side::InZ), DomainError);
}

TEST_CASE("serial and parallel searches agree") {
  ZPredicate z = ZPredicate::integers();
  BasicOpen u = parse_open("inc: sqrt(2); exc: sqrt(3)");
  SearchOptions serial{std::nullopt, false, 1}, parallel{std::nullopt, true, 8};
  for (std::size_t t = 1; t <= 30; t += 3) {
    BasicRankable beta = enumerate_hypersurface_formulas(t);
    if (parameters_excluded(beta, u)) continue;
    for (Side side : {Side::InZ, Side::NotInZ}) {
      auto a = hilbert_specialize(beta, u, z, side, serial);
      auto b = hilbert_specialize(beta, u, z, side, parallel);
      CHECK(a.candidates == b.candidates);
      CHECK(a.certificate.x == b.certificate.x);
      CHECK(a.certificate.y == b.certificate.y);
    }
  }
}

TEST_CASE("search budget") {
  ZPredicate everything{"everything", [](const Rational&) { return true; }, 40};
  CHECK_THROWS_AS(hilbert_specialize(F("E Y1 . (Y1 - X = 0)"), BasicOpen(), everything, Side::NotInZ), BudgetExceeded);
  SearchOptions small{std::size_t{3}, true, 32};
  CHECK_THROWS_AS(hilbert_specialize(F("E Y1 . (Y1^2 - X = 0)"), BasicOpen(), ZPredicate::integers(), Side::NotInZ, small),
                  BudgetExceeded);
}

TEST_CASE("verifier mutations") {
  ZPredicate z = ZPredicate::integers();
  Certificate good = hilbert_specialize(F("E Y1 . (Y1^2 - X = 0)"), BasicOpen(), z, Side::NotInZ).certificate;

  Certificate wrong_side = good;
  wrong_side.x = 4;
  CHECK(verify_certificate(wrong_side, z).reason == "x on wrong side of Z");

  // The other root works just as well.
  Certificate other_root = good;
  other_root.y = good.y.conjugates()[1];
  CHECK(verify_certificate(other_root, z).pass);

  Certificate reducible = good;
  reducible.x = Rational(1, 4);
  CHECK(verify_certificate(reducible, z).reason == "specialized polynomial reducible over K");

  Certificate not_root = good;
  not_root.y = A("sqrt(3)");
  CHECK(verify_certificate(not_root, z).reason == "y is not a root of the specialized polynomial");

  Certificate extra = good;
  extra.ys.push_back(1);
  CHECK(verify_certificate(extra, z).reason == "wrong number of rational witnesses");

  Certificate bad_formula = good;
  bad_formula.formula = F("E Y1 . (Y1^2 + X^2 = 0)");
  CHECK_FALSE(verify_certificate(bad_formula, z).pass);

  Certificate divides = good;
  divides.formula = F("E Y1 . (Y1^2 - X = 0) & (2*Y1^2 - 1 != 0)");
  CHECK(verify_certificate(divides, z).reason == "specialized inequation divisible by the specialized equation");

  Certificate captured = good;
  captured.context = BasicOpen({}, {A("sqrt(2)")});
  CHECK_FALSE(verify_certificate(captured, z).pass);
}

TEST_CASE("construction stages") {
  ConstructionConfig cfg = golden_config();
  ConstructionState zero = run_construction(cfg, 0);
  CHECK(zero.log.empty());
  CHECK(zero.context == cfg.initial);

  ConstructionState three = run_construction(cfg, 3);
  REQUIRE(three.log.size() == 3);
  CHECK(three.log[0].kind == StageKind::AvoidZ);
  CHECK(three.log[1].kind == StageKind::AvoidComplement);
  CHECK(three.log[2].kind == StageKind::DecideElement);
  CHECK(three.log[2].element == AlgebraicNumber::rational(1));
  for (const auto& c : three.log) CHECK(verify_certificate(c, cfg.predicate).pass);
  CHECK(verify_transcript(transcript_of(three)).pass);

  std::string a = write_text(transcript_of(run_construction(cfg, 6)));
  std::string b = write_text(transcript_of(run_construction(cfg, 6)));
  CHECK(a == b);

  // Resuming gives the same records.
  ConstructionState resumed = run_construction(cfg, 3);
  for (int i = 0; i < 3; ++i) run_stage(resumed);
  CHECK(write_text(transcript_of(resumed)) == a);

  cfg.initial = parse_open("inc: sqrt(2); exc: sqrt(8)");
  CHECK_THROWS_AS(start_construction(cfg), DomainError);
}

TEST_CASE("transcript renderings") {
  ConstructionState s = run_construction(golden_config(), 6);
  Transcript t = transcript_of(s);
  std::string text = write_text(t);
  CHECK(text.rfind("# subq transcript v1\n", 0) == 0);
  CHECK(write_text(read_text(text)) == text);
  std::string json = write_json(t);
  CHECK(write_json(read_transcript(json)) == json);
  CHECK(write_text(read_json(json)) == text);
  CHECK(verify_transcript(read_transcript(json)).pass);

  Transcript moved = read_text(text);
  moved.records[3].context.excludes.push_back(A("sqrt(5)"));
  auto v = verify_transcript(moved);
  CHECK_FALSE(v.pass);
  CHECK(v.reason == "stage 4: context does not follow from the previous stage");

  Transcript flipped = read_text(text);
  flipped.records[2].included = !flipped.records[2].included;
  CHECK(verify_transcript(flipped).reason == "stage 3: decision does not match the emptiness test");

  CHECK_THROWS_AS(read_text("# subq transcript v1\nconventions x\npredicate integers\nstage 1\n"), ParseError);
  CHECK_THROWS_AS(read_text("nonsense"), ParseError);
  CHECK(conventions_fingerprint().size() == 16);
}

TEST_CASE("membership oracle") {
  ConstructionConfig cfg = golden_config();
  auto in = membership_oracle(cfg, A("sqrt(8)"));
  CHECK(in.member);
  CHECK(in.stages_run == 0);
  auto out = membership_oracle(cfg, A("sqrt(3)"));
  CHECK_FALSE(out.member);
  CHECK(out.stages_run == 0);
  CHECK_FALSE(membership_oracle(cfg, A("sqrt(6)")).member);
  CHECK(membership_oracle(cfg, A("-1/2")).member);

  // sqrt 5 enters through c_t = (-1 - sqrt 5)/2, decided at stage 57.
  ConstructionState s = start_construction(cfg);
  auto five = membership_oracle(s, A("sqrt(5)"));
  CHECK(five.member);
  CHECK(five.stages_run == 57);
  CHECK(verify_transcript(transcript_of(s)).pass);
}

TEST_CASE("factoring over the constructed field") {
  ConstructionState s = start_construction(golden_config());
  auto two = factor_over_constructed(Q("T^2 - 2"), s);
  CHECK(two.factors.size() == 2);
  CHECK(multiplies_back(two, Q("T^2 - 2")));
  auto three = factor_over_constructed(Q("T^2 - 3"), s);
  CHECK(three.factors.size() == 1);
  KPoly p = Q("(T^2 - 2)*(T^2 - 3)");
  auto both = factor_over_constructed(p, s);
  REQUIRE(both.factors.size() == 3);
  CHECK(multiplies_back(both, p));
  int linear = 0;
  for (const auto& [q, m] : both.factors) linear += q.degree() == 1;
  CHECK(linear == 2);
  auto sq = factor_over_constructed(Q("(T^2 - 3)^2*(T - 1)"), s);
  CHECK(sq.factors.size() == 2);
  CHECK(multiplies_back(sq, Q("(T^2 - 3)^2*(T - 1)")));

  NumberFieldPtr k3 = make_number_field(A("sqrt(3)"));
  KPoly over3(k3, {k3->neg(Elem(QPoly::x())), Elem(1)});
  CHECK_THROWS_AS(factor_over_constructed(over3, s), DomainError);
}
