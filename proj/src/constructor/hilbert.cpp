#include "subq/constructor/hilbert.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <functional>

#include "subq/formulas/enumeration.hpp"
#include "subq/mvfactor/mvfactor.hpp"

namespace subq {

KPoly specialize(const MultiPoly& f, const Rational& x, const std::vector<Rational>& ys) {
  MultiPoly p = f.evaluate_at(0, Elem(x));
  for (std::size_t i = 0; i < ys.size(); ++i) p = p.evaluate_at(i + 1, Elem(ys[i]));
  return KPoly(f.field(), p.univariate_coeffs(f.nvars() - 1));
}

namespace {

std::optional<AlgebraicNumber> parameter_generator(const BasicRankable& beta) {
  NumberFieldPtr k = as_number_field(beta.field());
  if (k->degree() == 1) return std::nullopt;
  return k->generator();
}

}  // namespace

SearchField search_field(const BasicRankable& beta, const BasicOpen& context) {
  std::vector<AlgebraicNumber> gens = context.includes;
  gens.insert(gens.end(), context.excludes.begin(), context.excludes.end());
  auto param = parameter_generator(beta);
  if (param) gens.push_back(*param);
  GeneratedField gf = field_of(gens);
  Elem image = param ? gf.generators.back() : Elem();
  return {gf.field, embed_poly(beta.equations.front(), gf.field, image), embed_poly(beta.inequation, gf.field, image)};
}

bool parameters_excluded(const BasicRankable& beta, const BasicOpen& context) {
  auto param = parameter_generator(beta);
  if (!param) return false;
  BasicOpen with = context;
  with.includes.push_back(*param);
  return is_empty(with);
}

CandidateStream::CandidateStream(std::size_t length) : length_(length), total_(static_cast<unsigned>(length) - 1) {}

void CandidateStream::refill() {
  pending_.clear();
  pos_ = 0;
  while (pending_.empty()) {
    ++total_;
    std::vector<unsigned> heights(length_, 1);
    std::function<void(std::size_t, unsigned)> split = [&](std::size_t i, unsigned left) {
      if (i + 1 == length_) {
        heights[i] = left;
        std::vector<Rational> cur;
        std::function<void(std::size_t)> fill = [&](std::size_t j) {
          if (j == length_) {
            pending_.push_back(cur);
            return;
          }
          for (const auto& q : rationals_of_height(heights[j])) {
            cur.push_back(q);
            fill(j + 1);
            cur.pop_back();
          }
        };
        fill(0);
        return;
      }
      for (unsigned h = 1; h + (length_ - i - 1) <= left; ++h) {
        heights[i] = h;
        split(i + 1, left - h);
      }
    };
    split(0, total_);
  }
}

std::vector<Rational> CandidateStream::next() {
  if (pos_ >= pending_.size()) refill();
  return pending_[pos_++];
}

namespace {

struct Searcher {
  const BasicRankable& beta;
  const BasicOpen& context;
  const ZPredicate& z;
  Side side;
  SearchField sf;
  int degree;

  std::optional<Certificate> test(const std::vector<Rational>& tuple) const {
    const Rational& x = tuple.front();
    if (z.contains(x) != (side == Side::InZ)) return std::nullopt;
    std::vector<Rational> ys(tuple.begin() + 1, tuple.end());
    const MultiPoly& f = beta.equations.front();
    KPoly fs = specialize(f, x, ys);
    if (fs.degree() != degree) return std::nullopt;
    KPoly gs = specialize(beta.inequation, x, ys);
    if (gs.is_zero() || divrem(gs, fs).second.is_zero()) return std::nullopt;
    if (degree > 1) {
      auto fac = factor_over_field(specialize(sf.equation, x, ys));
      if (fac.factors.size() != 1 || fac.factors.front().second != 1) return std::nullopt;
    }
    auto roots = enumerate_roots_Qbar(fs);
    AlgebraicNumber y = *std::min_element(roots.begin(), roots.end());
    BasicOpen after = context;
    after.includes.push_back(y);
    if (is_empty(after)) return std::nullopt;
    Certificate c;
    c.kind = side == Side::InZ ? StageKind::AvoidComplement : StageKind::AvoidZ;
    c.context = context;
    c.formula = beta;
    c.x = x;
    c.ys = std::move(ys);
    c.y = y;
    return c;
  }
};

}  // namespace

HilbertResult hilbert_specialize(const BasicRankable& beta, const BasicOpen& context, const ZPredicate& z, Side side,
                                 const SearchOptions& options) {
  if (beta.equations.size() != 1 || beta.quantifiers == 0)
    throw DomainError("the search needs a hypersurface formula with at least one quantifier");
  auto check = validate_hypersurface(beta);
  if (!check.valid) throw DomainError("invalid hypersurface formula: " + check.reason);
  if (is_empty(context)) throw DomainError("the context is empty");
  if (parameters_excluded(beta, context))
    throw DomainError("no field of the context contains the formula's parameters");

  Searcher s{beta, context, z, side, search_field(beta, context), beta.equations.front().degree_in(beta.quantifiers)};
  std::optional<std::size_t> budget = options.budget ? options.budget : z.default_budget;
  CandidateStream stream(beta.quantifiers);
  HilbertResult out;
  std::size_t batch = 1;
  if (options.parallel) batch = options.batch ? options.batch : 2 * static_cast<std::size_t>(omp_get_max_threads());
  while (true) {
    std::size_t n = batch;
    if (budget) {
      if (out.candidates >= *budget) throw BudgetExceeded("search budget exhausted after " + std::to_string(out.candidates) + " candidates");
      n = std::min(n, *budget - out.candidates);
    }
    std::vector<std::vector<Rational>> tuples;
    for (std::size_t i = 0; i < n; ++i) tuples.push_back(stream.next());
    std::vector<std::optional<Certificate>> results(n);
    std::vector<std::exception_ptr> errors(n);
    auto run = [&](std::size_t i) {
      try {
        results[i] = s.test(tuples[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    if (options.parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::size_t i = 0; i < n; ++i) run(i);
    } else {
      for (std::size_t i = 0; i < n; ++i) run(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      if (results[i]) {
        out.candidates += i + 1;
        out.certificate = std::move(*results[i]);
        return out;
      }
    }
    out.candidates += n;
  }
}

}  // namespace subq
