#pragma once
// Finite substitution semantics: X ranges over rationals of height <= 8 and
// every quantified variable over the same set.

#include <functional>
#include <random>
#include <vector>

#include "subq/formulas/enumeration.hpp"
#include "subq/formulas/rankable.hpp"

namespace oracle {

inline const std::vector<subq::Rational>& small_rationals() {
  static const std::vector<subq::Rational> all = [] {
    std::vector<subq::Rational> out;
    for (unsigned h = 1; h <= 8; ++h)
      for (const auto& q : subq::rationals_of_height(h)) out.push_back(q);
    return out;
  }();
  return all;
}

inline bool holds_at(const subq::Formula& f, std::vector<subq::Elem>& point) {
  using K = subq::Formula::Kind;
  switch (f.kind) {
    case K::Equation:
      return f.poly.evaluate(point).is_zero();
    case K::Inequation:
      return !f.poly.evaluate(point).is_zero();
    case K::And:
      for (const auto& k : f.kids)
        if (!holds_at(k, point)) return false;
      return true;
    case K::Or:
      for (const auto& k : f.kids)
        if (holds_at(k, point)) return true;
      return false;
    case K::Exists: {
      std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == f.bound.size()) return holds_at(f.kids.front(), point);
        for (const auto& q : small_rationals()) {
          point[f.bound[i]] = subq::Elem(q);
          if (rec(i + 1)) return true;
        }
        return false;
      };
      return rec(0);
    }
  }
  return false;
}

/// Indices into small_rationals() of the X values satisfying f.
inline std::vector<std::size_t> satisfied_set(const subq::Formula& f) {
  std::vector<std::size_t> out;
  const std::size_t n = f.first_atom().nvars();
  for (std::size_t i = 0; i < small_rationals().size(); ++i) {
    std::vector<subq::Elem> point(n);
    point[0] = subq::Elem(small_rationals()[i]);
    if (holds_at(f, point)) out.push_back(i);
  }
  return out;
}

inline std::vector<std::size_t> satisfied_set(const std::vector<subq::BasicRankable>& disjuncts) {
  std::vector<bool> mark(small_rationals().size(), false);
  for (const auto& b : disjuncts)
    for (auto i : satisfied_set(b.to_formula())) mark[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mark.size(); ++i)
    if (mark[i]) out.push_back(i);
  return out;
}

/// Small random existential formula over Q in X, Y1, Y2. Products and
/// Y-only inequations are common so the rewrites have work to do.
inline subq::Formula random_formula(std::mt19937_64& rng) {
  using namespace subq;
  std::uniform_int_distribution<int> coin(0, 1), c(-2, 2), pick(0, 5);
  const std::size_t n = 3;
  auto var = [&](std::size_t v) { return MultiPoly::variable(rational_field(), n, v); };
  auto num = [&](int k) { return MultiPoly::constant(rational_field(), n, Elem(Rational(k))); };
  auto linear = [&](std::size_t y) {
    MultiPoly p = var(y).scale(Elem(Rational(c(rng) == 0 ? 1 : 1 + coin(rng))));
    return p + var(0).scale(Elem(Rational(c(rng)))) + num(c(rng));
  };
  auto atom_poly = [&](std::size_t y) {
    switch (pick(rng)) {
      case 0: return linear(y);
      case 1: return linear(y) * linear(y);
      case 2: return var(y) * var(y) - var(0) + num(c(rng));
      case 3: return var(y) * var(0) + num(c(rng));
      case 4: return linear(0) * linear(y);
      default: return var(0) - num(c(rng));
    }
  };
  auto conj = [&](std::size_t y) {
    std::vector<Formula> atoms{Formula::equation(atom_poly(y))};
    if (coin(rng)) atoms.push_back(Formula::inequation(coin(rng) ? var(y) + num(c(rng)) : atom_poly(y)));
    if (coin(rng)) atoms.push_back(Formula::equation(atom_poly(y)));
    Formula body = atoms.size() == 1 ? atoms.front() : Formula::conjunction(atoms);
    return Formula::exists({y}, body);
  };
  if (coin(rng)) return conj(1);
  return Formula::disjunction({conj(1), conj(2)});
}

}  // namespace oracle
