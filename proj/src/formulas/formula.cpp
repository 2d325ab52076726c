#include "subq/formulas/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "subq/core/polyparse.hpp"

namespace subq {

namespace {

struct RawNode {
  Formula::Kind kind = Formula::Kind::Equation;
  PolyExpr lhs, rhs;
  std::vector<std::pair<std::string, std::size_t>> bound;  // name, position
  std::vector<RawNode> kids;
  std::size_t pos = 0;
};

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  RawNode parse() {
    RawNode n = disj();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected input after formula", pos_);
    return n;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  RawNode join(Formula::Kind kind, std::vector<RawNode> kids, std::size_t pos) {
    if (kids.size() == 1) return std::move(kids.front());
    RawNode n;
    n.kind = kind;
    n.kids = std::move(kids);
    n.pos = pos;
    return n;
  }

  RawNode disj() {
    std::size_t start = pos_;
    std::vector<RawNode> kids{conj()};
    while (peek('|')) {
      ++pos_;
      kids.push_back(conj());
    }
    return join(Formula::Kind::Or, std::move(kids), start);
  }

  RawNode conj() {
    std::size_t start = pos_;
    std::vector<RawNode> kids{unary()};
    while (peek('&')) {
      ++pos_;
      kids.push_back(unary());
    }
    return join(Formula::Kind::And, std::move(kids), start);
  }

  bool at_quantifier() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != 'E') return false;
    return pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  RawNode unary() {
    skip();
    std::size_t start = pos_;
    if (at_quantifier()) {
      ++pos_;
      RawNode n;
      n.kind = Formula::Kind::Exists;
      n.pos = start;
      while (!peek('.')) {
        skip();
        std::size_t vstart = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (vstart == pos_) throw ParseError("expected a variable or '.'", pos_);
        n.bound.emplace_back(std::string(text_.substr(vstart, pos_ - vstart)), vstart);
      }
      if (n.bound.empty()) throw ParseError("quantifier without variables", pos_);
      ++pos_;
      n.kids.push_back(conj());
      return n;
    }
    if (!peek('(')) throw ParseError("expected '(' or 'E'", pos_);
    ++pos_;
    std::size_t inner = pos_;
    std::optional<PolyExpr> lhs;
    try {
      std::size_t p = inner;
      lhs = parse_poly_expr(text_, p);
      pos_ = p;
    } catch (const ParseError&) {
      lhs.reset();
    }
    if (lhs) {
      skip();
      bool neq = text_.substr(pos_, 2) == "!=";
      if (neq || (pos_ < text_.size() && text_[pos_] == '=')) {
        pos_ += neq ? 2 : 1;
        RawNode n;
        n.kind = neq ? Formula::Kind::Inequation : Formula::Kind::Equation;
        n.lhs = std::move(*lhs);
        n.rhs = parse_poly_expr(text_, pos_);
        n.pos = start;
        expect(')');
        return n;
      }
    }
    pos_ = inner;
    RawNode n = disj();
    expect(')');
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Builder {
  PolyBuildContext ctx;
  std::vector<bool> in_scope, ever_bound;

  Formula build(const RawNode& n) {
    switch (n.kind) {
      case Formula::Kind::Equation:
      case Formula::Kind::Inequation: {
        MultiPoly p = build_poly(n.lhs, ctx) - build_poly(n.rhs, ctx);
        return n.kind == Formula::Kind::Equation ? Formula::equation(std::move(p)) : Formula::inequation(std::move(p));
      }
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        std::vector<Formula> kids;
        for (const auto& k : n.kids) kids.push_back(build(k));
        return n.kind == Formula::Kind::And ? Formula::conjunction(std::move(kids))
                                            : Formula::disjunction(std::move(kids));
      }
      case Formula::Kind::Exists: {
        std::vector<std::size_t> vars;
        for (const auto& [name, pos] : n.bound) {
          auto idx = standard_variable_index(name);
          if (!idx) throw ParseError("unknown variable " + name, pos);
          if (*idx == 0) throw ParseError("X is free and cannot be quantified", pos);
          if (ever_bound[*idx]) throw ParseError("variable " + name + " bound twice", pos);
          ever_bound[*idx] = true;
          vars.push_back(*idx);
        }
        for (auto v : vars) in_scope[v] = true;
        Formula body = build(n.kids.front());
        for (auto v : vars) in_scope[v] = false;
        return Formula::exists(std::move(vars), std::move(body));
      }
    }
    throw DomainError("unreachable");
  }
};

std::string print(const Formula& f);

std::string print_kid(const Formula& k, Formula::Kind parent) {
  bool wrap = false;
  if (parent == Formula::Kind::And) wrap = !k.is_atom();
  if (parent == Formula::Kind::Or) wrap = k.kind == Formula::Kind::Or;
  std::string s = print(k);
  return wrap ? "(" + s + ")" : s;
}

std::string print(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Equation:
      return "(" + f.poly.to_string() + " = 0)";
    case Formula::Kind::Inequation:
      return "(" + f.poly.to_string() + " != 0)";
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::string out;
      for (const auto& k : f.kids) {
        if (!out.empty()) out += f.kind == Formula::Kind::And ? " & " : " | ";
        out += print_kid(k, f.kind);
      }
      return out;
    }
    case Formula::Kind::Exists: {
      std::string out = "E";
      for (auto v : f.bound) out += " " + default_variable_name(v);
      const Formula& body = f.kids.front();
      std::string b = print(body);
      if (body.kind == Formula::Kind::Or) b = "(" + b + ")";
      return out + " . " + b;
    }
  }
  return {};
}

struct LiteralField {
  NumberFieldPtr field;
  std::map<std::string, Elem> images;
};

LiteralField resolve_literals(const std::vector<std::pair<std::string, std::size_t>>& literals,
                              const NumberFieldPtr& declared) {
  std::map<std::string, AlgebraicNumber> values;
  for (const auto& [lit, pos] : literals) {
    if (values.count(lit)) continue;
    try {
      values.emplace(lit, parse_algebraic(lit));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad parameter ") + lit + ": " + e.what(), pos);
    }
  }
  NumberFieldPtr field;
  std::map<std::string, Elem> images;
  if (declared) {
    field = declared;
    for (const auto& [lit, pos] : literals) {
      auto e = express_in(field, values.at(lit));
      if (!e) throw ParseError("parameter " + lit + " is not in the declared field", pos);
      images[lit] = *e;
    }
  } else {
    std::vector<AlgebraicNumber> gens;
    for (const auto& [lit, a] : values)
      if (!a.is_rational()) gens.push_back(a);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) {
      field = rational_number_field();
      for (const auto& [lit, a] : values) images[lit] = Elem(a.rational_value());
    } else {
      GeneratedField gf = field_of(gens);
      field = gf.field;
      for (const auto& [lit, a] : values) {
        if (a.is_rational()) {
          images[lit] = Elem(a.rational_value());
        } else {
          auto at = std::lower_bound(gens.begin(), gens.end(), a);
          images[lit] = gf.generators[static_cast<std::size_t>(at - gens.begin())];
        }
      }
    }
  }

  return {field, images};
}

}  // namespace

const MultiPoly& Formula::first_atom() const {
  if (is_atom()) return poly;
  for (const auto& k : kids)
    if (k.is_atom() || !k.kids.empty()) return k.first_atom();
  throw DomainError("formula without atoms");
}

Formula parse_formula(std::string_view text, const NumberFieldPtr& declared) {
  RawNode raw = FormulaParser(text).parse();

  std::size_t nvars = 1;
  std::vector<std::pair<std::string, std::size_t>> literals;
  auto note_var = [&](const std::string& name, std::size_t pos) {
    auto idx = standard_variable_index(name);
    if (!idx) throw ParseError("unknown variable " + name, pos);
    nvars = std::max(nvars, *idx + 1);
  };
  std::function<void(const RawNode&)> scan = [&](const RawNode& n) {
    for (const auto& [name, pos] : n.bound) note_var(name, pos);
    if (n.kind == Formula::Kind::Equation || n.kind == Formula::Kind::Inequation) {
      for (const PolyExpr* e : {&n.lhs, &n.rhs}) {
        std::vector<std::string> names, lits;
        collect_variables(*e, names);
        collect_literals(*e, lits);
        for (const auto& name : names) note_var(name, n.pos);
        for (auto& l : lits) literals.emplace_back(std::move(l), n.pos);
      }
    }
    for (const auto& k : n.kids) scan(k);
  };
  scan(raw);

  auto [field, images] = resolve_literals(literals, declared);

  Builder b;
  b.ctx.field = field;
  b.ctx.nvars = nvars;
  b.in_scope.assign(nvars, false);
  b.ever_bound.assign(nvars, false);
  b.in_scope[0] = true;
  b.ctx.variable = [&b](const std::string& name, std::size_t pos) {
    auto idx = standard_variable_index(name);
    if (!idx) throw ParseError("unknown variable " + name, pos);
    if (!b.in_scope[*idx]) throw ParseError("unbound variable " + name, pos);
    return *idx;
  };
  b.ctx.literal = [&images](const std::string& lit, std::size_t pos) {
    auto it = images.find(lit);
    if (it == images.end()) throw ParseError("unknown parameter " + lit, pos);
    return it->second;
  };
  return b.build(raw);
}

std::string to_string(const Formula& f) { return print(f); }

bool same_values(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms().size() != b.terms().size()) return false;
  bool same = same_field(a.field(), b.field());
  NumberFieldPtr ka = same ? nullptr : as_number_field(a.field());
  NumberFieldPtr kb = same ? nullptr : as_number_field(b.field());
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    const Term& s = a.terms()[i];
    const Term& t = b.terms()[i];
    const std::size_t n = std::max(s.exp.size(), t.exp.size());
    for (std::size_t v = 0; v < n; ++v)
      if ((v < s.exp.size() ? s.exp[v] : 0) != (v < t.exp.size() ? t.exp[v] : 0)) return false;
    if (same ? !(s.coeff == t.coeff) : !(ka->to_algebraic(s.coeff) == kb->to_algebraic(t.coeff))) return false;
  }
  return true;
}

bool same_structure(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.bound != b.bound || a.kids.size() != b.kids.size()) return false;
  if (a.is_atom() && !same_values(a.poly, b.poly)) return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!same_structure(a.kids[i], b.kids[i])) return false;
  return true;
}

}  // namespace subq

namespace subq {

std::vector<MultiPoly> parse_polynomials(const std::vector<std::string>& texts, const NumberFieldPtr& declared) {
  std::vector<PolyExpr> exprs;
  std::vector<std::pair<std::string, std::size_t>> literals;
  std::size_t nvars = 1;
  for (const auto& t : texts) {
    exprs.push_back(parse_poly_expr(t));
    std::vector<std::string> names, lits;
    collect_variables(exprs.back(), names);
    collect_literals(exprs.back(), lits);
    for (const auto& name : names) {
      auto idx = standard_variable_index(name);
      if (!idx) throw ParseError("unknown variable " + name, 0);
      nvars = std::max(nvars, *idx + 1);
    }
    for (auto& l : lits) literals.emplace_back(std::move(l), 0);
  }
  auto [field, images] = resolve_literals(literals, declared);
  PolyBuildContext ctx;
  ctx.field = field;
  ctx.nvars = nvars;
  ctx.variable = [](const std::string& name, std::size_t pos) {
    auto idx = standard_variable_index(name);
    if (!idx) throw ParseError("unknown variable " + name, pos);
    return *idx;
  };
  ctx.literal = [&images](const std::string& lit, std::size_t pos) {
    auto it = images.find(lit);
    if (it == images.end()) throw ParseError("unknown parameter " + lit, pos);
    return it->second;
  };
  std::vector<MultiPoly> out;
  for (const auto& e : exprs) out.push_back(build_poly(e, ctx));
  return out;
}

MultiPoly parse_polynomial(std::string_view text, const NumberFieldPtr& declared) {
  return parse_polynomials({std::string(text)}, declared).front();
}

}  // namespace subq
