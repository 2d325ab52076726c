#include "subq/core/polyparse.hpp"

#include <cctype>

namespace subq {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t pos) : s_(text), i_(pos) {}

  PolyExpr expr() {
    skip();
    PolyExpr lhs = term();
    while (true) {
      skip();
      if (peek('+') || peek('-')) {
        char op = s_[i_];
        std::size_t at = i_++;
        PolyExpr rhs = term();
        PolyExpr n;
        n.kind = op == '+' ? PolyExpr::Kind::Add : PolyExpr::Kind::Sub;
        n.pos = at;
        n.kids = {std::move(lhs), std::move(rhs)};
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  std::size_t position() const { return i_; }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  PolyExpr term() {
    PolyExpr lhs = unary();
    while (true) {
      skip();
      if (!peek('*')) return lhs;
      std::size_t at = i_++;
      PolyExpr rhs = unary();
      PolyExpr n;
      n.kind = PolyExpr::Kind::Mul;
      n.pos = at;
      n.kids = {std::move(lhs), std::move(rhs)};
      lhs = std::move(n);
    }
  }

  PolyExpr unary() {
    skip();
    if (peek('-')) {
      std::size_t at = i_++;
      PolyExpr n;
      n.kind = PolyExpr::Kind::Neg;
      n.pos = at;
      n.kids = {unary()};
      return n;
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    PolyExpr base = primary();
    skip();
    if (peek('^')) {
      std::size_t at = i_++;
      skip();
      Integer e = integer();
      if (e > 10000) throw ParseError("exponent too large", at);
      PolyExpr n;
      n.kind = PolyExpr::Kind::Pow;
      n.pos = at;
      n.exponent = static_cast<unsigned>(e.get_ui());
      n.kids = {std::move(base)};
      return n;
    }
    return base;
  }

  Integer integer() {
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected integer");
    return Integer(std::string(s_.substr(start, i_ - start)));
  }

  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t k = open; k < s_.size(); ++k) {
      if (s_[k] == '(') ++depth;
      if (s_[k] == ')' && --depth == 0) return k;
    }
    throw ParseError("unbalanced parenthesis", open);
  }

  PolyExpr primary() {
    skip();
    PolyExpr n;
    n.pos = i_;
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      n = expr();
      skip();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Integer den = 1;
      std::size_t save = i_;
      skip();
      if (peek('/')) {
        ++i_;
        skip();
        den = integer();
        if (den == 0) fail("zero denominator");
      } else {
        i_ = save;
      }
      n.kind = PolyExpr::Kind::Number;
      n.number = make_rational(num, den);
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string name(s_.substr(start, i_ - start));
      std::size_t after = i_;
      skip();
      if (name == "rat" || name == "root" || name == "sqrt") {
        if (!peek('(')) fail("expected '(' after " + name);
        std::size_t close = matching_paren(i_);
        std::string inner(s_.substr(i_ + 1, close - i_ - 1));
        i_ = close + 1;
        if (name == "rat") {
          try {
            n.number = parse_rational(inner);
          } catch (const ParseError& e) {
            throw ParseError(std::string("bad rat literal: ") + e.what(), start);
          }
          n.kind = PolyExpr::Kind::Number;
          return n;
        }
        n.kind = PolyExpr::Kind::Literal;
        n.text = name + "(" + inner + ")";
        return n;
      }
      i_ = after;
      n.kind = PolyExpr::Kind::Variable;
      n.text = name;
      return n;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t i_;
};

}  // namespace

PolyExpr parse_poly_expr(std::string_view text, std::size_t& pos) {
  Parser p(text, pos);
  PolyExpr e = p.expr();
  pos = p.position();
  return e;
}

PolyExpr parse_poly_expr(std::string_view text) {
  std::size_t pos = 0;
  PolyExpr e = parse_poly_expr(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
  return e;
}

void collect_literals(const PolyExpr& e, std::vector<std::string>& out) {
  if (e.kind == PolyExpr::Kind::Literal) out.push_back(e.text);
  for (const auto& k : e.kids) collect_literals(k, out);
}

void collect_variables(const PolyExpr& e, std::vector<std::string>& out) {
  if (e.kind == PolyExpr::Kind::Variable) out.push_back(e.text);
  for (const auto& k : e.kids) collect_variables(k, out);
}

std::optional<std::size_t> standard_variable_index(const std::string& name) {
  if (name == "X") return 0;
  if (name.size() >= 2 && name[0] == 'Y' && name[1] != '0') {
    std::size_t idx = 0;
    for (std::size_t k = 1; k < name.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
      idx = idx * 10 + static_cast<std::size_t>(name[k] - '0');
      if (idx > 1000) return std::nullopt;
    }
    return idx;
  }
  return std::nullopt;
}

MultiPoly build_poly(const PolyExpr& e, const PolyBuildContext& ctx) {
  using K = PolyExpr::Kind;
  switch (e.kind) {
    case K::Number:
      return MultiPoly::constant(ctx.field, ctx.nvars, Elem(e.number));
    case K::Variable:
      return MultiPoly::variable(ctx.field, ctx.nvars, ctx.variable(e.text, e.pos));
    case K::Literal:
      if (!ctx.literal) throw ParseError("algebraic literal not allowed here", e.pos);
      return MultiPoly::constant(ctx.field, ctx.nvars, ctx.literal(e.text, e.pos));
    case K::Add:
      return build_poly(e.kids[0], ctx) + build_poly(e.kids[1], ctx);
    case K::Sub:
      return build_poly(e.kids[0], ctx) - build_poly(e.kids[1], ctx);
    case K::Mul:
      return build_poly(e.kids[0], ctx) * build_poly(e.kids[1], ctx);
    case K::Pow:
      return build_poly(e.kids[0], ctx).pow(e.exponent);
    case K::Neg:
      return -build_poly(e.kids[0], ctx);
  }
  throw DomainError("corrupt expression");
}

MultiPoly parse_rational_poly(std::string_view text, std::size_t min_vars) {
  PolyExpr e = parse_poly_expr(text);
  std::vector<std::string> names;
  collect_variables(e, names);
  std::size_t nvars = min_vars;
  for (const auto& n : names) {
    auto idx = standard_variable_index(n);
    if (!idx) throw ParseError("unknown variable " + n, 0);
    nvars = std::max(nvars, *idx + 1);
  }
  PolyBuildContext ctx;
  ctx.field = rational_field();
  ctx.nvars = nvars;
  ctx.variable = [](const std::string& n, std::size_t pos) {
    auto idx = standard_variable_index(n);
    if (!idx) throw ParseError("unknown variable " + n, pos);
    return *idx;
  };
  return build_poly(e, ctx);
}

}  // namespace subq
