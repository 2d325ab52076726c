#include "subq/topology/topology.hpp"

#include <algorithm>

namespace subq {

namespace {

void dedup(std::vector<AlgebraicNumber>& v) {
  std::vector<AlgebraicNumber> out;
  for (auto& a : v)
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
  v = std::move(out);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool contains_all(const NumberFieldPtr& field, const std::vector<AlgebraicNumber>& xs) {
  for (const auto& x : xs)
    if (!express_in(field, x)) return false;
  return true;
}

}  // namespace

BasicOpen::BasicOpen(std::vector<AlgebraicNumber> inc, std::vector<AlgebraicNumber> exc)
    : includes(std::move(inc)), excludes(std::move(exc)) {
  dedup(includes);
  dedup(excludes);
}

Emptiness decide_emptiness(const BasicOpen& u) {
  Emptiness out;
  out.witness = field_of(u.includes);
  const std::size_t n = u.excludes.size();
  std::vector<char> inside(n, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t j = 0; j < n; ++j) inside[j] = express_in(out.witness.field, u.excludes[j]).has_value();
  for (std::size_t j = 0; j < n; ++j)
    if (inside[j]) {
      out.empty = true;
      out.offending = j;
      break;
    }
  return out;
}

bool is_empty(const BasicOpen& u) { return decide_emptiness(u).empty; }

BasicOpen extend(const BasicOpen& u, const AlgebraicNumber& a) {
  BasicOpen out = u;
  if (std::find(out.includes.begin(), out.includes.end(), a) != out.includes.end()) return out;
  out.includes.push_back(a);
  Emptiness e = decide_emptiness(out);
  if (e.empty) throw DomainError("extension by " + a.to_string() + " captures excluded " + u.excludes[*e.offending].to_string());
  return out;
}

bool same_open(const BasicOpen& a, const BasicOpen& b) {
  Emptiness ea = decide_emptiness(a), eb = decide_emptiness(b);
  if (ea.empty || eb.empty) return ea.empty && eb.empty;
  if (ea.witness.field->degree() != eb.witness.field->degree()) return false;
  if (!contains_all(ea.witness.field, b.includes)) return false;
  // a is inside b iff every exclude of b generates, over Q(includes), a field
  // holding some exclude of a.
  auto covered = [](const BasicOpen& small, const BasicOpen& big) {
    for (const auto& c : big.excludes) {
      std::vector<AlgebraicNumber> gens = small.includes;
      gens.push_back(c);
      NumberFieldPtr field = field_of(gens).field;
      bool hit = false;
      for (const auto& d : small.excludes) hit = hit || express_in(field, d).has_value();
      if (!hit) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

std::vector<BasicOpen> galois_orbit(const BasicOpen& u) {
  std::vector<AlgebraicNumber> all = u.includes;
  all.insert(all.end(), u.excludes.begin(), u.excludes.end());
  GeneratedField gf = field_of(all);
  std::vector<BasicOpen> out;
  for (const auto& conj : gf.field->generator().conjugates()) {
    NumberFieldPtr image = make_number_field(conj);
    std::vector<AlgebraicNumber> inc, exc;
    for (std::size_t i = 0; i < all.size(); ++i)
      (i < u.includes.size() ? inc : exc).push_back(image->to_algebraic(gf.generators[i]));
    BasicOpen v(std::move(inc), std::move(exc));
    bool seen = false;
    for (const auto& w : out) seen = seen || same_open(w, v);
    if (!seen) out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      std::string part = trim(text.substr(start, i - start));
      if (!part.empty() || i < text.size()) out.push_back(part);
      start = i + 1;
      continue;
    }
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
  }
  return out;
}

BasicOpen parse_open(std::string_view text) {
  std::vector<AlgebraicNumber> inc, exc;
  bool seen_inc = false, seen_exc = false;
  for (const auto& section : split_top_level(text, ';')) {
    if (section.empty()) continue;
    std::size_t colon = section.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'inc:' or 'exc:'", 0);
    std::string key = trim(std::string_view(section).substr(0, colon));
    std::vector<AlgebraicNumber>* target = nullptr;
    if (key == "inc" && !seen_inc) {
      target = &inc;
      seen_inc = true;
    } else if (key == "exc" && !seen_exc) {
      target = &exc;
      seen_exc = true;
    } else {
      throw ParseError("unexpected section '" + key + "'", 0);
    }
    std::string body = section.substr(colon + 1);
    if (trim(body).empty()) continue;
    for (const auto& item : split_top_level(body, ',')) {
      if (item.empty()) throw ParseError("empty list entry", 0);
      target->push_back(parse_algebraic(item));
    }
  }
  return BasicOpen(std::move(inc), std::move(exc));
}

std::string to_string(const BasicOpen& u) {
  auto list = [](const std::vector<AlgebraicNumber>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s;
  };
  std::string out = "inc:";
  if (!u.includes.empty()) out += " " + list(u.includes);
  if (!u.excludes.empty()) out += "; exc: " + list(u.excludes);
  return out;
}

}  // namespace subq
