#include "subq/constructor/transcript.hpp"

#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace subq {

const std::string& conventions_text() {
  static const std::string text =
      "multidegree: compare right to left, last coordinate most significant\n"
      "rational height: |p| + q; order: height, then positives by decreasing numerator, then negatives\n"
      "algebraic height: sum of |minpoly coefficients| + degree - 1\n"
      "algebraic listing: height, degree, coefficient vectors from the top by (|a|, sign), root order\n"
      "root order: real part, then imaginary part\n"
      "formula height: (m + 1) + deg f + deg g + coefficient heights\n"
      "formula listing: height, m, deg f, deg g, height of f, depth-first coefficient choice\n"
      "candidate tuples: total height, heights left to right, rational listing\n"
      "witness root: least root in root order\n"
      "stages: 3t-2 avoid Z, 3t-1 avoid complement, 3t decide c_t\n";
  return text;
}

std::string conventions_fingerprint() {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : conventions_text()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Transcript transcript_of(const ConstructionState& state) {
  Transcript t;
  t.predicate = state.config.predicate.name;
  t.initial = state.config.initial;
  t.records = state.log;
  return t;
}

namespace {

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string ys_text(const std::vector<Rational>& ys) {
  std::string s;
  for (std::size_t i = 0; i < ys.size(); ++i) s += (i ? ", " : "") + rational_text(ys[i]);
  return s;
}

std::vector<Rational> parse_ys(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& part : split_top_level(s, ','))
    if (!part.empty()) out.push_back(parse_rational(part));
  return out;
}

BasicRankable parse_rankable(const std::string& text) {
  auto parts = to_rankable(parse_formula(text));
  if (parts.size() != 1) throw ParseError("record formula must be a single basic formula", 0);
  return parts.front();
}

std::size_t parse_index(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw ParseError("bad index " + s, 0);
  return std::stoul(s);
}

// Ordered (key, value) fields of a record, shared by both renderings.
std::vector<std::pair<std::string, std::string>> fields_of(const Certificate& c) {
  std::vector<std::pair<std::string, std::string>> f{{"stage", std::to_string(c.stage)},
                                                     {"kind", to_string(c.kind)},
                                                     {"context", to_string(c.context)}};
  if (c.kind == StageKind::DecideElement) {
    f.emplace_back("element_index", std::to_string(c.element_index));
    f.emplace_back("element", c.element.to_string());
    f.emplace_back("decision", c.included ? "include" : "exclude");
    return f;
  }
  f.emplace_back("formula_index", std::to_string(c.formula_index));
  f.emplace_back("formula", to_string(c.formula));
  if (c.vacuous) {
    f.emplace_back("vacuous", "yes");
    return f;
  }
  f.emplace_back("x", rational_text(c.x));
  f.emplace_back("ys", ys_text(c.ys));
  f.emplace_back("y", c.y.to_string());
  return f;
}

Certificate record_of(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::map<std::string, std::string> m;
  for (const auto& [k, v] : fields) {
    if (m.count(k)) throw ParseError("duplicate field " + k, 0);
    m[k] = v;
  }
  auto get = [&](const std::string& k) -> const std::string& {
    auto it = m.find(k);
    if (it == m.end()) throw ParseError("missing field " + k, 0);
    return it->second;
  };
  Certificate c;
  c.stage = parse_index(get("stage"));
  c.kind = stage_kind_from_string(get("kind"));
  c.context = parse_open(get("context"));
  std::size_t expected = 3;
  if (c.kind == StageKind::DecideElement) {
    c.element_index = parse_index(get("element_index"));
    c.element = parse_algebraic(get("element"));
    const std::string& d = get("decision");
    if (d != "include" && d != "exclude") throw ParseError("decision must be include or exclude", 0);
    c.included = d == "include";
    expected += 3;
  } else {
    c.formula_index = parse_index(get("formula_index"));
    c.formula = parse_rankable(get("formula"));
    expected += 2;
    if (m.count("vacuous")) {
      if (get("vacuous") != "yes") throw ParseError("vacuous must be yes", 0);
      c.vacuous = true;
      expected += 1;
    } else {
      c.x = parse_rational(get("x"));
      c.ys = parse_ys(get("ys"));
      c.y = parse_algebraic(get("y"));
      expected += 3;
    }
  }
  if (m.size() != expected) throw ParseError("unexpected fields in record", 0);
  return c;
}

}  // namespace

std::string write_text(const Transcript& t) {
  std::ostringstream out;
  out << "# subq transcript v1\n";
  out << "conventions " << t.conventions << "\n";
  out << "predicate " << t.predicate << "\n";
  if (t.initial) out << "init " << to_string(*t.initial) << "\n";
  for (const auto& c : t.records) {
    for (const auto& [k, v] : fields_of(c)) out << k << (v.empty() ? "" : " ") << v << "\n";
    out << "end\n";
  }
  return out.str();
}

Transcript read_text(std::string_view text) {
  Transcript t;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line) || line != "# subq transcript v1") throw ParseError("missing transcript header", 0);
  ++lineno;
  std::vector<std::pair<std::string, std::string>> fields;
  bool in_record = false, have_conventions = false, have_predicate = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::size_t sp = line.find(' ');
    std::string key = line.substr(0, sp);
    std::string value = sp == std::string::npos ? "" : line.substr(sp + 1);
    try {
      if (key == "end") {
        if (!in_record) throw ParseError("'end' outside a record", 0);
        t.records.push_back(record_of(fields));
        fields.clear();
        in_record = false;
      } else if (key == "stage" && !in_record) {
        in_record = true;
        fields.emplace_back(key, value);
      } else if (in_record) {
        fields.emplace_back(key, value);
      } else if (key == "conventions" && !have_conventions) {
        t.conventions = value;
        have_conventions = true;
      } else if (key == "predicate" && !have_predicate) {
        t.predicate = value;
        have_predicate = true;
      } else if (key == "init" && !t.initial) {
        t.initial = parse_open(value);
      } else {
        throw ParseError("unexpected line '" + key + "'", 0);
      }
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (line " + std::to_string(lineno) + ")", lineno);
    }
  }
  if (in_record) throw ParseError("unterminated record", lineno);
  if (!have_conventions || !have_predicate) throw ParseError("missing conventions or predicate line", lineno);
  return t;
}

std::string write_json(const Transcript& t) {
  nlohmann::ordered_json j;
  j["format"] = "subq transcript v1";
  j["conventions"] = t.conventions;
  j["predicate"] = t.predicate;
  j["init"] = t.initial ? nlohmann::ordered_json(to_string(*t.initial)) : nlohmann::ordered_json(nullptr);
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& c : t.records) {
    nlohmann::ordered_json r;
    for (const auto& [k, v] : fields_of(c)) r[k] = v;
    j["records"].push_back(r);
  }
  return j.dump(2) + "\n";
}

Transcript read_json(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what(), 0);
  }
  try {
    if (j.at("format") != "subq transcript v1") throw ParseError("unknown transcript format", 0);
    Transcript t;
    t.conventions = j.at("conventions").get<std::string>();
    t.predicate = j.at("predicate").get<std::string>();
    if (!j.at("init").is_null()) t.initial = parse_open(j.at("init").get<std::string>());
    for (const auto& r : j.at("records")) {
      std::vector<std::pair<std::string, std::string>> fields;
      for (const auto& [k, v] : r.items()) fields.emplace_back(k, v.get<std::string>());
      t.records.push_back(record_of(fields));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad transcript JSON: ") + e.what(), 0);
  }
}

Transcript read_transcript(std::string_view text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string_view::npos && text[i] == '{') return read_json(text);
  return read_text(text);
}

Verdict verify_transcript(const Transcript& t) {
  if (t.conventions != conventions_fingerprint()) return {false, "transcript uses different conventions"};
  ZPredicate z;
  try {
    z = ZPredicate::by_name(t.predicate);
  } catch (const DomainError& e) {
    return {false, e.what()};
  }
  std::optional<BasicOpen> expected = t.initial;
  if (expected && is_empty(*expected)) return {false, "initial open set is empty"};
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const Certificate& c = t.records[i];
    std::string where = "stage " + std::to_string(c.stage) + ": ";
    if (t.initial) {
      if (c.stage != i + 1) return {false, where + "stage numbers out of sequence"};
      const std::size_t r = (c.stage - 1) % 3, idx = (c.stage - 1) / 3 + 1;
      StageKind want = r == 0 ? StageKind::AvoidZ : r == 1 ? StageKind::AvoidComplement : StageKind::DecideElement;
      if (c.kind != want) return {false, where + "stage kind does not match stage number"};
      if (c.kind == StageKind::DecideElement ? c.element_index != idx : c.formula_index != idx)
        return {false, where + "index does not match stage number"};
      if (!(c.context == *expected)) return {false, where + "context does not follow from the previous stage"};
    } else if (c.stage != 0) {
      return {false, where + "stage record without an initial open set"};
    }
    Verdict v = verify_certificate(c, z);
    if (!v.pass) return {false, where + v.reason};
    if (t.initial) expected = next_context(c);
  }
  return {};
}

}  // namespace subq
