#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "subq/constructor/transcript.hpp"
#include "subq/formulas/rankable.hpp"
#include "subq/mvfactor/mvfactor.hpp"
#include "subq/varieties/varieties.hpp"

using namespace subq;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::optional<std::size_t> budget;
  std::size_t stages = 0;
  bool seedless = false;
  int jobs = 0;
  std::optional<int> approx;
};

Globals G;

bool json_out() { return G.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string decimal(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = q * Rational(scale);
  Integer n = scaled.get_num() / scaled.get_den();
  if (abs(Rational(scaled - Rational(n))) * 2 >= 1) n += sgn(scaled);
  bool neg = n < 0;
  std::string s = Integer(abs(n)).get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (neg ? "-" : "") + s;
}

// `  ~ 1.4142` when --approx is set.
std::string approx(const AlgebraicNumber& a) {
  if (!G.approx) return "";
  Rational eps = 1;
  for (int i = 0; i <= *G.approx; ++i) eps /= 10;
  auto [re, im] = a.approximate(eps);
  std::string s = "  ~ " + decimal(re, *G.approx);
  if (im != 0) s += (im > 0 ? " + " : " - ") + decimal(abs(im), *G.approx) + "i";
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Json rank_json(const Rank& r) {
  Json degs = Json::array();
  for (const auto& d : r.degrees.items()) degs.push_back(d);
  return Json{{"m", r.quantifiers}, {"e", r.dimension}, {"degrees", degs}};
}

std::string factor_line(const MultiPoly& p, int m) {
  return "(" + p.to_string() + ")" + (m > 1 ? "^" + std::to_string(m) : "");
}

Json factors_json(const Factorization& f) {
  Json out = Json::array();
  for (const auto& [p, m] : f.factors) out.push_back(Json{{"factor", p.to_string()}, {"multiplicity", m}});
  return out;
}

std::string field_name(const FieldPtr& f) {
  NumberFieldPtr k = as_number_field(f);
  return k->degree() == 1 ? "Q" : "Q(" + k->generator().to_string() + ")";
}

// ------------------------------------------------------------ commands

int cmd_rank(const std::string& text) {
  auto parts = to_rankable(parse_formula(text));
  RankMultiset r = rank(parts);
  if (json_out()) {
    Json ds = Json::array();
    for (const auto& b : parts) ds.push_back(Json{{"formula", to_string(b)}, {"rank", rank_json(rank(b))}});
    emit(Json{{"disjuncts", ds}, {"rank", parts.size() == 1 ? to_string(rank(parts[0])) : to_string(r)}});
  } else {
    std::cout << (parts.size() == 1 ? to_string(rank(parts[0])) : to_string(r)) << "\n";
  }
  return 0;
}

int cmd_normalize(const std::string& text) {
  auto parts = to_rankable(parse_formula(text));
  if (json_out()) {
    Json ds = Json::array();
    for (const auto& b : parts) ds.push_back(to_string(b));
    emit(Json{{"disjuncts", ds}});
  } else {
    for (const auto& b : parts) std::cout << to_string(b) << "\n";
  }
  return 0;
}

int cmd_absirred(const std::string& text) {
  MultiPoly f = parse_polynomial(text);
  AbsoluteIrreducibility r = is_absolutely_irreducible(f);
  if (json_out()) {
    Json j{{"absolutely_irreducible", r.absolutely_irreducible}};
    if (!r.absolutely_irreducible) {
      j["field"] = field_name(r.extension);
      j["factors"] = factors_json(r.witness);
    }
    emit(j);
    return 0;
  }
  if (r.absolutely_irreducible) {
    std::cout << "yes\n";
    return 0;
  }
  std::cout << "no\nfield: " << field_name(r.extension) << "\n";
  if (G.approx && r.extension->degree() > 1) std::cout << "generator: " << approx(r.extension->generator()).substr(2) << "\n";
  for (const auto& [p, m] : r.witness.factors) std::cout << "factor: " << factor_line(p, m) << "\n";
  return 0;
}

int cmd_factor(const std::string& text, const std::string& field) {
  MultiPoly f = parse_polynomial(text);
  if (!field.empty()) {
    NumberFieldPtr k = as_number_field(f.field());
    std::vector<AlgebraicNumber> gens{parse_algebraic(field)};
    if (k->degree() > 1) gens.push_back(k->generator());
    f = parse_polynomial(text, field_of(gens).field);
  }
  Factorization fac = factor_multivariate(f);
  std::string content = as_number_field(fac.field)->format(fac.content);
  if (json_out()) {
    emit(Json{{"field", field_name(fac.field)}, {"content", content}, {"factors", factors_json(fac)}});
    return 0;
  }
  std::cout << "field: " << field_name(fac.field) << "\ncontent: " << content << "\n";
  for (const auto& [p, m] : fac.factors) std::cout << "factor: " << factor_line(p, m) << "\n";
  return 0;
}

int cmd_dim(const std::string& gens, const std::string& open) {
  std::vector<std::string> texts;
  for (const auto& g : split_top_level(gens, ','))
    if (!g.empty()) texts.push_back(g);
  if (!open.empty()) texts.push_back(open);
  if (texts.empty()) throw UsageError("no polynomials given");
  auto polys = parse_polynomials(texts);
  int d;
  if (!open.empty()) {
    MultiPoly g = polys.back();
    polys.pop_back();
    d = dim_open(polys, g);
  } else {
    d = dim_affine(IdealPresentation(polys.front().field(), polys.front().nvars(), polys));
  }
  if (json_out())
    emit(Json{{"dimension", d}});
  else
    std::cout << d << "\n";
  return 0;
}

int cmd_member(const std::string& alg, const std::string& in) {
  AlgebraicNumber a = parse_algebraic(alg);
  std::vector<AlgebraicNumber> gens;
  for (const auto& g : split_top_level(in, ','))
    if (!g.empty()) gens.push_back(parse_algebraic(g));
  Membership m = is_member(a, gens);
  std::string expr = m.member ? m.expression.to_string("theta") : "";
  if (json_out()) {
    Json j{{"member", m.member}, {"theta", m.field.field->generator().to_string()}};
    if (m.member) j["expression"] = expr;
    emit(j);
  } else if (m.member) {
    std::cout << "yes: " << expr << "\n";
  } else {
    std::cout << "no\n";
  }
  return 0;
}

int cmd_orbit(const std::string& uspec) {
  auto orbit = galois_orbit(parse_open(uspec));
  if (json_out()) {
    Json a = Json::array();
    for (const auto& u : orbit) a.push_back(to_string(u));
    emit(Json{{"size", orbit.size()}, {"orbit", a}});
  } else {
    for (const auto& u : orbit) std::cout << to_string(u) << "\n";
  }
  return 0;
}

SearchOptions search_options() {
  SearchOptions o;
  o.budget = G.budget;
  return o;
}

std::string render(const Transcript& t) { return json_out() ? write_json(t) : write_text(t); }

int cmd_hilbert(const std::string& text, const std::string& context, const std::string& side, const std::string& out) {
  auto parts = to_rankable(parse_formula(text));
  if (parts.size() != 1) throw DomainError("the formula must be a single basic formula");
  Side s = side == "inZ" ? Side::InZ : Side::NotInZ;
  HilbertResult r = hilbert_specialize(parts.front(), parse_open(context), ZPredicate::integers(), s, search_options());
  const Certificate& c = r.certificate;
  Transcript t;
  t.records.push_back(c);
  if (!out.empty()) write_file(out, render(t));
  std::string ys;
  for (std::size_t i = 0; i < c.ys.size(); ++i) ys += (i ? ", " : "") + c.ys[i].get_str();
  if (json_out()) {
    emit(Json{{"x", c.x.get_str()}, {"ys", ys}, {"y", c.y.to_string()}, {"candidates", r.candidates}});
  } else {
    std::cout << "x: " << c.x.get_str() << "\nys: " << ys << "\ny: " << c.y.to_string() << approx(c.y)
              << "\ncandidates: " << r.candidates << "\n";
  }
  return 0;
}

int cmd_construct(const std::string& init, const std::string& out) {
  ConstructionConfig cfg;
  cfg.initial = parse_open(init);
  cfg.search = search_options();
  ConstructionState s = run_construction(cfg, G.stages);
  write_file(out, render(transcript_of(s)));
  if (json_out()) {
    emit(Json{{"stages", s.stage}, {"context", to_string(s.context)}, {"out", out}});
  } else {
    std::cout << "stages: " << s.stage << "\ncontext: " << to_string(s.context) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  Verdict v = verify_transcript(read_transcript(read_file(path)));
  if (json_out())
    emit(Json{{"pass", v.pass}, {"reason", v.reason}});
  else
    std::cout << (v.pass ? "pass" : "fail: " + v.reason) << "\n";
  return v.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact existential-formula ranks, absolute irreducibility, Hilbert specialization and field construction"};
  app.set_version_flag("--version", "subq 1.0 conventions " + conventions_fingerprint());
  app.require_subcommand(1);
  app.add_option("--format", G.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", G.budget, "Candidate budget for specialization searches");
  app.add_flag("--seedless", G.seedless, "Reserved; no randomness is used");
  app.add_option("--jobs", G.jobs, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  app.add_option("--approx", G.approx, "Annotate algebraic numbers with this many decimals")->check(CLI::Range(0, 60));

  std::string text, text2, field, open, in, context, side, out, init, path;
  std::function<int()> action;

  auto* rank_cmd = app.add_subcommand("rank", "Rank of a formula")->fallthrough();
  rank_cmd->add_option("formula", text)->required();
  rank_cmd->callback([&] { action = [&] { return cmd_rank(text); }; });

  auto* norm_cmd = app.add_subcommand("normalize", "Rankable disjuncts of a formula")->fallthrough();
  norm_cmd->add_option("formula", text)->required();
  norm_cmd->callback([&] { action = [&] { return cmd_normalize(text); }; });

  auto* abs_cmd = app.add_subcommand("absirred", "Absolute irreducibility")->fallthrough();
  abs_cmd->add_option("poly", text)->required();
  abs_cmd->callback([&] { action = [&] { return cmd_absirred(text); }; });

  auto* fac_cmd = app.add_subcommand("factor", "Factorization over a number field")->fallthrough();
  fac_cmd->add_option("poly", text)->required();
  fac_cmd->add_option("--field", field, "Extra generator of the coefficient field");
  fac_cmd->callback([&] { action = [&] { return cmd_factor(text, field); }; });

  auto* dim_cmd = app.add_subcommand("dim", "Dimension of V(gens) or V(gens) minus V(g)")->fallthrough();
  dim_cmd->add_option("gens", text)->required();
  dim_cmd->add_option("--open", open, "Inequation polynomial g");
  dim_cmd->callback([&] { action = [&] { return cmd_dim(text, open); }; });

  auto* mem_cmd = app.add_subcommand("member", "Membership in a generated field")->fallthrough();
  mem_cmd->add_option("alg", text)->required();
  mem_cmd->add_option("--in", in, "Generators, comma separated")->required();
  mem_cmd->callback([&] { action = [&] { return cmd_member(text, in); }; });

  auto* orb_cmd = app.add_subcommand("orbit", "Galois orbit of a basic open set")->fallthrough();
  orb_cmd->add_option("uspec", text)->required();
  orb_cmd->callback([&] { action = [&] { return cmd_orbit(text); }; });

  auto* hil_cmd = app.add_subcommand("hilbert", "Specialization search for one formula")->fallthrough();
  hil_cmd->add_option("formula", text)->required();
  hil_cmd->add_option("--context", context, "U-spec of the context");
  hil_cmd->add_option("--side", side, "Where x lies")->required()->check(CLI::IsMember({"inZ", "notinZ"}));
  hil_cmd->add_option("--out", out, "Certificate file");
  hil_cmd->callback([&] { action = [&] { return cmd_hilbert(text, context, side, out); }; });

  auto* con_cmd = app.add_subcommand("construct", "Run the stage construction")->fallthrough();
  con_cmd->add_option("--init", init, "Initial U-spec")->required();
  con_cmd->add_option("--stages", G.stages, "Number of stages")->required();
  con_cmd->add_option("--out", out, "Transcript file")->required();
  con_cmd->callback([&] { action = [&] { return cmd_construct(init, out); }; });

  auto* ver_cmd = app.add_subcommand("verify", "Check a transcript or certificate file")->fallthrough();
  ver_cmd->add_option("path", path)->required();
  ver_cmd->callback([&] { action = [&] { return cmd_verify(path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (G.jobs > 0) omp_set_num_threads(G.jobs);
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
