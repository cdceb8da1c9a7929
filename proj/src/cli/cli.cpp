#include "eopkit/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "eopkit/appendix_a.hpp"
#include "eopkit/json_io.hpp"
#include "eopkit/reference.hpp"
#include "eopkit/relations.hpp"
#include "eopkit/render.hpp"
#include "eopkit/suite.hpp"

namespace eop {

namespace {

enum class Format { Human, Json, Latex };

struct Options {
  std::string format = "human";
  std::string output;
  std::string family;
  std::string type;
  int m = 0;
  int n = 0;
  std::string alpha;
  std::string beta;
  std::string claim;
  std::uint64_t seed = 1;
  int points = 5;
  SuiteConfig suite;

  // Filled after parsing from Option::count().
  bool has_m = false;
  bool has_n = false;
};

/// A parameter value: an exact rational or the symbolic indeterminate.
struct Param {
  bool symbolic = false;
  Rat value;
  std::string text;
};

Param parse_param(const std::string& text) {
  if (text.empty()) return {false, Rat(0), "0"};
  if (text == "symbolic") return {true, Rat(0), text};
  Rat v = Rat::parse(text);
  return {false, v, v.to_string()};
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Family parse_family(const std::string& text) {
  const std::string f = lower(text);
  if (f == "hermite") return Family::Hermite;
  if (f == "laguerre") return Family::Laguerre;
  if (f == "jacobi") return Family::Jacobi;
  if (text.empty()) throw SpecError(Rule::Parse, "--family is required");
  throw SpecError(Rule::Parse, "unknown family '" + text + "'");
}

EopType parse_eop_type(const std::string& text) {
  if (auto t = parse_type(text)) return *t;
  throw SpecError(Rule::Parse, "unknown type '" + text + "'");
}

int need_m(const Options& o, const std::string& what) {
  if (!o.has_m) throw SpecError(Rule::InvalidIndex, "-m is required for " + what);
  return o.m;
}

int need_n(const Options& o, const std::string& what) {
  if (!o.has_n) throw SpecError(Rule::InvalidIndex, "-n is required for " + what);
  return o.n;
}

Rat rational(const Param& p, const std::string& what) {
  if (p.symbolic) throw SpecError(Rule::UnsupportedSymbolic, what + " needs rational parameters");
  return p.value;
}

/// A computed polynomial, with the name of its symbolic parameter if any.
struct Computed {
  Poly<RatFunc> poly;
  std::string param;  // "alpha", "beta" or empty
};

/// Calls `f(alpha, beta)` over Q or over Q(t), whichever the parameters need.
template <class Fn>
Computed with_params(const Param& alpha, const Param& beta, Fn f) {
  if (alpha.symbolic && beta.symbolic)
    throw SpecError(Rule::UnsupportedSymbolic, "at most one parameter may be symbolic");
  const RatFunc t = RatFunc::t();
  if (alpha.symbolic) return {as_report_poly(f(t, RatFunc(beta.value))), "alpha"};
  if (beta.symbolic) return {as_report_poly(f(RatFunc(alpha.value), t)), "beta"};
  return {as_report_poly(f(alpha.value, beta.value)), ""};
}

std::string human(const Computed& c) {
  if (c.param.empty()) return render_human(specialize(c.poly, Rat(0)));
  return render_human(c.poly, c.param);
}

std::string latex(const Computed& c) {
  if (c.param.empty()) return render_latex(specialize(c.poly, Rat(0)));
  return render_latex(c.poly, "\\" + c.param);
}

std::vector<std::pair<std::string, std::string>> param_list(Family family, const Param& a, const Param& b) {
  std::vector<std::pair<std::string, std::string>> out;
  if (family != Family::Hermite) out.emplace_back("alpha", a.text);
  if (family == Family::Jacobi) out.emplace_back("beta", b.text);
  return out;
}

std::string family_key(Family f) { return lower(std::string(family_name(f))); }

struct Emitted {
  int code = kExitPass;
  Json json;
};

Emitted emit_poly(Format format, std::ostream& out, Family family, std::optional<EopType> type,
                  std::optional<int> m, int n, const Param& a, const Param& b, const Computed& c) {
  PolyDocument doc;
  doc.family = family_key(family);
  if (type) doc.type = std::string(type_name(*type));
  doc.m = m;
  doc.n = n;
  doc.params = param_list(family, a, b);
  doc.coeffs = c.poly;
  Json j = doc.to_json();
  switch (format) {
    case Format::Human: out << human(c) << "\n"; break;
    case Format::Json: out << j.dump(2) << "\n"; break;
    case Format::Latex: out << latex_label(family, type, m.value_or(0), n) << " = " << latex(c) << "\n"; break;
  }
  return {kExitPass, j};
}

Emitted cmd_cop(const Options& o, Format format, std::ostream& out) {
  const Family family = parse_family(o.family);
  const int n = need_n(o, "cop");
  if (n < 0) throw SpecError(Rule::InvalidIndex, "n must be nonnegative, got " + std::to_string(n));
  const Param a = parse_param(o.alpha), b = parse_param(o.beta);
  Computed c = with_params(a, b, [&](const auto& alpha, const auto& beta) {
    using F = std::decay_t<decltype(alpha)>;
    switch (family) {
      case Family::Hermite: return monic_hermite<F>(n);
      case Family::Laguerre: return monic_laguerre(n, alpha);
      case Family::Jacobi: return monic_jacobi(n, alpha, beta);
    }
    return Poly<F>();
  });
  return emit_poly(format, out, family, std::nullopt, std::nullopt, n, a, b, c);
}

Emitted cmd_eop(const Options& o, Format format, std::ostream& out) {
  const Family family = parse_family(o.family);
  EopType type = EopType::III;
  if (!o.type.empty())
    type = parse_eop_type(o.type);
  else if (family != Family::Hermite)
    throw SpecError(Rule::Parse, "--type is required for " + family_key(family));
  const EopSpec spec = EopSpec::make(family, type, need_m(o, "eop"), need_n(o, "eop"));
  const Param a = parse_param(o.alpha), b = parse_param(o.beta);
  Computed c = with_params(a, b, [&](const auto& alpha, const auto& beta) { return build_eop(spec, alpha, beta); });
  return emit_poly(format, out, family, type, spec.m(), spec.n(), a, b, c);
}

VerdictReport run_claim(const Options& o) {
  const std::string& id = o.claim;
  const Param a = parse_param(o.alpha), b = parse_param(o.beta);

  if (id.rfind("appendix-a:", 0) == 0) {
    auto which = parse_appendix_a(id.substr(11));
    if (!which) throw SpecError(Rule::Parse, "unknown claim '" + id + "'");
    const int n = need_n(o, id);
    switch (appendix_a_family(*which)) {
      case Family::Hermite: return verify_appendix_a<Rat>(*which, n);
      case Family::Laguerre:
        if (a.symbolic) return verify_appendix_a(*which, n, RatFunc::t());
        return verify_appendix_a(*which, n, a.value);
      case Family::Jacobi:
        if (a.symbolic && b.symbolic)
          throw SpecError(Rule::UnsupportedSymbolic, "at most one parameter may be symbolic");
        if (a.symbolic) return verify_appendix_a(*which, n, RatFunc::t(), RatFunc(b.value));
        if (b.symbolic) return verify_appendix_a(*which, n, RatFunc(a.value), RatFunc::t());
        return verify_appendix_a(*which, n, a.value, b.value);
    }
  }
  if (id == "appendix-b") return verify_appendix_b_identity(need_m(o, id), rational(a, id), rational(b, id));
  if (id == "link")
    return verify_link_formula(need_m(o, id), need_n(o, id), rational(a, id), rational(b, id));
  if (id.rfind("limit-jl:", 0) == 0) {
    auto type = parse_type(id.substr(9));
    if (!type) throw SpecError(Rule::Parse, "unknown claim '" + id + "'");
    return verify_limit_jacobi_to_laguerre(*type, need_m(o, id), need_n(o, id), rational(a, id));
  }
  if (id == "limit-jh3") return verify_limit_jacobi_to_hermite(need_m(o, id), need_n(o, id));
  if (id == "limit-lh3") return verify_limit_laguerre_to_hermite(need_m(o, id), need_n(o, id));
  if (id == "quad-even") return verify_quadratic_even(need_m(o, id), need_n(o, id));
  if (id == "quad-odd-special") return verify_quadratic_odd_special(need_m(o, id));
  if (id == "quad-odd-obstruction") return verify_odd_quadratic_obstruction(need_m(o, id), need_n(o, id));
  if (id == "classical-quad-even") return verify_classical_quadratic(Parity::Even, need_n(o, id));
  if (id == "classical-quad-odd") return verify_classical_quadratic(Parity::Odd, need_n(o, id));
  if (id.rfind("classical-", 0) == 0) {
    auto which = parse_classical_limit(id.substr(10));
    if (!which) throw SpecError(Rule::Parse, "unknown claim '" + id + "'");
    return verify_classical_limit(*which, need_n(o, id), rational(a, id));
  }
  if (id == "monic-conversion")
    return verify_monic_conversion(parse_family(o.family), need_n(o, id), rational(a, id), rational(b, id));
  if (id == "symmetry-j12")
    return verify_jacobi_symmetry(need_m(o, id), need_n(o, id), rational(a, id), rational(b, id));
  if (id == "degeneration-m0") {
    const Family family = parse_family(o.family);
    const EopType type = o.type.empty() ? EopType::III : parse_eop_type(o.type);
    return verify_m0_degeneration(family, type, need_n(o, id), rational(a, id), rational(b, id));
  }
  if (id == "laguerre-x3-forms") return verify_laguerre_x3_forms(need_m(o, id), need_n(o, id));
  throw SpecError(Rule::Parse, "unknown claim '" + id + "'");
}

std::string status_word(VerdictStatus s) {
  std::string w(status_name(s));
  std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return std::toupper(c); });
  return w;
}

std::string context_text(const VerdictReport& r) {
  if (r.context.empty()) return "";
  std::string s = " [";
  for (std::size_t i = 0; i < r.context.size(); ++i) {
    if (i) s += ", ";
    s += r.context[i].first + "=" + r.context[i].second;
  }
  return s + "]";
}

void print_report(std::ostream& out, const VerdictReport& r, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  out << pad << status_word(r.status) << " " << r.claim_id << context_text(r) << "\n";
  if (r.status != VerdictStatus::Pass) {
    out << pad << "  left:  " << render_human(r.left, "t") << "\n";
    out << pad << "  right: " << render_human(r.right, "t") << "\n";
  }
  for (const auto& s : r.sub_claims) print_report(out, s, depth + 1);
}

void print_report_latex(std::ostream& out, const VerdictReport& r) {
  out << "% " << r.claim_id << ": " << status_word(r.status) << context_text(r) << "\n";
  out << render_latex(r.left, "t") << (r.left == r.right ? " = " : " \\neq ") << render_latex(r.right, "t") << "\n";
  for (const auto& s : r.sub_claims) print_report_latex(out, s);
}

Emitted cmd_verify(const Options& o, Format format, std::ostream& out, std::ostream& err) {
  const VerdictReport r = run_claim(o);
  Json j = report_to_json(r);
  switch (format) {
    case Format::Human: print_report(out, r, 0); break;
    case Format::Json: out << j.dump(2) << "\n"; break;
    case Format::Latex: print_report_latex(out, r); break;
  }
  int code = kExitMismatch;
  if (r.passed()) {
    code = kExitPass;
  } else if (r.status == VerdictStatus::ZeroPrefactor) {
    err << "error: " << rule_name(Rule::DegenerateParameters)
        << ": the claimed multiplier vanishes at these parameters, nothing to compare\n";
    code = kExitUsage;
  }
  return {code, j};
}

Emitted cmd_table(const Options& o, Format format, std::ostream& out) {
  if (o.points < 1) throw SpecError(Rule::InvalidIndex, "--points must be at least 1");
  const auto rows = reference_table(o.seed, o.points);
  std::size_t matched = 0;
  Json jrows = Json::array();
  for (const auto& row : rows) {
    if (row.matches()) ++matched;
    Json jr;
    jr["kind"] = row.kind == ReferenceRow::Kind::Polynomial ? "polynomial" : "limit";
    jr["label"] = row.label;
    jr["match"] = row.matches();
    jr["checks"] = row.checks.size();
    if (!row.human.empty()) jr["human"] = row.human;
    jr["latex"] = row.latex;
    Json failures = Json::array();
    for (const auto& c : row.checks)
      if (!c.passed()) failures.push_back(report_to_json(c));
    jr["failures"] = failures;
    jrows.push_back(jr);
  }
  Json j;
  j["seed"] = o.seed;
  j["points"] = o.points;
  j["rows"] = jrows;
  j["matched"] = matched;
  j["total"] = rows.size();

  switch (format) {
    case Format::Human: {
      std::optional<ReferenceRow::Kind> section;
      for (const auto& row : rows) {
        if (row.kind != section) {
          section = row.kind;
          out << (row.kind == ReferenceRow::Kind::Polynomial ? "reference polynomials" : "reference limits") << "\n";
        }
        std::string label = row.label;
        label.resize(std::max<std::size_t>(label.size(), 14), ' ');
        std::string detail = row.human;
        if (detail.empty()) detail = "(" + std::to_string(row.checks.size()) + " checks)";
        out << "  " << (row.matches() ? "MATCH   " : "MISMATCH") << "  " << label << "  " << detail << "\n";
      }
      out << matched << " of " << rows.size() << " rows match\n";
      break;
    }
    case Format::Json: out << j.dump(2) << "\n"; break;
    case Format::Latex:
      for (const auto& row : rows) out << row.latex << " % " << (row.matches() ? "MATCH" : "MISMATCH") << "\n";
      break;
  }
  return {matched == rows.size() ? kExitPass : kExitMismatch, j};
}

Emitted cmd_suite(const Options& o, Format format, std::ostream& out) {
  if (format == Format::Latex) throw SpecError(Rule::Parse, "latex output is not available for suite");
  SuiteConfig config = o.suite;
  config.seed = o.seed;
  const auto sections = run_suite(config);
  std::size_t claims = 0, passed = 0;
  const VerdictReport* first = nullptr;
  Json jsections = Json::array();
  for (const auto& s : sections) {
    claims += s.claims();
    passed += s.passed();
    if (!first) first = s.first_failure();
    jsections.push_back(Json{{"name", s.name}, {"claims", s.claims()}, {"passed", s.passed()}});
  }
  Json j;
  j["seed"] = config.seed;
  j["max_m"] = config.max_m;
  j["max_n"] = config.max_n;
  j["samples"] = config.samples;
  j["sections"] = jsections;
  j["claims"] = claims;
  j["passed"] = passed;
  j["first_failure"] = first ? report_to_json(*first) : Json(nullptr);

  if (format == Format::Json) {
    out << j.dump(2) << "\n";
  } else {
    out << "suite seed=" << config.seed << " max-m=" << config.max_m << " max-n=" << config.max_n
        << " samples=" << config.samples << "\n";
    for (const auto& s : sections) {
      std::string name = s.name;
      name.resize(12, ' ');
      out << "  " << name << s.claims() << " claims, " << s.passed() << " passed\n";
    }
    if (first) {
      out << (claims - passed) << " of " << claims << " claims failed\n";
      out << "first failure:\n";
      print_report(out, *first, 1);
    } else {
      out << "all " << claims << " claims passed\n";
    }
  }
  return {first ? kExitMismatch : kExitPass, j};
}

void add_selectors(CLI::App* sub, Options& o, bool with_type, bool with_m) {
  sub->add_option("--family", o.family, "hermite, laguerre or jacobi");
  if (with_type) sub->add_option("--type", o.type, "I, II or III");
  if (with_m) sub->add_option("-m", o.m, "codimension");
  sub->add_option("-n", o.n, "degree index");
  sub->add_option("--alpha", o.alpha, "exact rational such as 1/3, or 'symbolic'");
  sub->add_option("--beta", o.beta, "exact rational such as 1/3, or 'symbolic'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation and verification of classical and exceptional orthogonal polynomials", "eopkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "human, json or latex")->check(CLI::IsMember({"human", "json", "latex"}));
  app.add_option("--output", o.output, "also write the json report to this file");

  CLI::App* cop = app.add_subcommand("cop", "monic classical polynomial");
  add_selectors(cop, o, false, false);
  CLI::App* eop = app.add_subcommand("eop", "monic exceptional polynomial");
  add_selectors(eop, o, true, true);
  CLI::App* verify = app.add_subcommand("verify", "check one claim exactly");
  verify->add_option("claim", o.claim, "claim id, e.g. limit-jh3 or appendix-a:A4")->required();
  add_selectors(verify, o, true, true);
  CLI::App* table = app.add_subcommand("table", "regenerate the reference polynomials and limits");
  table->add_option("--seed", o.seed, "sampling seed");
  table->add_option("--points", o.points, "sampled parameter points per row");
  CLI::App* suite = app.add_subcommand("suite", "run the full property battery");
  suite->add_option("--max-m", o.suite.max_m, "largest codimension");
  suite->add_option("--max-n", o.suite.max_n, "degree span");
  suite->add_option("--samples", o.suite.samples, "random parameter choices per case");
  suite->add_option("--seed", o.seed, "sampling seed");
  suite->add_option("--only", o.suite.only, "sections to run")->delimiter(',');
  for (CLI::App* sub : {cop, eop, verify, table, suite}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << rule_name(Rule::Parse) << ": " << e.what() << "\n";
    return kExitUsage;
  }
  for (CLI::App* sub : {eop, verify}) {
    if (sub->parsed()) {
      o.has_m = sub->get_option("-m")->count() > 0;
      o.has_n = sub->get_option("-n")->count() > 0;
    }
  }
  if (cop->parsed()) o.has_n = cop->get_option("-n")->count() > 0;

  const Format format = o.format == "json" ? Format::Json : o.format == "latex" ? Format::Latex : Format::Human;
  try {
    Emitted e;
    if (cop->parsed()) e = cmd_cop(o, format, out);
    else if (eop->parsed()) e = cmd_eop(o, format, out);
    else if (verify->parsed()) e = cmd_verify(o, format, out, err);
    else if (table->parsed()) e = cmd_table(o, format, out);
    else e = cmd_suite(o, format, out);
    if (!o.output.empty()) {
      std::ofstream file(o.output);
      if (!file) {
        err << "error: cannot write " << o.output << "\n";
        return kExitUsage;
      }
      file << e.json.dump(2) << "\n";
    }
    return e.code;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DivisionByZero& e) {
    err << "error: " << rule_name(Rule::Pole) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace eop
