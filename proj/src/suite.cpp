#include "eopkit/suite.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "eopkit/appendix_a.hpp"
#include "eopkit/relations.hpp"
#include "eopkit/sampling.hpp"

namespace eop {

namespace {

using Reports = std::vector<VerdictReport>;
using Context = std::vector<std::pair<std::string, std::string>>;

std::string str(int v) { return std::to_string(v); }

/// A boolean fact as a report: left is 1 when it holds, right is always 1.
VerdictReport holds(std::string id, bool ok, Context ctx) {
  return compare(std::move(id), QPoly::constant(Rat(ok ? 1 : 0)), QPoly::constant(Rat(1)), std::move(ctx));
}

QPoly random_poly(RationalSampler& s, int max_degree) {
  std::vector<Rat> c;
  const int deg = static_cast<int>(s.uniform(max_degree + 1));
  for (int k = 0; k <= deg; ++k) c.push_back(s.next());
  return QPoly(c);
}

Rat nonzero(RationalSampler& s) {
  for (;;) {
    Rat r = s.next();
    if (!r.is_zero()) return r;
  }
}

std::vector<int> type3_degrees(int m, int extra) {
  std::vector<int> out{0};
  for (int n = m + 1; n <= m + extra; ++n) out.push_back(n);
  return out;
}

void algebra(const SuiteConfig& c, RationalSampler& s, Reports& out) {
  const int cases = 20 * c.samples;
  for (int i = 0; i < cases; ++i) {
    const QPoly p = random_poly(s, 4), q = random_poly(s, 4), r = random_poly(s, 4);
    out.push_back(compare("ring:distributive", (p + q) * r, p * r + q * r));
    const Rat a = nonzero(s), b = s.next();
    out.push_back(compare("compose-affine:round-trip", compose_affine(compose_affine(p, a, b), a.inverse(), -b / a), p,
                          {{"a", a.to_string()}, {"b", b.to_string()}}));
    if (!q.is_zero()) {
      auto [quot, rem] = divmod(p, q);
      out.push_back(compare("divmod:reconstruct", quot * q + rem, p));
      out.push_back(holds("divmod:remainder-degree", rem.degree() < q.degree(), {}));
    }
    const RatFunc f(QPoly({s.next(), s.next(), nonzero(s)}), QPoly({s.next(), Rat(1), Rat(1)}));
    const RatFunc g(QPoly({s.next(), nonzero(s)}), QPoly({nonzero(s), Rat(1)}));
    out.push_back(compare("ratfunc:limit-additive", QPoly::constant(limit_at_infinity(f + g)),
                          QPoly::constant(limit_at_infinity(f) + limit_at_infinity(g))));
  }
  for (int k = 0; k <= 2 * c.max_n + 2; ++k) {
    const QPoly h = monic_hermite(k);
    for (int shift : {0, 2}) {
      const int st = k + shift;
      const QPoly twice = imaginary_rotate(imaginary_rotate(h, st), st);
      out.push_back(compare("rotate:twice", twice, st % 2 == 0 ? reflect(h) : -reflect(h), {{"k", str(k)}}));
    }
  }
}

void classical(const SuiteConfig& c, RationalSampler& s, Reports& out) {
  const int max_n = 2 * c.max_n + 2;
  for (AppendixA id : kAllAppendixA) {
    const Family fam = appendix_a_family(id);
    for (int n = 0; n <= max_n; ++n) {
      if (fam == Family::Hermite) {
        out.push_back(verify_appendix_a<Rat>(id, n));
      } else if (fam == Family::Laguerre) {
        out.push_back(verify_appendix_a(id, n, RatFunc::t()));
        for (int i = 0; i < c.samples; ++i) out.push_back(verify_appendix_a(id, n, s.next()));
      } else {
        for (int i = 0; i < c.samples + 2; ++i) {
          auto [a, b] = s.next_generic_pair();
          out.push_back(verify_appendix_a(id, n, a, b));
        }
      }
    }
  }
  for (int n = 0; n <= max_n; ++n) {
    auto [a, b] = s.next_generic_pair();
    const QPoly rhs = reflect(monic_jacobi(n, b, a));
    out.push_back(compare("jacobi-reflection", monic_jacobi(n, a, b), n % 2 == 0 ? rhs : -rhs,
                          {{"n", str(n)}, {"alpha", a.to_string()}, {"beta", b.to_string()}}));
  }
}

void exceptional(const SuiteConfig& c, RationalSampler& s, Reports& out) {
  for (Family fam : {Family::Laguerre, Family::Jacobi})
    for (EopType type : {EopType::I, EopType::II, EopType::III})
      for (int m = 0; m <= c.max_m; ++m)
        for (int n = 0; n <= m + c.max_n + 1; ++n) {
          if (type == EopType::III && n >= 1 && n <= m) continue;
          const EopSpec spec = EopSpec::make(fam, type, m, n);
          for (int i = 0; i < c.samples; ++i) {
            auto [a, b] = s.next_generic_pair();
            const QPoly p = build_eop(spec, a, b);
            out.push_back(compare("monic-degree", QPoly::monomial(p.leading(), p.degree()),
                                  QPoly::monomial(Rat(1), eop_degree(spec)),
                                  {{"spec", spec.label()}, {"alpha", a.to_string()}, {"beta", b.to_string()}}));
          }
        }
  for (int m = 0; m <= c.max_m + 1; ++m)
    for (int n : type3_degrees(m, c.max_n + 1)) out.push_back(verify_laguerre_x3_forms(m, n));
  for (int m = 0; m <= c.max_m + 1; m += 2)
    for (int n : type3_degrees(m, c.max_n + 2)) {
      const QPoly h = hermite_x3(m, n);
      out.push_back(compare("hermite-parity", reflect(h), n % 2 == 0 ? h : -h, {{"m", str(m)}, {"n", str(n)}}));
      out.push_back(compare("monic-degree", QPoly::monomial(h.leading(), h.degree()), QPoly::monomial(Rat(1), n),
                            {{"m", str(m)}, {"n", str(n)}}));
    }
}

void limits(const SuiteConfig& c, RationalSampler& s, Reports& out) {
  for (EopType type : {EopType::I, EopType::II})
    for (int m = 0; m <= c.max_m; ++m)
      for (int n = 0; n <= c.max_n; ++n)
        for (int i = 0; i < c.samples; ++i) out.push_back(verify_limit_jacobi_to_laguerre(type, m, n, s.next_non_integer()));
  for (int m = 0; m <= c.max_m; ++m)
    for (int n : type3_degrees(m, c.max_n))
      for (int i = 0; i < c.samples; ++i)
        out.push_back(verify_limit_jacobi_to_laguerre(EopType::III, m, n, s.next_non_integer()));
  for (int m = 0; m <= c.max_m + 1; m += 2)
    for (int n : type3_degrees(m, c.max_n)) {
      out.push_back(verify_limit_jacobi_to_hermite(m, n));
      out.push_back(verify_limit_laguerre_to_hermite(m, n));
    }
  for (auto which : {ClassicalLimit::JacobiLaguerre, ClassicalLimit::JacobiLaguerreCorollary,
                     ClassicalLimit::JacobiHermite, ClassicalLimit::JacobiHermiteCorollary,
                     ClassicalLimit::LaguerreHermite, ClassicalLimit::LaguerreHermiteCorollary})
    for (int n = 0; n <= 2 * c.max_n; ++n) out.push_back(verify_classical_limit(which, n, s.next_non_integer()));
}

void quadratic(const SuiteConfig& c, RationalSampler&, Reports& out) {
  for (int m = 0; m <= c.max_m; ++m)
    for (int n : type3_degrees(m, std::max(c.max_n - 1, 0))) out.push_back(verify_quadratic_even(m, n));
  for (int m = 1; m <= c.max_m; ++m) out.push_back(verify_quadratic_odd_special(m));
  for (int n = 0; n <= 2 * c.max_n; ++n) {
    out.push_back(verify_classical_quadratic(Parity::Even, n));
    out.push_back(verify_classical_quadratic(Parity::Odd, n));
  }
  out.push_back(verify_odd_quadratic_obstruction(1, 2));
}

void identities(const SuiteConfig& c, RationalSampler& s, Reports& out) {
  for (int m = 1; m <= 2 * c.max_m; ++m)
    for (int i = 0; i < c.samples + 2; ++i) {
      auto [a, b] = s.next_generic_pair();
      out.push_back(verify_appendix_b_identity(m, a, b));
    }
  for (int m = 0; m <= c.max_m; ++m)
    for (int n = m; n <= m + c.max_n; ++n) {
      auto [a, b] = s.next_generic_pair();
      out.push_back(verify_link_formula(m, n, a, b));
    }
  for (int m = 0; m <= c.max_m; ++m)
    for (int n = 0; n <= c.max_n + 1; ++n)
      for (int i = 0; i < c.samples; ++i) {
        auto [a, b] = s.next_generic_pair();
        out.push_back(verify_jacobi_symmetry(m, n, a, b));
      }
  for (int n = 0; n <= 2 * c.max_n; ++n) {
    auto [a, b] = s.next_generic_pair();
    out.push_back(verify_m0_degeneration(Family::Hermite, EopType::III, n));
    for (EopType type : {EopType::I, EopType::II, EopType::III}) {
      out.push_back(verify_m0_degeneration(Family::Laguerre, type, n, a));
      out.push_back(verify_m0_degeneration(Family::Jacobi, type, n, a, b));
    }
    out.push_back(verify_monic_conversion(Family::Hermite, n));
    out.push_back(verify_monic_conversion(Family::Laguerre, n, a));
    out.push_back(verify_monic_conversion(Family::Jacobi, n, a, b));
  }
}

void guards(const SuiteConfig& c, RationalSampler&, Reports& out) {
  for (const InvalidSpecCase& k : random_invalid_specs(c.seed, 20 * c.samples)) {
    bool ok = false;
    std::string message = "accepted";
    try {
      build_eop(EopSpec::make(k.family, k.type, k.m, k.n), k.alpha, k.beta);
    } catch (const SpecError& e) {
      ok = e.rule() == k.expected;
      message = e.what();
    }
    out.push_back(holds("guard:" + std::string(rule_name(k.expected)), ok,
                        {{"family", std::string(family_name(k.family))},
                         {"type", std::string(type_name(k.type))},
                         {"m", str(k.m)},
                         {"n", str(k.n)},
                         {"message", message}}));
  }
}

const VerdictReport* first_failure_in(const VerdictReport& r) {
  if (r.status != VerdictStatus::Pass) {
    // Prefer the deepest failing sub-claim when the parent only inherits it.
    for (const auto& s : r.sub_claims)
      if (const VerdictReport* f = first_failure_in(s)) return f;
    return &r;
  }
  return nullptr;
}

std::size_t passed_in(const VerdictReport& r) {
  std::size_t n = r.passed() ? 1 : 0;
  for (const auto& s : r.sub_claims) n += passed_in(s);
  return n;
}

}  // namespace

std::size_t SuiteSection::claims() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.claim_count();
  return n;
}

std::size_t SuiteSection::passed() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += passed_in(r);
  return n;
}

const VerdictReport* SuiteSection::first_failure() const {
  for (const auto& r : reports)
    if (const VerdictReport* f = first_failure_in(r)) return f;
  return nullptr;
}

std::vector<SuiteSection> run_suite(const SuiteConfig& config) {
  for (const auto& name : config.only)
    if (std::find(kSuiteSections.begin(), kSuiteSections.end(), name) == kSuiteSections.end())
      throw SpecError(Rule::Parse, "unknown suite section '" + name + "'");
  if (config.max_m < 0 || config.max_n < 0 || config.samples < 1)
    throw SpecError(Rule::InvalidIndex, "suite bounds must be nonnegative and samples at least 1");

  using Runner = std::function<void(const SuiteConfig&, RationalSampler&, Reports&)>;
  const std::array<Runner, kSuiteSections.size()> runners = {algebra, classical, exceptional, limits,
                                                             quadratic, identities, guards};
  std::vector<SuiteSection> sections;
  for (std::size_t i = 0; i < kSuiteSections.size(); ++i) {
    const std::string name(kSuiteSections[i]);
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), name) == config.only.end())
      continue;
    RationalSampler sampler(config.seed * kSuiteSections.size() + i);
    SuiteSection section{name, {}};
    runners[i](config, sampler, section.reports);
    sections.push_back(std::move(section));
  }
  return sections;
}

std::vector<std::string> InvalidSpecCase::cli_args() const {
  std::string fam(family_name(family));
  std::transform(fam.begin(), fam.end(), fam.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return {"eop",  "--family", fam,  "--type",  std::string(type_name(type)), "-m", std::to_string(m),
          "-n",   std::to_string(n), "--alpha", alpha.to_string(), "--beta", beta.to_string()};
}

std::vector<InvalidSpecCase> random_invalid_specs(std::uint64_t seed, int count) {
  RationalSampler s(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<InvalidSpecCase> out;
  for (int i = 0; i < count; ++i) {
    InvalidSpecCase k{Family::Laguerre, EopType::III, 0, 0, Rat(0), Rat(0), Rule::GapDegree};
    k.alpha = s.next_non_integer();
    k.beta = s.next_non_integer();
    switch (i % 3) {
      case 0: {  // gap degree: type III with 1 <= n <= m
        const long pick = s.uniform(3);
        k.family = pick == 0 ? Family::Hermite : pick == 1 ? Family::Laguerre : Family::Jacobi;
        k.m = static_cast<int>(s.uniform(5)) + 1;
        if (k.family == Family::Hermite) k.m = 2 * (k.m / 2 + 1);
        k.n = static_cast<int>(s.uniform(k.m)) + 1;
        k.expected = Rule::GapDegree;
        break;
      }
      case 1:  // odd Hermite codimension
        k.family = Family::Hermite;
        k.m = 2 * static_cast<int>(s.uniform(4)) + 1;
        k.n = static_cast<int>(s.uniform(10));
        k.expected = Rule::OddHermiteCodimension;
        break;
      default: {  // a prefactor denominator vanishes
        k.m = static_cast<int>(s.uniform(5));
        k.n = static_cast<int>(s.uniform(6));
        k.expected = Rule::Pole;
        switch (s.uniform(4)) {
          case 0:
            k.family = Family::Laguerre;
            k.type = EopType::II;
            k.alpha = Rat(k.m - k.n);
            break;
          case 1:
            k.family = Family::Jacobi;
            k.type = EopType::I;
            k.beta = Rat(k.m - k.n);
            break;
          case 2:
            k.family = Family::Jacobi;
            k.type = EopType::II;
            k.alpha = Rat(k.m - k.n);
            break;
          default:
            k.family = Family::Jacobi;
            k.type = EopType::III;
            k.n = k.m + 1 + static_cast<int>(s.uniform(5));
            k.beta = Rat(2 * k.m + 1 - k.n) - k.alpha;
            break;
        }
        break;
      }
    }
    out.push_back(k);
  }
  return out;
}

}  // namespace eop
