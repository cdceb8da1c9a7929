#include "eopkit/reference.hpp"

#include "eopkit/golden.hpp"
#include "eopkit/relations.hpp"
#include "eopkit/render.hpp"
#include "eopkit/sampling.hpp"

namespace eop {

namespace {

using Kind = ReferenceRow::Kind;

ReferenceRow polynomial_row(std::string label, std::string human, std::string latex) {
  return ReferenceRow{Kind::Polynomial, std::move(label), std::move(human), std::move(latex), {}};
}

template <class Build, class Golden>
ReferenceRow laguerre_row(std::string label, EopType type, int m, int n, Build build, Golden golden,
                          RationalSampler& s, int points) {
  const RatFunc a = RatFunc::t();
  const Poly<RatFunc> p = build(a);
  ReferenceRow row = polynomial_row(std::move(label), render_human(p, "alpha"),
                                    latex_label(Family::Laguerre, type, m, n) + " = " + render_latex(p, "\\alpha"));
  row.checks.push_back(compare(row.label, p, golden(a), {{"alpha", "symbolic"}}));
  for (int i = 0; i < points; ++i) {
    const Rat v = s.next_non_integer();
    row.checks.push_back(compare(row.label, build(v), golden(v), {{"alpha", v.to_string()}}));
  }
  return row;
}

template <class Build, class Golden>
ReferenceRow jacobi_row(std::string label, EopType type, int m, int n, Build build, Golden golden,
                        RationalSampler& s, int points) {
  ReferenceRow row = polynomial_row(std::move(label), "", latex_label(Family::Jacobi, type, m, n));
  for (int i = 0; i < points; ++i) {
    auto [a, b] = s.next_generic_pair();
    row.checks.push_back(
        compare(row.label, build(a, b), golden(a, b), {{"alpha", a.to_string()}, {"beta", b.to_string()}}));
    // Symbolic alpha at the sampled beta.
    const RatFunc t = RatFunc::t();
    const RatFunc bb(b);
    row.checks.push_back(
        compare(row.label, build(t, bb), golden(t, bb), {{"alpha", "symbolic"}, {"beta", b.to_string()}}));
  }
  return row;
}

ReferenceRow jl_row(EopType type, int m, int n, const std::string& src_label, const std::string& dst_label,
                    RationalSampler& s, int points) {
  ReferenceRow row{Kind::Limit, "limit-jl:" + std::string(type_name(type)), "", "", {}};
  row.human = "lim beta^3 " + src_label + "(1 - 2x/beta; alpha, beta) = -8 " + dst_label + "(x; alpha)";
  row.latex = "\\lim_{\\beta\\to\\infty} \\beta^3 " + latex_label(Family::Jacobi, type, m, n) + " = -8 " +
              latex_label(Family::Laguerre, type, m, n);
  // Placeholder arguments are spelled out only in the plain form.
  const std::string from = "(x;\\alpha,\\beta)";
  row.latex.replace(row.latex.find(from), from.size(), "\\Bigl(1 - \\frac{2x}{\\beta};\\alpha,\\beta\\Bigr)");
  for (int i = 0; i < points; ++i) {
    const Rat a = s.next_non_integer();
    QPoly golden_target;
    switch (type) {
      case EopType::I: golden_target = golden::laguerre_x1_m1_n2(a); break;
      case EopType::II: golden_target = golden::laguerre_x2_m1_n2(a); break;
      case EopType::III: golden_target = golden::laguerre_x3_m2_n3(a); break;
    }
    VerdictReport r = verify_limit_jacobi_to_laguerre(type, m, n, a);
    VerdictReport against_golden = compare(row.label + ":reference", r.left, lift(golden_target * Rat(-8)),
                                           {{"alpha", a.to_string()}});
    row.checks.push_back(std::move(r));
    row.checks.push_back(std::move(against_golden));
  }
  return row;
}

ReferenceRow hermite_limit_row(bool from_jacobi) {
  ReferenceRow row{Kind::Limit, from_jacobi ? "limit-jh3" : "limit-lh3", "", "", {}};
  const std::string target = latex_label(Family::Hermite, EopType::III, 2, 3);
  if (from_jacobi) {
    row.human = "lim alpha^(3/2) P^(III,2)_3(x/sqrt(alpha); alpha, alpha) = H^(III,2)_3(x)";
    row.latex = "\\lim_{\\alpha\\to\\infty} \\alpha^{3/2} \\hat{P}^{({\\rm III},2)}_{3}\\Bigl(\\frac{x}{\\sqrt{\\alpha}};"
                "\\alpha,\\alpha\\Bigr) = " + target;
  } else {
    row.human = "lim (2 alpha)^(-3/2) L^(III,2)_3(sqrt(2 alpha) x + alpha; alpha) = H^(III,2)_3(x)";
    row.latex = "\\lim_{\\alpha\\to\\infty} \\frac{1}{(2\\alpha)^{3/2}} \\hat{L}^{({\\rm III},2)}_{3}\\bigl(\\sqrt{2\\alpha}x"
                "+\\alpha;\\alpha\\bigr) = " + target;
  }
  VerdictReport r = from_jacobi ? verify_limit_jacobi_to_hermite(2, 3) : verify_limit_laguerre_to_hermite(2, 3);
  VerdictReport against_golden = compare(row.label + ":reference", r.left, lift(golden::hermite_x3_m2_n3()));
  row.checks.push_back(std::move(r));
  row.checks.push_back(std::move(against_golden));
  return row;
}

}  // namespace

bool ReferenceRow::matches() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

std::vector<ReferenceRow> reference_table(std::uint64_t seed, int points) {
  RationalSampler s(seed);
  std::vector<ReferenceRow> rows;

  const QPoly h = hermite_x3(2, 3);
  rows.push_back(polynomial_row("H^(III,2)_3", render_human(h),
                                latex_label(Family::Hermite, EopType::III, 2, 3) + " = " + render_latex(h)));
  rows.back().checks.push_back(compare(rows.back().label, h, golden::hermite_x3_m2_n3()));

  rows.push_back(laguerre_row(
      "L^(I,1)_2", EopType::I, 1, 2, [](const auto& a) { return laguerre_x1(1, 2, a); },
      [](const auto& a) { return golden::laguerre_x1_m1_n2(a); }, s, points));
  rows.push_back(laguerre_row(
      "L^(II,1)_2", EopType::II, 1, 2, [](const auto& a) { return laguerre_x2(1, 2, a); },
      [](const auto& a) { return golden::laguerre_x2_m1_n2(a); }, s, points));
  rows.push_back(laguerre_row(
      "L^(III,2)_3", EopType::III, 2, 3, [](const auto& a) { return laguerre_x3(2, 3, a); },
      [](const auto& a) { return golden::laguerre_x3_m2_n3(a); }, s, points));

  rows.push_back(jacobi_row(
      "P^(I,1)_2", EopType::I, 1, 2, [](const auto& a, const auto& b) { return jacobi_x1(1, 2, a, b); },
      [](const auto& a, const auto& b) { return golden::jacobi_x1_m1_n2(a, b); }, s, points));
  rows.push_back(jacobi_row(
      "P^(II,1)_2", EopType::II, 1, 2, [](const auto& a, const auto& b) { return jacobi_x2(1, 2, a, b); },
      [](const auto& a, const auto& b) { return golden::jacobi_x2_m1_n2(a, b); }, s, points));
  rows.push_back(jacobi_row(
      "P^(III,2)_3", EopType::III, 2, 3, [](const auto& a, const auto& b) { return jacobi_x3(2, 3, a, b); },
      [](const auto& a, const auto& b) { return golden::jacobi_x3_m2_n3(a, b); }, s, points));

  rows.push_back(jl_row(EopType::I, 1, 2, "P^(I,1)_2", "L^(I,1)_2", s, points));
  rows.push_back(jl_row(EopType::II, 1, 2, "P^(II,1)_2", "L^(II,1)_2", s, points));
  rows.push_back(jl_row(EopType::III, 2, 3, "P^(III,2)_3", "L^(III,2)_3", s, points));
  rows.push_back(hermite_limit_row(true));
  rows.push_back(hermite_limit_row(false));
  return rows;
}

}  // namespace eop
