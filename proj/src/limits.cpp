#include <array>

#include "eopkit/relations.hpp"

namespace eop {

namespace {

using Context = std::vector<std::pair<std::string, std::string>>;

const RatFunc& t() {
  static const RatFunc value = RatFunc::t();
  return value;
}

RatFunc t_pow(int k) { return power(t(), k); }

constexpr std::array<std::pair<ClassicalLimit, std::string_view>, 6> kClassicalNames{{
    {ClassicalLimit::JacobiLaguerre, "jl"},
    {ClassicalLimit::JacobiLaguerreCorollary, "jl-corollary"},
    {ClassicalLimit::JacobiHermite, "jh"},
    {ClassicalLimit::JacobiHermiteCorollary, "jh-corollary"},
    {ClassicalLimit::LaguerreHermite, "lh"},
    {ClassicalLimit::LaguerreHermiteCorollary, "lh-corollary"},
}};

}  // namespace

Poly<RatFunc> substitute(const Poly<RatFunc>& p, Substitution kind) {
  switch (kind) {
    case Substitution::JacobiLaguerre:
      return compose_affine(p, RatFunc(-2) / t(), RatFunc(1));
    case Substitution::JacobiHermite:
      return compose_affine(p, t().inverse(), RatFunc(0));
    case Substitution::LaguerreHermite:
      return compose_affine(p, t(), t() * t() * RatFunc(Rat(1, 2)));
    case Substitution::Reflect:
      return reflect(p);
    case Substitution::Square:
      return compose_square(p);
  }
  return p;
}

VerdictReport verify_scaled_limit(std::string claim_id, const Poly<RatFunc>& substituted,
                                  const RatFunc& scale, const QPoly& expected, Context context) {
  const Poly<RatFunc> scaled = substituted * scale;
  try {
    return compare(std::move(claim_id), limit_coeffwise(scaled), expected, std::move(context));
  } catch (const DivergentLimit& e) {
    VerdictReport r;
    r.claim_id = std::move(claim_id);
    r.status = VerdictStatus::Divergent;
    r.left = scaled;
    r.right = lift(expected);
    r.context = std::move(context);
    r.context.emplace_back("divergence", e.what());
    return r;
  }
}

VerdictReport verify_limit_jacobi_to_laguerre(EopType type, int m, int n, const Rat& alpha) {
  const EopSpec source = EopSpec::make(Family::Jacobi, type, m, n);
  const EopSpec target = EopSpec::make(Family::Laguerre, type, m, n);
  const int deg = source.degree();
  const QPoly expected = build_eop(target, alpha) * pow(Rat(-2), deg);
  const Poly<RatFunc> p = build_eop(source, RatFunc(alpha), t());
  return verify_scaled_limit("limit-jl:" + std::string(type_name(type)), substitute(p, Substitution::JacobiLaguerre),
                             t_pow(deg), expected,
                             {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"alpha", alpha.to_string()},
                              {"scale", "beta^" + std::to_string(deg)}});
}

VerdictReport verify_limit_jacobi_to_hermite(int m, int n) {
  const EopSpec target = EopSpec::make(Family::Hermite, EopType::III, m, n);
  const EopSpec source = EopSpec::make(Family::Jacobi, EopType::III, m, n);
  const RatFunc a = t() * t();
  return verify_scaled_limit("limit-jh3", substitute(build_eop(source, a, a), Substitution::JacobiHermite),
                             t_pow(n), build_eop<Rat>(target), {{"m", std::to_string(m)}, {"n", std::to_string(n)}});
}

VerdictReport verify_limit_laguerre_to_hermite(int m, int n) {
  const EopSpec target = EopSpec::make(Family::Hermite, EopType::III, m, n);
  const EopSpec source = EopSpec::make(Family::Laguerre, EopType::III, m, n);
  const RatFunc a = t() * t() * RatFunc(Rat(1, 2));
  return verify_scaled_limit("limit-lh3", substitute(build_eop(source, a), Substitution::LaguerreHermite),
                             t_pow(-n), build_eop<Rat>(target), {{"m", std::to_string(m)}, {"n", std::to_string(n)}});
}

std::string_view classical_limit_name(ClassicalLimit which) {
  for (const auto& [k, name] : kClassicalNames)
    if (k == which) return name;
  return "?";
}

std::optional<ClassicalLimit> parse_classical_limit(std::string_view text) {
  for (const auto& [k, name] : kClassicalNames)
    if (name == text) return k;
  if (text == "laguerre-hermite-corollary") return ClassicalLimit::LaguerreHermiteCorollary;
  return std::nullopt;
}

VerdictReport verify_classical_limit(ClassicalLimit which, int n, const Rat& alpha) {
  if (n < 0) throw SpecError(Rule::InvalidIndex, "n must be nonnegative, got " + std::to_string(n));
  const std::string id = "classical-" + std::string(classical_limit_name(which));
  Context ctx{{"n", std::to_string(n)}};
  const RatFunc a(alpha);
  const RatFunc t2 = t() * t();
  const RatFunc half_t2 = t2 * RatFunc(Rat(1, 2));
  const QPoly h = monic_hermite(n);
  switch (which) {
    case ClassicalLimit::JacobiLaguerre:
      ctx.emplace_back("alpha", alpha.to_string());
      return verify_scaled_limit(id, substitute(monic_jacobi(n, a, t()), Substitution::JacobiLaguerre), t_pow(n),
                                 monic_laguerre(n, alpha) * pow(Rat(-2), n), std::move(ctx));
    case ClassicalLimit::JacobiLaguerreCorollary:
      ctx.emplace_back("alpha", alpha.to_string());
      return verify_scaled_limit(id, substitute(monic_jacobi(n, a, -t()), Substitution::JacobiLaguerre), t_pow(n),
                                 reflect(monic_laguerre(n, alpha)) * pow(Rat(2), n), std::move(ctx));
    case ClassicalLimit::JacobiHermite:
      return verify_scaled_limit(id, substitute(monic_jacobi(n, t2, t2), Substitution::JacobiHermite), t_pow(n), h,
                                 std::move(ctx));
    case ClassicalLimit::JacobiHermiteCorollary:
      return verify_scaled_limit(id, substitute(monic_jacobi(n, -t2, -t2), Substitution::JacobiHermite), t_pow(n),
                                 imaginary_rotate(h, -n), std::move(ctx));
    case ClassicalLimit::LaguerreHermite:
      return verify_scaled_limit(id, substitute(monic_laguerre(n, half_t2), Substitution::LaguerreHermite),
                                 t_pow(-n), h, std::move(ctx));
    case ClassicalLimit::LaguerreHermiteCorollary:
      // L(-t x - t^2/2) is the reflected polynomial under the forward map.
      return verify_scaled_limit(
          id, substitute(reflect(monic_laguerre(n, -half_t2)), Substitution::LaguerreHermite), t_pow(-n),
          imaginary_rotate(h, n), std::move(ctx));
  }
  throw SpecError(Rule::InvalidIndex, "unknown classical limit");
}

}  // namespace eop
