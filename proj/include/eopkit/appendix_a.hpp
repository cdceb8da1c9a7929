#pragma once

// The twelve monic classical-polynomial relations A1..A12, each checked as an
// exact polynomial identity. Left and right sides are built independently
// from the constructors in classical.hpp.

#include <array>
#include <optional>
#include <string>

#include "eopkit/classical.hpp"
#include "eopkit/verdict.hpp"

namespace eop {

enum class AppendixA { A1 = 1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12 };

inline constexpr std::array<AppendixA, 12> kAllAppendixA = {
    AppendixA::A1, AppendixA::A2, AppendixA::A3, AppendixA::A4,  AppendixA::A5,  AppendixA::A6,
    AppendixA::A7, AppendixA::A8, AppendixA::A9, AppendixA::A10, AppendixA::A11, AppendixA::A12};

std::string appendix_a_id(AppendixA id);
std::optional<AppendixA> parse_appendix_a(std::string_view text);
Family appendix_a_family(AppendixA id);

namespace detail {

template <Field F>
std::string param_text(const F& v) {
  if constexpr (std::is_same_v<F, RatFunc>)
    return v == RatFunc::t() ? std::string("symbolic") : v.to_string("t");
  else
    return v.to_string();
}

}  // namespace detail

template <Field F>
VerdictReport verify_appendix_a(AppendixA id, int n, const F& alpha = embed<F>(0),
                                const F& beta = embed<F>(0)) {
  if (n < 0) throw SpecError(Rule::InvalidIndex, "n must be nonnegative, got " + std::to_string(n));
  const Poly<F> x = Poly<F>::x();
  const F one = embed<F>(1);
  const F nn = embed<F>(n);
  Poly<F> lhs, rhs;
  auto H = [](int k) { return monic_hermite<F>(k); };
  auto L = [](int k, const F& a) { return monic_laguerre(k, a); };
  auto P = [](int k, const F& a, const F& b) { return monic_jacobi(k, a, b); };
  switch (id) {
    case AppendixA::A1:  // H_n' = n H_{n-1}
      lhs = derivative(H(n));
      rhs = H(n - 1) * nn;
      break;
    case AppendixA::A2:  // (d/dx - 2x) H_n = -2 H_{n+1}
      lhs = derivative(H(n)) - x * H(n) * embed<F>(2);
      rhs = H(n + 1) * embed<F>(-2);
      break;
    case AppendixA::A3:  // L_n^{(a)}' = n L_{n-1}^{(a+1)}
      lhs = derivative(L(n, alpha));
      rhs = L(n - 1, alpha + one) * nn;
      break;
    case AppendixA::A4:  // L_n^{(a-1)} = L_n^{(a)} + n L_{n-1}^{(a)}
      lhs = L(n, alpha - one);
      rhs = L(n, alpha) + L(n - 1, alpha) * nn;
      break;
    case AppendixA::A5: {  // (x d/dx + a - x) L_n^{(a)} = -L_{n+1}^{(a-1)}
      Poly<F> l = L(n, alpha);
      lhs = x * derivative(l) + l * alpha - x * l;
      rhs = -L(n + 1, alpha - one);
      break;
    }
    case AppendixA::A6: {  // L_{n+1} + (2n+a+1-x) L_n + n(n+a) L_{n-1} = 0
      const Poly<F> lin({embed<F>(2 * n + 1) + alpha, embed<F>(-1)});
      lhs = L(n + 1, alpha) + lin * L(n, alpha) + L(n - 1, alpha) * (nn * (nn + alpha));
      rhs = Poly<F>();
      break;
    }
    case AppendixA::A7:  // x L_n^{(a+1)} = (n+a+1) L_n^{(a)} + L_{n+1}^{(a)}
      lhs = x * L(n, alpha + one);
      rhs = L(n, alpha) * (nn + alpha + one) + L(n + 1, alpha);
      break;
    case AppendixA::A8:  // P_n' = n P_{n-1}^{(a+1,b+1)}
      lhs = derivative(P(n, alpha, beta));
      rhs = P(n - 1, alpha + one, beta + one) * nn;
      break;
    case AppendixA::A9: {  // (1-x^2) P' + [b-a-(a+b)x] P = -(n+a+b) P_{n+1}^{(a-1,b-1)}
      Poly<F> p = P(n, alpha, beta);
      const Poly<F> one_minus_x2({one, embed<F>(0), -one});
      const Poly<F> lin({beta - alpha, -(alpha + beta)});
      lhs = one_minus_x2 * derivative(p) + lin * p;
      rhs = P(n + 1, alpha - one, beta - one) * (-(nn + alpha + beta));
      break;
    }
    case AppendixA::A10: {
      // (2n+a+b+1)(2n+a+b+2)[(1-x) P_n^{(a+1,b)} + P_{n+1}] = 2(n+a+1)(n+a+b+1) P_n
      const F s = embed<F>(2 * n) + alpha + beta;
      const Poly<F> one_minus_x({one, -one});
      lhs = (one_minus_x * P(n, alpha + one, beta) + P(n + 1, alpha, beta)) *
            ((s + one) * (s + embed<F>(2)));
      rhs = P(n, alpha, beta) * (embed<F>(2) * (nn + alpha + one) * (nn + alpha + beta + one));
      break;
    }
    case AppendixA::A11: {
      // (2n+a+b-1)(2n+a+b)[P_n - P_n^{(a-1,b)}] = 2n(n+b) P_{n-1}
      const F s = embed<F>(2 * n) + alpha + beta;
      lhs = (P(n, alpha, beta) - P(n, alpha - one, beta)) * ((s - one) * s);
      rhs = P(n - 1, alpha, beta) * (embed<F>(2) * nn * (nn + beta));
      break;
    }
    case AppendixA::A12: {
      // (2n+a+b-1)[P_n^{(a,b-1)} - P_n^{(a-1,b)}] = 2n P_{n-1}
      const F s = embed<F>(2 * n) + alpha + beta;
      lhs = (P(n, alpha, beta - one) - P(n, alpha - one, beta)) * (s - one);
      rhs = P(n - 1, alpha, beta) * (embed<F>(2) * nn);
      break;
    }
  }
  std::vector<std::pair<std::string, std::string>> ctx{{"n", std::to_string(n)}};
  const Family fam = appendix_a_family(id);
  if (fam != Family::Hermite) ctx.emplace_back("alpha", detail::param_text(alpha));
  if (fam == Family::Jacobi) ctx.emplace_back("beta", detail::param_text(beta));
  return compare("appendix-a:" + appendix_a_id(id), lhs, rhs, std::move(ctx));
}

}  // namespace eop
