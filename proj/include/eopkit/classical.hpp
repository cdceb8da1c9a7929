#pragma once

// Monic Hermite, Laguerre and Jacobi polynomials over any coefficient field.
//
// Any negative degree yields the zero polynomial, which lets the exceptional
// constructors write terms such as n L_{n-1} without special cases.

#include <string>

#include "eopkit/errors.hpp"
#include "eopkit/poly.hpp"

namespace eop {

enum class Family { Hermite, Laguerre, Jacobi };

std::string_view family_name(Family family);

/// H_{n+1} = x H_n - (n/2) H_{n-1}.
template <Field F = Rat>
Poly<F> monic_hermite(int n) {
  if (n < 0) return Poly<F>();
  Poly<F> prev;
  Poly<F> cur = Poly<F>::constant(embed<F>(1));
  const Poly<F> x = Poly<F>::x();
  for (int k = 0; k < n; ++k) {
    Poly<F> next = x * cur - prev * embed<F>(Rat(k, 2));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// L_{n+1} = (x - 2n - alpha - 1) L_n - n(n + alpha) L_{n-1}.
template <Field F>
Poly<F> monic_laguerre(int n, const F& alpha) {
  if (n < 0) return Poly<F>();
  Poly<F> prev;
  Poly<F> cur = Poly<F>::constant(embed<F>(1));
  for (int k = 0; k < n; ++k) {
    const Poly<F> lin({-(alpha + embed<F>(2 * k + 1)), embed<F>(1)});
    Poly<F> next = lin * cur - prev * (embed<F>(k) * (alpha + embed<F>(k)));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Standard-normalization Jacobi polynomial from
///   P_n = 2^{-n} sum_k binom(n+alpha, k) binom(n+beta, n-k) (x-1)^{n-k} (x+1)^k.
template <Field F>
Poly<F> standard_jacobi_sum(int n, const F& alpha, const F& beta) {
  if (n < 0) return Poly<F>();
  const Poly<F> xm1({embed<F>(-1), embed<F>(1)});
  const Poly<F> xp1({embed<F>(1), embed<F>(1)});
  std::vector<Poly<F>> pm(static_cast<std::size_t>(n) + 1), pp(static_cast<std::size_t>(n) + 1);
  pm[0] = pp[0] = Poly<F>::constant(embed<F>(1));
  for (int k = 1; k <= n; ++k) {
    pm[static_cast<std::size_t>(k)] = pm[static_cast<std::size_t>(k - 1)] * xm1;
    pp[static_cast<std::size_t>(k)] = pp[static_cast<std::size_t>(k - 1)] * xp1;
  }
  const F na = embed<F>(n) + alpha;
  const F nb = embed<F>(n) + beta;
  Poly<F> sum;
  for (int k = 0; k <= n; ++k) {
    F c = generalized_binomial(na, k) * generalized_binomial(nb, n - k);
    if (c.is_zero()) continue;
    sum += (pm[static_cast<std::size_t>(n - k)] * pp[static_cast<std::size_t>(k)]) * c;
  }
  return sum * embed<F>(pow(Rat(2), -n));
}

/// Standard Jacobi polynomial divided by its leading coefficient. Rejects
/// parameters where that coefficient, (n+alpha+beta+1)_n / (2^n n!), vanishes.
template <Field F>
Poly<F> monic_jacobi(int n, const F& alpha, const F& beta) {
  if (n < 0) return Poly<F>();
  Poly<F> p = standard_jacobi_sum(n, alpha, beta);
  if (p.degree() != n)
    throw SpecError(Rule::DegenerateParameters,
                    "Jacobi P_" + std::to_string(n) + " has vanishing leading coefficient");
  return make_monic(p);
}

/// Factor c with monic = c * standard, for each family.
template <Field F>
F monic_from_standard_factor(Family family, int n, const F& alpha, const F& beta) {
  switch (family) {
    case Family::Hermite:
      return embed<F>(pow(Rat(2), -n));
    case Family::Laguerre:
      return embed<F>(factorial(n) * Rat(n % 2 == 0 ? 1 : -1));
    case Family::Jacobi: {
      F lead = pochhammer(embed<F>(n + 1) + alpha + beta, n);
      if (lead.is_zero())
        throw SpecError(Rule::DegenerateParameters, "Jacobi normalization (n+alpha+beta+1)_n = 0");
      return embed<F>(pow(Rat(2), n) * factorial(n)) / lead;
    }
  }
  return embed<F>(1);
}

}  // namespace eop
