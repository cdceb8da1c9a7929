#pragma once

#include <concepts>

#include "eopkit/rat.hpp"

namespace eop {

/// Coefficient field usable by Poly: exact arithmetic, structural equality,
/// and an injective embedding of Q through construction from Rat.
template <class F>
concept Field = std::regular<F> && std::constructible_from<F, Rat> &&
                requires(const F a, const F b) {
                  { a + b } -> std::same_as<F>;
                  { a - b } -> std::same_as<F>;
                  { a * b } -> std::same_as<F>;
                  { a / b } -> std::same_as<F>;
                  { -a } -> std::same_as<F>;
                  { a.inverse() } -> std::same_as<F>;
                  { a.is_zero() } -> std::convertible_to<bool>;
                };

template <Field F>
F embed(const Rat& q) {
  return F(q);
}

/// Rising factorial a(a+1)...(a+k-1); one for k = 0.
template <Field F>
F pochhammer(const F& a, int k) {
  F result = embed<F>(1);
  for (int i = 0; i < k; ++i) result = result * (a + embed<F>(i));
  return result;
}

/// Generalized binomial coefficient binom(top, k) = (top-k+1)_k / k!, total in top.
template <Field F>
F generalized_binomial(const F& top, int k) {
  if (k < 0) return embed<F>(0);
  return pochhammer(top - embed<F>(k - 1), k) * embed<F>(factorial(k).inverse());
}

template <Field F>
F power(const F& base, int exponent) {
  if (exponent < 0) return power(base.inverse(), -exponent);
  F result = embed<F>(1);
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

}  // namespace eop
