#pragma once

// Reference closed forms for low-order exceptional polynomials, transcribed
// coefficient by coefficient. They are data: nothing here calls the
// constructors, so comparisons against them test the constructors.

#include "eopkit/poly.hpp"

namespace eop::golden {

template <Field F>
F c(long num, long den = 1) {
  return embed<F>(Rat(num, den));
}

/// H^(III,2)_3 = x^3 + 3/2 x.
template <Field F = Rat>
Poly<F> hermite_x3_m2_n3() {
  return Poly<F>({c<F>(0), c<F>(3, 2), c<F>(0), c<F>(1)});
}

/// L^(I,1)_2 = x^3 - (a+4)x^2 - (a+1)(a+4)x + (a+1)(a+2)(a+4).
template <Field F>
Poly<F> laguerre_x1_m1_n2(const F& a) {
  return Poly<F>({(a + c<F>(1)) * (a + c<F>(2)) * (a + c<F>(4)), -(a + c<F>(1)) * (a + c<F>(4)),
                  -(a + c<F>(4)), c<F>(1)});
}

/// L^(II,1)_2 = x^3 - (a+2)x^2 - (a-1)(a+2)x + (a-1)a(a+2).
template <Field F>
Poly<F> laguerre_x2_m1_n2(const F& a) {
  return Poly<F>({(a - c<F>(1)) * a * (a + c<F>(2)), -(a - c<F>(1)) * (a + c<F>(2)), -(a + c<F>(2)),
                  c<F>(1)});
}

/// L^(III,2)_3 = x^3 - 3(a-2)x^2 + 3(a-1)(a-2)x - a(a-1)(a-2).
template <Field F>
Poly<F> laguerre_x3_m2_n3(const F& a) {
  return Poly<F>({-a * (a - c<F>(1)) * (a - c<F>(2)), c<F>(3) * (a - c<F>(1)) * (a - c<F>(2)),
                  c<F>(-3) * (a - c<F>(2)), c<F>(1)});
}

namespace detail {

// Shared shape of P^(I,1)_2 and P^(II,1)_2; d = a - b + 2 for type I and
// a - b - 2 for type II.
template <Field F>
Poly<F> jacobi_m1_n2(const F& a, const F& b, const F& d) {
  const F s = a + b;
  const F x2 = (c<F>(2) * d * d + s * (s + c<F>(6))) / ((s + c<F>(4)) * d);
  const F x1 = (d * d + s * (c<F>(2) * a + c<F>(2) * b + c<F>(9))) / ((s + c<F>(3)) * (s + c<F>(4)));
  const F x0 = (d * d * (s + c<F>(2)) - s * (s + c<F>(6))) / (d * (s + c<F>(3)) * (s + c<F>(4)));
  return Poly<F>({x0, x1, x2, c<F>(1)});
}

}  // namespace detail

template <Field F>
Poly<F> jacobi_x1_m1_n2(const F& a, const F& b) {
  return detail::jacobi_m1_n2(a, b, a - b + c<F>(2));
}

template <Field F>
Poly<F> jacobi_x2_m1_n2(const F& a, const F& b) {
  return detail::jacobi_m1_n2(a, b, a - b - c<F>(2));
}

/// P^(III,2)_3.
template <Field F>
Poly<F> jacobi_x3_m2_n3(const F& a, const F& b) {
  const F s = a + b;
  const F d = a - b;
  const F x2 = c<F>(3) * d / (s - c<F>(4));
  const F x1 = c<F>(3) * (d * d + s - c<F>(4)) / ((s - c<F>(3)) * (s - c<F>(4)));
  const F x0 = d * (d * d + c<F>(3) * a + c<F>(3) * b - c<F>(10)) /
               ((s - c<F>(2)) * (s - c<F>(3)) * (s - c<F>(4)));
  return Poly<F>({x0, x1, x2, c<F>(1)});
}

}  // namespace eop::golden
