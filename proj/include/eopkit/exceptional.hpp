#pragma once

// X_m exceptional orthogonal polynomials in monic form: Hermite type III and
// Laguerre / Jacobi types I, II, III, built from monic classical polynomials.

#include <optional>
#include <string>

#include "eopkit/classical.hpp"

namespace eop {

enum class EopType { I, II, III };

std::string_view type_name(EopType type);
std::optional<EopType> parse_type(std::string_view text);

/// A lawful (family, type, m, n). Construction through make() is the single
/// place where gap degrees and the even-m Hermite rule are enforced.
class EopSpec {
 public:
  static EopSpec make(Family family, EopType type, int m, int n);

  Family family() const noexcept { return family_; }
  EopType type() const noexcept { return type_; }
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }

  /// n + m for types I and II, n for type III.
  int degree() const noexcept { return type_ == EopType::III ? n_ : n_ + m_; }

  std::string label() const;

 private:
  EopSpec(Family family, EopType type, int m, int n) : family_(family), type_(type), m_(m), n_(n) {}

  Family family_;
  EopType type_;
  int m_;
  int n_;
};

int eop_degree(const EopSpec& spec);

namespace detail {

void require_type3_index(int m, int n);
void require_nonnegative(int m, int n);

template <Field F>
void require_nonzero(const F& v, const std::string& what) {
  if (v.is_zero()) throw SpecError(Rule::Pole, what + " = 0");
}

}  // namespace detail

/// i^m [H_m(ix) H_{n-m}(x) + i (m/2) H_{m-1}(ix) H_{n-m-1}(x)], real by parity.
template <Field F = Rat>
Poly<F> hermite_x3(int m, int n) {
  if (m < 0 || m % 2 != 0)
    throw SpecError(Rule::OddHermiteCodimension, "Hermite EOPs need even m >= 0, got m=" + std::to_string(m));
  detail::require_type3_index(m, n);
  if (n == 0) return Poly<F>::constant(embed<F>(1));
  Poly<F> first = imaginary_rotate(monic_hermite<F>(m), m) * monic_hermite<F>(n - m);
  Poly<F> second = imaginary_rotate(monic_hermite<F>(m - 1), m + 1) * monic_hermite<F>(n - m - 1);
  return first + second * embed<F>(Rat(m, 2));
}

/// (-1)^m [L_m^{(a+1)}(-x) L_n^{(a)}(x) - n L_m^{(a)}(-x) L_{n-1}^{(a+1)}(x)].
template <Field F>
Poly<F> laguerre_x1(int m, int n, const F& alpha) {
  detail::require_nonnegative(m, n);
  const F one = embed<F>(1);
  Poly<F> p = reflect(monic_laguerre(m, alpha + one)) * monic_laguerre(n, alpha) -
              reflect(monic_laguerre(m, alpha)) * monic_laguerre(n - 1, alpha + one) * embed<F>(n);
  return m % 2 == 0 ? p : -p;
}

/// [n x L_m^{(-a)} L_{n-1}^{(a+1)} - (m-a) L_m^{(-a-1)} L_n^{(a)}] / (a+n-m).
template <Field F>
Poly<F> laguerre_x2(int m, int n, const F& alpha) {
  detail::require_nonnegative(m, n);
  const F denom = alpha + embed<F>(n - m);
  detail::require_nonzero(denom, "alpha+n-m");
  const F one = embed<F>(1);
  Poly<F> p = Poly<F>::x() * monic_laguerre(m, -alpha) * monic_laguerre(n - 1, alpha + one) * embed<F>(n) -
              monic_laguerre(m, -alpha - one) * monic_laguerre(n, alpha) * (embed<F>(m) - alpha);
  return p * denom.inverse();
}

/// (-1)^m [L_m^{(-a)}(-x) L_{n-m}^{(a-1)}(x) - m x L_{m-1}^{(-a+1)}(-x) L_{n-m-1}^{(a)}(x)].
template <Field F>
Poly<F> laguerre_x3(int m, int n, const F& alpha) {
  detail::require_type3_index(m, n);
  if (n == 0) return Poly<F>::constant(embed<F>(1));
  const F one = embed<F>(1);
  Poly<F> p = reflect(monic_laguerre(m, -alpha)) * monic_laguerre(n - m, alpha - one) -
              Poly<F>::x() * reflect(monic_laguerre(m - 1, -alpha + one)) *
                  monic_laguerre(n - m - 1, alpha) * embed<F>(m);
  return m % 2 == 0 ? p : -p;
}

/// Equivalent type III form
/// (-1)^{m+1} [(n-m-1) x L_m^{(-a)}(-x) L_{n-m-2}^{(a+1)}(x) + L_{m+1}^{(-a-1)}(-x) L_{n-m-1}^{(a)}(x)].
template <Field F>
Poly<F> laguerre_x3_alt(int m, int n, const F& alpha) {
  detail::require_type3_index(m, n);
  if (n == 0) return Poly<F>::constant(embed<F>(1));
  const F one = embed<F>(1);
  Poly<F> p = Poly<F>::x() * reflect(monic_laguerre(m, -alpha)) * monic_laguerre(n - m - 2, alpha + one) *
                  embed<F>(n - m - 1) +
              reflect(monic_laguerre(m + 1, -alpha - one)) * monic_laguerre(n - m - 1, alpha);
  return m % 2 == 0 ? -p : p;
}

/// {P_m^{(a,-b)} [n(1+x) P_{n-1}^{(a+1,b+1)} + b P_n^{(a,b)}]
///   - m(1+x) P_{m-1}^{(a+1,-b+1)} P_n^{(a,b)}} / (b+n-m).
template <Field F>
Poly<F> jacobi_x1(int m, int n, const F& alpha, const F& beta) {
  detail::require_nonnegative(m, n);
  const F denom = beta + embed<F>(n - m);
  detail::require_nonzero(denom, "beta+n-m");
  const F one = embed<F>(1);
  const Poly<F> one_plus_x({one, one});
  const Poly<F> pn = monic_jacobi(n, alpha, beta);
  Poly<F> p = monic_jacobi(m, alpha, -beta) *
                  (one_plus_x * monic_jacobi(n - 1, alpha + one, beta + one) * embed<F>(n) + pn * beta) -
              one_plus_x * monic_jacobi(m - 1, alpha + one, -beta + one) * pn * embed<F>(m);
  return p * denom.inverse();
}

/// {P_m^{(-a,b)} [n(1-x) P_{n-1}^{(a+1,b+1)} - a P_n^{(a,b)}]
///   - m(1-x) P_{m-1}^{(-a+1,b+1)} P_n^{(a,b)}} / (m-n-a).
template <Field F>
Poly<F> jacobi_x2(int m, int n, const F& alpha, const F& beta) {
  detail::require_nonnegative(m, n);
  const F denom = embed<F>(m - n) - alpha;
  detail::require_nonzero(denom, "m-n-alpha");
  const F one = embed<F>(1);
  const Poly<F> one_minus_x({one, -one});
  const Poly<F> pn = monic_jacobi(n, alpha, beta);
  Poly<F> p = monic_jacobi(m, -alpha, beta) *
                  (one_minus_x * monic_jacobi(n - 1, alpha + one, beta + one) * embed<F>(n) - pn * alpha) -
              one_minus_x * monic_jacobi(m - 1, -alpha + one, beta + one) * pn * embed<F>(m);
  return p * denom.inverse();
}

/// [(a+b+n-m-1) P_m^{(-a,-b)} P_{n-m}^{(a-1,b-1)}
///   + m(1-x^2) P_{m-1}^{(-a+1,-b+1)} P_{n-m-1}^{(a,b)}] / (a+b+n-2m-1).
template <Field F>
Poly<F> jacobi_x3(int m, int n, const F& alpha, const F& beta) {
  detail::require_type3_index(m, n);
  if (n == 0) return Poly<F>::constant(embed<F>(1));
  const F denom = alpha + beta + embed<F>(n - 2 * m - 1);
  detail::require_nonzero(denom, "alpha+beta+n-2m-1");
  const F one = embed<F>(1);
  const Poly<F> one_minus_x2({one, embed<F>(0), -one});
  Poly<F> p = monic_jacobi(m, -alpha, -beta) * monic_jacobi(n - m, alpha - one, beta - one) *
                  (alpha + beta + embed<F>(n - m - 1)) +
              one_minus_x2 * monic_jacobi(m - 1, -alpha + one, -beta + one) *
                  monic_jacobi(n - m - 1, alpha, beta) * embed<F>(m);
  return p * denom.inverse();
}

/// Dispatches on a validated spec. Hermite ignores the parameters; Laguerre
/// ignores beta.
template <Field F>
Poly<F> build_eop(const EopSpec& spec, const F& alpha = embed<F>(0), const F& beta = embed<F>(0)) {
  const int m = spec.m();
  const int n = spec.n();
  switch (spec.family()) {
    case Family::Hermite:
      return hermite_x3<F>(m, n);
    case Family::Laguerre:
      switch (spec.type()) {
        case EopType::I: return laguerre_x1(m, n, alpha);
        case EopType::II: return laguerre_x2(m, n, alpha);
        case EopType::III: return laguerre_x3(m, n, alpha);
      }
      break;
    case Family::Jacobi:
      switch (spec.type()) {
        case EopType::I: return jacobi_x1(m, n, alpha, beta);
        case EopType::II: return jacobi_x2(m, n, alpha, beta);
        case EopType::III: return jacobi_x3(m, n, alpha, beta);
      }
      break;
  }
  return Poly<F>();
}

}  // namespace eop
