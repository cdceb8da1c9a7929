#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eopkit/errors.hpp"
#include "eopkit/field.hpp"

namespace eop {

/// Dense univariate polynomial in x over a field, coefficients ascending.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
template <Field F>
class Poly {
 public:
  using coefficient_type = F;

  Poly() = default;
  explicit Poly(std::vector<F> ascending) : coeffs_(std::move(ascending)) { trim(); }
  Poly(std::initializer_list<F> ascending) : coeffs_(ascending) { trim(); }

  static Poly constant(const F& c) { return Poly(std::vector<F>{c}); }
  static Poly x() { return Poly(std::vector<F>{embed<F>(0), embed<F>(1)}); }
  static Poly monomial(const F& c, int k) {
    std::vector<F> v(static_cast<std::size_t>(k) + 1, embed<F>(0));
    v.back() = c;
    return Poly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<F>& coefficients() const noexcept { return coeffs_; }

  F coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return embed<F>(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const F& leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == embed<F>(1); }

  F operator()(const F& at) const {
    F acc = embed<F>(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using G = std::decay_t<decltype(fn(std::declval<const F&>()))>;
    std::vector<G> out;
    out.reserve(coeffs_.size());
    for (const F& c : coeffs_) out.push_back(fn(c));
    return Poly<G>(std::move(out));
  }

  Poly operator-() const {
    std::vector<F> out;
    out.reserve(coeffs_.size());
    for (const F& c : coeffs_) out.push_back(-c);
    return Poly(std::move(out));
  }

  Poly& operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), embed<F>(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), embed<F>(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const F& c) {
    if (c.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (F& a : coeffs_) a = a * c;
    trim();
    return *this;
  }

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly p, const F& c) { return p *= c; }
  friend Poly operator*(const F& c, Poly p) { return p *= c; }

  friend Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    std::vector<F> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, embed<F>(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        out[i + j] = out[i + j] + lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

template <Field F>
Poly<F> scale(const Poly<F>& p, const F& c) {
  return p * c;
}

/// p(a x + b), expanded by Horner's rule over the field.
template <Field F>
Poly<F> compose_affine(const Poly<F>& p, const F& a, const F& b) {
  const Poly<F> inner({b, a});
  Poly<F> acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Poly<F>::constant(*it);
  return acc;
}

/// p(-x).
template <Field F>
Poly<F> reflect(const Poly<F>& p) {
  std::vector<F> out = p.coefficients();
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return Poly<F>(std::move(out));
}

/// p(x^2).
template <Field F>
Poly<F> compose_square(const Poly<F>& p) {
  if (p.is_zero()) return p;
  std::vector<F> out(2 * p.coefficients().size() - 1, embed<F>(0));
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) out[2 * k] = p.coefficients()[k];
  return Poly<F>(std::move(out));
}

template <Field F>
Poly<F> derivative(const Poly<F>& p) {
  if (p.degree() < 1) return Poly<F>();
  std::vector<F> out;
  out.reserve(p.coefficients().size() - 1);
  for (std::size_t k = 1; k < p.coefficients().size(); ++k)
    out.push_back(p.coefficients()[k] * embed<F>(static_cast<long>(k)));
  return Poly<F>(std::move(out));
}

/// i^s p(ix) for a polynomial whose nonzero coefficients all sit at degrees
/// k with k = s (mod 2). The result is real: c_k -> c_k (-1)^((k+s)/2).
template <Field F>
Poly<F> imaginary_rotate(const Poly<F>& p, int s) {
  std::vector<F> out = p.coefficients();
  for (std::size_t k = 0; k < out.size(); ++k) {
    long ks = static_cast<long>(k) + s;
    if (ks % 2 != 0) {
      if (!out[k].is_zero())
        throw std::invalid_argument("imaginary_rotate: coefficient of x^" + std::to_string(k) +
                                    " has the wrong parity for i^" + std::to_string(s));
      continue;
    }
    long half = ks / 2;
    if (half % 2 != 0) out[k] = -out[k];
  }
  return Poly<F>(std::move(out));
}

/// Euclidean division; divisor must be nonzero.
template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& dividend, const Poly<F>& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  std::vector<F> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Poly<F>(), dividend};
  std::vector<F> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1, embed<F>(0));
  const F lead_inv = divisor.leading().inverse();
  const auto& dc = divisor.coefficients();
  for (int k = dividend.degree(); k >= dd; --k) {
    const F q = rem[static_cast<std::size_t>(k)] * lead_inv;
    quot[static_cast<std::size_t>(k - dd)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] =
          rem[static_cast<std::size_t>(k - dd + j)] - q * dc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <Field F>
Poly<F> make_monic(const Poly<F>& p) {
  if (p.is_zero() || p.is_monic()) return p;
  return p * p.leading().inverse();
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

template <Field F>
Poly<F> pow(const Poly<F>& p, int exponent) {
  Poly<F> result = Poly<F>::constant(embed<F>(1));
  for (int i = 0; i < exponent; ++i) result = result * p;
  return result;
}

}  // namespace eop
