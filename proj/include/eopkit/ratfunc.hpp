#pragma once

#include <string>
#include <string_view>

#include "eopkit/poly.hpp"
#include "eopkit/rat.hpp"

namespace eop {

using QPoly = Poly<Rat>;

/// Element of Q(t): num/den with gcd(num, den) = 1 and den monic.
/// Canonical form makes operator== structural equality.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const Rat& c);  // NOLINT: the embedding Q -> Q(t)
  template <std::integral I>
  RatFunc(I c) : RatFunc(Rat(c)) {}  // NOLINT
  explicit RatFunc(QPoly numerator);
  RatFunc(QPoly numerator, QPoly denominator);

  /// The indeterminate t.
  static RatFunc t();

  const QPoly& numerator() const noexcept { return num_; }
  const QPoly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Value of a constant element; throws if t appears.
  Rat constant_value() const;

  RatFunc inverse() const;
  RatFunc operator-() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// Value at t = at; throws DivisionByZero at a pole.
  Rat evaluate(const Rat& at) const;

  /// Human-readable form using `var` for t, e.g. "(t^2 + 1)/(t - 3)".
  std::string to_string(std::string_view var = "t") const;

 private:
  struct Reduced {};
  RatFunc(QPoly numerator, QPoly denominator, Reduced)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  QPoly num_;
  QPoly den_ = QPoly::constant(Rat(1));
};

/// lim_{t -> infinity} r: zero on a degree deficit, the leading-coefficient
/// ratio on equal degrees. Throws DivergentLimit on a degree excess.
Rat limit_at_infinity(const RatFunc& r);

/// Applies limit_at_infinity to each coefficient.
QPoly limit_coeffwise(const Poly<RatFunc>& p);

/// Q[x] -> Q(t)[x].
Poly<RatFunc> lift(const QPoly& p);

/// Substitutes t = at in every coefficient.
QPoly specialize(const Poly<RatFunc>& p, const Rat& at);

/// Renders a polynomial over Q in variable `var`, descending powers.
std::string to_string(const QPoly& p, std::string_view var = "x");

}  // namespace eop
