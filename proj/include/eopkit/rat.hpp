#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace eop {

/// Exact rational number in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;

  template <std::integral I>
  Rat(I value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit embedding of Z

  Rat(long numerator, long denominator);

  explicit Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts "p", "-p", "p/q" with decimal integers of any length.
  static Rat parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  Rat inverse() const;

  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }

  /// "3/2", "-1", "0".
  std::string to_string() const { return value_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-value_)); }

  Rat& operator+=(const Rat& rhs) { value_ += rhs.value_; return *this; }
  Rat& operator-=(const Rat& rhs) { value_ -= rhs.value_; return *this; }
  Rat& operator*=(const Rat& rhs) { value_ *= rhs.value_; return *this; }
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& lhs, const Rat& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
    int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rat pow(const Rat& base, int exponent);
Rat factorial(int n);

}  // namespace eop
