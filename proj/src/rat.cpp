#include "eopkit/rat.hpp"

#include <cctype>

#include "eopkit/errors.hpp"

namespace eop {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::GapDegree: return "gap degree";
    case Rule::OddHermiteCodimension: return "odd Hermite codimension";
    case Rule::Pole: return "pole";
    case Rule::DegenerateParameters: return "degenerate parameters";
    case Rule::InvalidIndex: return "invalid index";
    case Rule::UnsupportedSymbolic: return "unsupported symbolic parameter";
    case Rule::Parse: return "parse error";
  }
  return "unknown rule";
}

Rat::Rat(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool is_decimal_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal_integer(num, true) || !is_decimal_integer(den, false))
    throw SpecError(Rule::Parse, "not an exact rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw SpecError(Rule::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rat(mpq_class(n, d));
}

Rat Rat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rat(mpq_class(1 / value_));
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rat pow(const Rat& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(mpq_class(num, den));
}

Rat factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return Rat(mpq_class(f));
}

}  // namespace eop
