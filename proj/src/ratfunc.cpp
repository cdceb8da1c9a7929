#include "eopkit/ratfunc.hpp"

#include "eopkit/errors.hpp"

namespace eop {

namespace {

const QPoly& one_poly() {
  static const QPoly one = QPoly::constant(Rat(1));
  return one;
}

bool is_one(const QPoly& p) { return p.degree() == 0 && p.coefficients()[0] == Rat(1); }

// Exact quotient; the divisor is known to divide the dividend.
QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (is_one(b)) return a;
  return divmod(a, b).first;
}

}  // namespace

RatFunc::RatFunc(const Rat& c) : num_(QPoly::constant(c)) {}

RatFunc::RatFunc(QPoly numerator) : num_(std::move(numerator)) {}

RatFunc::RatFunc(QPoly numerator, QPoly denominator) {
  if (denominator.is_zero()) throw DivisionByZero();
  if (numerator.is_zero()) return;
  QPoly g = gcd(numerator, denominator);
  num_ = exact_div(numerator, g);
  den_ = exact_div(denominator, g);
  if (!den_.is_monic()) {
    Rat lead_inv = den_.leading().inverse();
    num_ *= lead_inv;
    den_ *= lead_inv;
  }
}

RatFunc RatFunc::t() { return RatFunc(QPoly({Rat(0), Rat(1)})); }

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value: element depends on t");
  return num_.is_zero() ? Rat(0) : num_.coefficients()[0];
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  QPoly n = den_;
  QPoly d = num_;
  Rat lead_inv = d.leading().inverse();
  return RatFunc(n * lead_inv, d * lead_inv, Reduced{});
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

// Addition and multiplication keep operands reduced with the usual
// cross-cancellation so only small gcds are taken.
RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (is_one(a.den_) && is_one(b.den_)) return RatFunc(a.num_ + b.num_, one_poly(), RatFunc::Reduced{});
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  QPoly g = gcd(a.den_, b.den_);
  if (is_one(g)) {
    // gcd(a.num b.den + b.num a.den, a.den b.den) = 1 here.
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Reduced{});
  }
  QPoly ad = exact_div(a.den_, g);
  QPoly bd = exact_div(b.den_, g);
  QPoly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return RatFunc();
  QPoly g2 = gcd(num, g);
  return RatFunc(exact_div(num, g2), ad * exact_div(b.den_, g2), RatFunc::Reduced{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (is_one(a.den_) && is_one(b.den_)) return RatFunc(a.num_ * b.num_, one_poly(), RatFunc::Reduced{});
  QPoly g1 = is_one(b.den_) ? one_poly() : gcd(a.num_, b.den_);
  QPoly g2 = is_one(a.den_) ? one_poly() : gcd(b.num_, a.den_);
  QPoly num = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  QPoly den = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  return RatFunc(std::move(num), std::move(den), RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

Rat RatFunc::evaluate(const Rat& at) const {
  Rat d = den_(at);
  if (d.is_zero()) throw DivisionByZero();
  return num_(at) / d;
}

std::string to_string(const QPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rat c = p.coeff(k);
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rat mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = mag == Rat(1);
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (!unit) out += mag.to_string() + " ";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string RatFunc::to_string(std::string_view var) const {
  if (is_one(den_)) {
    if (num_.degree() <= 0) return eop::to_string(num_, var);
    return "(" + eop::to_string(num_, var) + ")";
  }
  std::string n = eop::to_string(num_, var);
  if (num_.degree() > 0) n = "(" + n + ")";
  std::string d = eop::to_string(den_, var);
  if (den_.degree() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

Rat limit_at_infinity(const RatFunc& r) {
  const int dn = r.numerator().degree();
  const int dd = r.denominator().degree();
  if (dn < dd) return Rat(0);
  if (dn > dd) throw DivergentLimit(0, dn - dd);
  return r.numerator().leading() / r.denominator().leading();
}

QPoly limit_coeffwise(const Poly<RatFunc>& p) {
  std::vector<Rat> out;
  out.reserve(p.coefficients().size());
  for (int k = 0; k <= p.degree(); ++k) {
    const RatFunc& c = p.coefficients()[static_cast<std::size_t>(k)];
    const int excess = c.numerator().degree() - c.denominator().degree();
    if (excess > 0) throw DivergentLimit(k, excess);
    out.push_back(limit_at_infinity(c));
  }
  return QPoly(std::move(out));
}

Poly<RatFunc> lift(const QPoly& p) {
  return p.map([](const Rat& c) { return RatFunc(c); });
}

QPoly specialize(const Poly<RatFunc>& p, const Rat& at) {
  return p.map([&](const RatFunc& c) { return c.evaluate(at); });
}

}  // namespace eop
