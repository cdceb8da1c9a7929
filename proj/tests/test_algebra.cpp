#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eopkit/classical.hpp"
#include "eopkit/errors.hpp"
#include "eopkit/ratfunc.hpp"
#include "eopkit/sampling.hpp"
#include "test_support.hpp"

using namespace eop;
using eop::testing::q;
using eop::testing::qpoly;
using eop::testing::T;
using eop::testing::tpoly;

TEST_CASE("Rat stays reduced with positive denominator") {
  Rat a(6, -4);
  CHECK(a.to_string() == "-3/2");
  CHECK(a.denominator_string() == "2");
  CHECK((Rat(1, 3) + Rat(1, 6)).to_string() == "1/2");
  CHECK((Rat(2, 3) * Rat(3, 2)) == Rat(1));
  CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rat(0).inverse(), DivisionByZero);
}

TEST_CASE("Rat parsing") {
  CHECK(q("10/4") == Rat(5, 2));
  CHECK(q("-7") == Rat(-7));
  CHECK(q("+3/9") == Rat(1, 3));
  CHECK(q("123456789012345678901234567890/3").numerator_string() == "41152263004115226300411522630");
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/-2", "--1", "symbolic"})
    CHECK_THROWS_AS(q(bad), SpecError);
}

TEST_CASE("poly ring arithmetic") {
  const QPoly x = QPoly::x();
  const QPoly one = QPoly::constant(1);
  CHECK((x + one) * (x - one) == qpoly({"-1", "0", "1"}));
  CHECK((QPoly() * (x + one)).is_zero());
  CHECK((QPoly() * (x + one)).coefficients().empty());
  CHECK(qpoly({"-1/2", "0", "1"}) * one == qpoly({"-1/2", "0", "1"}));
  CHECK((x - x).degree() == -1);
  CHECK(scale(x + one, Rat(0)).is_zero());
}

TEST_CASE("poly_compose_affine") {
  const QPoly x = QPoly::x();
  CHECK(compose_affine(x * x, Rat(-1), Rat(0)) == x * x);
  CHECK(compose_affine(x * x * x, Rat(1), Rat(1)) == qpoly({"1", "3", "3", "1"}));

  // x over Q(beta) with a = -2/beta, b = 1 gives 1 - (2/beta) x.
  const Poly<RatFunc> xb = Poly<RatFunc>::x();
  const RatFunc a = RatFunc(-2) / T;
  Poly<RatFunc> got = compose_affine(xb, a, RatFunc(1));
  CHECK(got.degree() == 1);
  CHECK(got.coeff(0) == RatFunc(1));
  CHECK(got.coeff(1) == RatFunc(qpoly({"-2"}), qpoly({"0", "1"})));
}

TEST_CASE("poly_compose_affine round trip and monic preservation") {
  RationalSampler s(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> c;
    const int deg = static_cast<int>(s.uniform(7));
    for (int k = 0; k <= deg; ++k) c.push_back(s.next());
    c.back() = Rat(1);
    QPoly p(c);
    Rat b = s.next();
    QPoly shifted = compose_affine(p, Rat(1), b);
    CHECK(compose_affine(shifted, Rat(1), -b) == p);
    CHECK(shifted.degree() == p.degree());
    CHECK(shifted.is_monic());
  }
}

TEST_CASE("poly_compose_square") {
  CHECK(compose_square(qpoly({"1", "1"})) == qpoly({"1", "0", "1"}));
  CHECK(compose_square(qpoly({"7/3"})) == qpoly({"7/3"}));
  CHECK(compose_square(qpoly({"0", "-3", "0", "1"})) == qpoly({"0", "0", "-3", "0", "0", "0", "1"}));
}

TEST_CASE("poly_imaginary_rotate") {
  // H_2(ix) = -x^2 - 1/2, by hand.
  CHECK(imaginary_rotate(qpoly({"-1/2", "0", "1"}), 0) == qpoly({"-1/2", "0", "-1"}));
  // i^2 H_2(ix) = x^2 + 1/2.
  CHECK(imaginary_rotate(qpoly({"-1/2", "0", "1"}), 2) == qpoly({"1/2", "0", "1"}));
  // i * (ix) = -x.
  CHECK(imaginary_rotate(qpoly({"0", "1"}), 1) == qpoly({"0", "-1"}));
  CHECK(imaginary_rotate(qpoly({"1"}), 0) == qpoly({"1"}));
  CHECK_THROWS(imaginary_rotate(qpoly({"1", "1"}), 0));
}

TEST_CASE("rotating twice is (-1)^s times reflection for monic Hermite") {
  for (int n = 0; n <= 12; ++n) {
    QPoly h = monic_hermite(n);
    QPoly twice = imaginary_rotate(imaginary_rotate(h, n), n);
    QPoly expected = reflect(h);
    if (n % 2 != 0) expected = -expected;
    CHECK(twice == expected);
  }
}

TEST_CASE("polynomial gcd and division") {
  QPoly a = qpoly({"-1", "0", "1"});  // x^2 - 1
  QPoly b = qpoly({"1", "2", "1"});   // (x+1)^2
  CHECK(gcd(a, b) == qpoly({"1", "1"}));
  auto [quot, rem] = divmod(qpoly({"1", "0", "0", "1"}), qpoly({"1", "1"}));
  CHECK(quot == qpoly({"1", "-1", "1"}));
  CHECK(rem.is_zero());
}

TEST_CASE("RatFunc canonical form") {
  RatFunc r(qpoly({"-2", "0", "2"}), qpoly({"3", "3"}));  // (2t^2-2)/(3t+3)
  CHECK(r.numerator() == qpoly({"-2/3", "2/3"}));
  CHECK(r.denominator() == qpoly({"1"}));
  RatFunc s(qpoly({"1"}), qpoly({"0", "2"}));  // 1/(2t)
  CHECK(s.denominator().is_monic());
  CHECK(s.numerator() == qpoly({"1/2"}));
  CHECK_THROWS_AS(RatFunc(qpoly({"1"}), QPoly()), DivisionByZero);
  CHECK_THROWS_AS(RatFunc().inverse(), DivisionByZero);
  CHECK((T / T) == RatFunc(1));
  CHECK((T - T).is_zero());
}

TEST_CASE("ratfunc_limit_at_infinity") {
  CHECK(limit_at_infinity(RatFunc(qpoly({"0", "1", "3"}), qpoly({"5", "0", "1"}))) == Rat(3));
  CHECK(limit_at_infinity(RatFunc(qpoly({"0", "1"}), qpoly({"1", "0", "1"}))) == Rat(0));
  CHECK_THROWS_AS(limit_at_infinity(T * T * T / T), DivergentLimit);
}

TEST_CASE("poly_limit_coeffwise") {
  Poly<RatFunc> p({RatFunc(1) / T, (T + RatFunc(1)) / T});
  CHECK(limit_coeffwise(p) == QPoly::x());
  CHECK(limit_coeffwise(lift(qpoly({"1/2", "3"}))) == qpoly({"1/2", "3"}));
  Poly<RatFunc> bad({RatFunc(1), RatFunc(0), T * T / T});
  try {
    limit_coeffwise(bad);
    FAIL("expected divergence");
  } catch (const DivergentLimit& e) {
    CHECK(e.coefficient_degree() == 2);
    CHECK(e.excess() == 1);
  }
}

// Gamma(top)/Gamma(bottom) for integer top - bottom >= 0 by stepping
// Gamma(z+1) = z Gamma(z) downward from top.
static Rat gamma_ratio_oracle(Rat top, const Rat& bottom) {
  Rat r(1);
  while (top != bottom) {
    top -= Rat(1);
    r *= top;
  }
  return r;
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rat(5, 7), 0) == Rat(1));
  CHECK(pochhammer(Rat(1), 4) == Rat(24));
  const int m = 2;
  const Rat alpha(1, 3), beta(1, 5);
  const Rat bottom = Rat(m) - alpha + beta - Rat(1);
  const Rat top = Rat(2 * m) - alpha + beta - Rat(1);
  CHECK(gamma_ratio_oracle(top, bottom) == Rat(364, 225));
  CHECK(pochhammer(bottom, m) == Rat(364, 225));
  // Symbolic: (t)_3 = t^3 + 3t^2 + 2t.
  CHECK(pochhammer(T, 3) == tpoly({"0", "2", "3", "1"}));
}

namespace {

RatFunc random_ratfunc(RationalSampler& s) {
  auto rand_poly = [&](bool nonzero) {
    for (;;) {
      std::vector<Rat> c;
      const int deg = static_cast<int>(s.uniform(4));
      for (int k = 0; k <= deg; ++k) c.push_back(s.next());
      QPoly p(c);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return RatFunc(rand_poly(false), rand_poly(true));
}

}  // namespace

TEST_CASE("RatFunc field axioms on random inputs") {
  RationalSampler s(2024, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    RatFunc a = random_ratfunc(s), b = random_ratfunc(s), c = random_ratfunc(s);
    REQUIRE(((a + b) + c) == (a + (b + c)));
    REQUIRE(((a * b) * c) == (a * (b * c)));
    REQUIRE((a * (b + c)) == (a * b + a * c));
    REQUIRE((a + b) == (b + a));
    REQUIRE((a - a).is_zero());
    if (!a.is_zero()) REQUIRE((a * a.inverse()) == RatFunc(1));
    REQUIRE(a.denominator().is_monic());
    REQUIRE(gcd(a.numerator(), a.denominator()).degree() <= 0);
  }
}

TEST_CASE("limit is additive when both limits exist") {
  RationalSampler s(99, 9);
  int checked = 0;
  while (checked < 300) {
    RatFunc a = random_ratfunc(s), b = random_ratfunc(s);
    Rat la, lb;
    try {
      la = limit_at_infinity(a);
      lb = limit_at_infinity(b);
    } catch (const DivergentLimit&) {
      continue;
    }
    CHECK(limit_at_infinity(a + b) == la + lb);
    ++checked;
  }
}

TEST_CASE("embedding Q into Q(t) is a ring homomorphism") {
  RationalSampler s(5);
  for (int i = 0; i < 200; ++i) {
    Rat a = s.next(), b = s.next();
    CHECK(RatFunc(a + b) == RatFunc(a) + RatFunc(b));
    CHECK(RatFunc(a * b) == RatFunc(a) * RatFunc(b));
    CHECK((RatFunc(a) == RatFunc(b)) == (a == b));
  }
}

TEST_CASE("rendering") {
  CHECK(to_string(qpoly({"0", "3/2", "0", "1"})) == "x^3 + 3/2 x");
  CHECK(to_string(qpoly({"-1/4", "0", "1", "0", "1"})) == "x^4 + x^2 - 1/4");
  CHECK(to_string(QPoly()) == "0");
  CHECK(to_string(qpoly({"-1"})) == "-1");
  CHECK((T + RatFunc(4)).to_string("a") == "(a + 4)");
  CHECK((RatFunc(1) / (T - RatFunc(3))).to_string() == "1/(t - 3)");
}
