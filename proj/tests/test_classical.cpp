#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eopkit/appendix_a.hpp"
#include "eopkit/classical.hpp"
#include "eopkit/sampling.hpp"
#include "test_support.hpp"

using namespace eop;
using eop::testing::qpoly;
using eop::testing::T;

namespace {

// Standard Hermite: n! sum_k (-1)^k (2x)^{n-2k} / (k! (n-2k)!).
QPoly standard_hermite_oracle(int n) {
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
  for (int k = 0; 2 * k <= n; ++k) {
    Rat term = factorial(n) / (factorial(k) * factorial(n - 2 * k)) * pow(Rat(2), n - 2 * k);
    c[static_cast<std::size_t>(n - 2 * k)] = k % 2 == 0 ? term : -term;
  }
  return QPoly(c);
}

// Standard Laguerre: sum_k (-1)^k binom(n+alpha, n-k) x^k / k!.
template <Field F>
Poly<F> standard_laguerre_oracle(int n, const F& alpha) {
  std::vector<F> c;
  for (int k = 0; k <= n; ++k) {
    F b = generalized_binomial(embed<F>(n) + alpha, n - k) * embed<F>(factorial(k).inverse());
    c.push_back(k % 2 == 0 ? b : -b);
  }
  return Poly<F>(c);
}

// Standard Jacobi via sum_k binom(n+a, n-k) binom(n+a+b+k, k) ((x-1)/2)^k,
// a different expansion from the one the library uses.
QPoly standard_jacobi_oracle(int n, const Rat& a, const Rat& b) {
  const QPoly half_xm1 = qpoly({"-1/2", "1/2"});
  QPoly sum;
  for (int k = 0; k <= n; ++k)
    sum += pow(half_xm1, k) * (generalized_binomial(Rat(n) + a, n - k) *
                               generalized_binomial(Rat(n) + a + b + Rat(k), k));
  return sum;
}

}  // namespace

TEST_CASE("monic_hermite") {
  CHECK(monic_hermite(0) == qpoly({"1"}));
  CHECK(monic_hermite(2) == qpoly({"-1/2", "0", "1"}));
  CHECK(monic_hermite(3) == qpoly({"0", "-3/2", "0", "1"}));
  CHECK(monic_hermite(-1).is_zero());
  for (int n = 0; n <= 12; ++n) {
    CHECK(monic_hermite(n) == standard_hermite_oracle(n) * pow(Rat(2), -n));
    CHECK(monic_hermite(n).is_monic());
    QPoly h = monic_hermite(n);
    CHECK(reflect(h) == (n % 2 == 0 ? h : -h));
  }
}

TEST_CASE("monic_laguerre") {
  CHECK(monic_laguerre(0, Rat(3)) == qpoly({"1"}));
  CHECK(monic_laguerre(2, Rat(0)) == qpoly({"2", "-4", "1"}));
  // x - (alpha + 1), symbolic alpha.
  Poly<RatFunc> l1 = monic_laguerre(1, T);
  CHECK(l1.coeff(1) == RatFunc(1));
  CHECK(l1.coeff(0) == -(T + RatFunc(1)));
  // Standard L_1^{(alpha)} = -x + alpha + 1 times (-1)^1/1!.
  CHECK(l1 == standard_laguerre_oracle(1, T) * RatFunc(-1));

  RationalSampler s(3);
  for (int n = 0; n <= 12; ++n) {
    CHECK(monic_laguerre(n, T) == standard_laguerre_oracle(n, T) *
                                      RatFunc(factorial(n) * Rat(n % 2 == 0 ? 1 : -1)));
    Rat a = s.next();
    CHECK(monic_laguerre(n, a).is_monic());
    CHECK(monic_laguerre(n, a).degree() == n);
  }
}

TEST_CASE("monic_jacobi") {
  CHECK(monic_jacobi(0, Rat(1, 2), Rat(1, 3)) == qpoly({"1"}));
  RationalSampler s(17);
  for (int i = 0; i < 8; ++i) {
    auto [a, b] = s.next_generic_pair();
    CHECK(monic_jacobi(1, a, b) == QPoly({(a - b) / (a + b + Rat(2)), Rat(1)}));
  }
  for (int n = 0; n <= 12; ++n) {
    auto [a, b] = s.next_generic_pair();
    QPoly p = monic_jacobi(n, a, b);
    CHECK(p.is_monic());
    CHECK(p == make_monic(standard_jacobi_oracle(n, a, b)));
  }
}

TEST_CASE("monic_jacobi rejects vanishing leading coefficient") {
  // (n+a+b+1)_n = 0 at n = 1, a + b = -2.
  CHECK_THROWS_AS(monic_jacobi(1, Rat(-1), Rat(-1)), SpecError);
  CHECK_THROWS_AS(monic_jacobi(2, Rat(-3, 2), Rat(-3, 2)), SpecError);
  // Fully symbolic parameters never degenerate.
  CHECK(monic_jacobi(4, T, -T).is_monic());
}

TEST_CASE("Jacobi reflection symmetry") {
  RationalSampler s(23);
  for (int n = 0; n <= 8; ++n) {
    for (int i = 0; i < 3; ++i) {
      auto [a, b] = s.next_generic_pair();
      QPoly lhs = monic_jacobi(n, a, b);
      QPoly rhs = reflect(monic_jacobi(n, b, a));
      CHECK(lhs == (n % 2 == 0 ? rhs : -rhs));
    }
  }
}

TEST_CASE("monic Jacobi matches the derivative of the next degree (A8 downward)") {
  RationalSampler s(29);
  for (int n = 0; n <= 6; ++n) {
    auto [a, b] = s.next_generic_pair();
    QPoly from_derivative = derivative(monic_jacobi(n + 1, a - Rat(1), b - Rat(1))) * Rat(1, n + 1);
    CHECK(monic_jacobi(n, a, b) == from_derivative);
  }
}

TEST_CASE("poly_derivative") {
  CHECK(derivative(qpoly({"0", "0", "0", "1"})) == qpoly({"0", "0", "3"}));
  CHECK(derivative(qpoly({"5"})).is_zero());
  CHECK(derivative(monic_hermite(4)) == monic_hermite(3) * Rat(4));
}

TEST_CASE("monic conversion factors") {
  CHECK(monic_from_standard_factor(Family::Hermite, 2, Rat(0), Rat(0)) == Rat(1, 4));
  CHECK(monic_from_standard_factor(Family::Laguerre, 3, Rat(0), Rat(0)) == Rat(-6));
  // n = 1: 2 / (alpha + beta + 2).
  CHECK(monic_from_standard_factor(Family::Jacobi, 1, Rat(1, 2), Rat(1, 2)) == Rat(2, 3));
  CHECK_THROWS_AS(monic_from_standard_factor(Family::Jacobi, 1, Rat(-1), Rat(-1)), SpecError);
}

TEST_CASE("appendix A spot checks") {
  auto a4 = verify_appendix_a(AppendixA::A4, 3, T);
  CHECK(a4.passed());
  CHECK(a4.claim_id == "appendix-a:A4");
  CHECK(a4.left == monic_laguerre(3, T - RatFunc(1)));

  auto a7 = verify_appendix_a(AppendixA::A7, 0, Rat(1, 2));
  CHECK(a7.passed());
  // x L_0^{(3/2)} = x.
  CHECK(a7.left == lift(QPoly::x()));

  RationalSampler s(31);
  for (int i = 0; i < 5; ++i) {
    auto [a, b] = s.next_generic_pair();
    auto a10 = verify_appendix_a(AppendixA::A10, 2, a, b);
    CHECK(a10.passed());
  }
  CHECK_THROWS_AS(verify_appendix_a(AppendixA::A1, -1, Rat(0)), SpecError);
}

TEST_CASE("all appendix A relations for n <= 10") {
  RationalSampler s(37);
  for (AppendixA id : kAllAppendixA) {
    const Family fam = appendix_a_family(id);
    for (int n = 0; n <= 10; ++n) {
      if (fam == Family::Hermite) {
        CHECK_MESSAGE(verify_appendix_a<Rat>(id, n).passed(), appendix_a_id(id), " n=", n);
      } else if (fam == Family::Laguerre) {
        CHECK_MESSAGE(verify_appendix_a(id, n, T).passed(), appendix_a_id(id), " n=", n);
        for (int i = 0; i < 3; ++i)
          CHECK_MESSAGE(verify_appendix_a(id, n, s.next()).passed(), appendix_a_id(id), " n=", n);
      } else {
        for (int i = 0; i < 5; ++i) {
          auto [a, b] = s.next_generic_pair();
          CHECK_MESSAGE(verify_appendix_a(id, n, a, b).passed(), appendix_a_id(id), " n=", n);
        }
      }
    }
  }
}

TEST_CASE("a perturbed relation is reported as failing with both sides") {
  // A4 with the wrong shift: compare L^{(a-1)}_n against L^{(a)}_n alone.
  auto good = verify_appendix_a(AppendixA::A4, 2, Rat(1, 3));
  CHECK(good.passed());
  auto bad = compare("probe", monic_laguerre(2, Rat(-2, 3)), monic_laguerre(2, Rat(1, 3)));
  CHECK_FALSE(bad.passed());
  CHECK(bad.left != bad.right);
}
