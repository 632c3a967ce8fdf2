#include <doctest.h>

#include <random>

#include "ahseries/rational.hpp"

using namespace ahseries;

TEST_CASE("rationals are kept normalized") {
  Rational a(6, 4);
  CHECK(a.numerator() == 3);
  CHECK(a.denominator() == 2);
  Rational b(-3, -6);
  CHECK(b.numerator() == 1);
  CHECK(b.denominator() == 2);
  Rational c(0, 17);
  CHECK(c.numerator() == 0);
  CHECK(c.denominator() == 1);
  CHECK(c.is_zero());
  CHECK_THROWS_AS(Rational(1, 0), ZeroInverse);
  CHECK(Rational(2, 4) == Rational(1, 2)); // equality is syntactic on normal forms
}

TEST_CASE("arithmetic and string form") {
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(7, 40) * Rational(40, 7)) == Rational(1));
  CHECK((Rational(1) / Rational(3)).to_string() == "1/3");
  CHECK(Rational(-7, 40).to_string() == "-7/40");
  CHECK(Rational(5).to_string() == "5");
  CHECK_THROWS_AS(Rational(1).inverse() / Rational(0), ZeroInverse);
  CHECK_THROWS_AS(Rational(0).inverse(), ZeroInverse);
}

TEST_CASE("p-adic valuation examples") {
  CHECK(p_adic_valuation(Rational(3, 8), 3) == 1);
  CHECK(p_adic_valuation(Rational(7, 40), 3) == 0);
  CHECK(p_adic_valuation(Rational(1, 9), 3) == -2);
  CHECK_FALSE(p_adic_valuation(Rational(0), 3).has_value()); // +infinity
  CHECK_THROWS_AS(p_adic_valuation(Rational(1), 6), NotPrime);
}

TEST_CASE("reduction mod p examples") {
  CHECK(reduce_rational_mod_p(Rational(1, 2), 3).value() == 2);
  CHECK(reduce_rational_mod_p(Rational(3, 8), 3).value() == 0);
  CHECK_THROWS_AS(reduce_rational_mod_p(Rational(1, 3), 3), NotPIntegral);
}

namespace {
Rational random_p_integral(std::mt19937_64& rng, std::uint32_t p) {
  std::uniform_int_distribution<int> num(-200, 200);
  std::uniform_int_distribution<int> den(1, 200);
  for (;;) {
    Rational q(num(rng), den(rng));
    auto v = p_adic_valuation(q, p);
    if (!v.has_value() || *v >= 0) return q;
  }
}
} // namespace

TEST_CASE("reduction is a ring homomorphism on p-integral rationals") {
  std::mt19937_64 rng(20240817);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 200; ++trial) {
      Rational q1 = random_p_integral(rng, p);
      Rational q2 = random_p_integral(rng, p);
      CHECK(reduce_rational_mod_p(q1 * q2, p) ==
            reduce_rational_mod_p(q1, p) * reduce_rational_mod_p(q2, p));
      CHECK(reduce_rational_mod_p(q1 + q2, p) ==
            reduce_rational_mod_p(q1, p) + reduce_rational_mod_p(q2, p));
    }
  }
}

TEST_CASE("valuation is additive on products") {
  std::mt19937_64 rng(424243);
  std::uniform_int_distribution<int> num(-500, 500);
  std::uniform_int_distribution<int> den(1, 500);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 300; ++trial) {
      Rational q1(num(rng), den(rng));
      Rational q2(num(rng), den(rng));
      if (q1.is_zero() || q2.is_zero()) continue;
      CHECK(*p_adic_valuation(q1 * q2, p) == *p_adic_valuation(q1, p) + *p_adic_valuation(q2, p));
    }
  }
}
