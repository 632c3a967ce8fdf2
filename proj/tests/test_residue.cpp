#include <doctest.h>

#include "ahseries/residue.hpp"

using namespace ahseries;

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(13));
  CHECK(is_prime(199));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91)); // 7 * 13
}

TEST_CASE("construction reduces and validates the modulus") {
  Residue a(10, 7);
  CHECK(a.value() == 3);
  Residue b(-1, 7);
  CHECK(b.value() == 6);
  CHECK_THROWS_AS(Residue(1, 4), NotPrime);
  CHECK_THROWS_AS(Residue(0, 1), NotPrime);
}

TEST_CASE("inverse examples") {
  CHECK(Residue(1, 7).inverse().value() == 1);
  CHECK(Residue(2, 3).inverse().value() == 2); // 2*2 = 4 = 1 mod 3
  CHECK(Residue(3, 5).inverse().value() == 2); // 3*2 = 6 = 1 mod 5
  CHECK_THROWS_AS(Residue(0, 5).inverse(), ZeroInverse);
}

TEST_CASE("mixed moduli are rejected, not coerced") {
  Residue a(1, 3), b(1, 5);
  CHECK_THROWS_AS((void)(a + b), RingMismatch);
  CHECK_THROWS_AS((void)(a * b), RingMismatch);
  CHECK_THROWS_AS((void)(a == b), RingMismatch);
}

TEST_CASE("field axioms, exhaustive for small primes") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    Fp field(p);
    for (std::uint32_t x = 0; x < p; ++x) {
      Residue a = field.from_int(x);
      CHECK(a + field.zero() == a);
      CHECK(a * field.one() == a);
      CHECK((a + (-a)).is_zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == field.one());
      for (std::uint32_t y = 0; y < p; ++y) {
        Residue b = field.from_int(y);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (std::uint32_t z = 0; z < p; ++z) {
          Residue c = field.from_int(z);
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("arithmetic stays in the field") {
  Fp field(13);
  Residue a = field.from_int(12), b = field.from_int(12);
  Residue c = a * b;
  CHECK(c.modulus() == 13);
  CHECK(c.value() == 1); // 144 = 11*13 + 1
  CHECK((a - b).is_zero());
}
