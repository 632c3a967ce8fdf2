#include <doctest.h>

#include <random>

#include "ahseries/bivar_series.hpp"
#include "ahseries/named_series.hpp"
#include "generators.hpp"

using namespace ahseries;
using testgen::random_fp_series;

namespace {

BivarSeries x_plus_y(std::uint32_t p, int d) {
  BivarSeries r(p, d);
  r.set(1, 0, 1);
  r.set(0, 1, 1);
  return r;
}

FpSeries trunc_exp_mod_p(std::uint32_t p, int precision) {
  // sum_{k<p} X^k / k! reduced mod p
  Fp field(p);
  FpSeries f(field, precision);
  Residue inv_fact = field.one();
  for (std::uint32_t k = 0; k < p && static_cast<int>(k) < precision; ++k) {
    if (k > 0) inv_fact *= field.from_int(static_cast<std::int64_t>(k)).inverse();
    f.set(static_cast<int>(k), inv_fact);
  }
  return f;
}

} // namespace

TEST_CASE("bivariate product and sum basics") {
  // (X+Y)(X-Y) = X^2 - Y^2 over F_7
  BivarSeries a = x_plus_y(7, 6);
  BivarSeries b(7, 6);
  b.set(1, 0, 1);
  b.set(0, 1, 6);
  BivarSeries expected(7, 6);
  expected.set(2, 0, 1);
  expected.set(0, 2, 6);
  CHECK(a * b == expected);

  BivarSeries zero(7, 6);
  CHECK(a + zero == a);

  // Frobenius: (X+Y)^5 = X^5 + Y^5 over F_5, D=10
  BivarSeries s = x_plus_y(5, 10);
  BivarSeries pw = BivarSeries::constant(5, 10, 1);
  for (int i = 0; i < 5; ++i) pw = pw * s;
  BivarSeries frob(5, 10);
  frob.set(5, 0, 1);
  frob.set(0, 5, 1);
  CHECK(pw == frob);

  CHECK_THROWS_AS((void)(x_plus_y(3, 5) * x_plus_y(5, 5)), RingMismatch);
}

TEST_CASE("univariate to bivariate via X+Y") {
  Fp field(5);
  FpSeries xsq(field, 6);
  xsq.set(2, field.one());
  BivarSeries lifted = bivar_from_sum(xsq, 6);
  BivarSeries expected(5, 6);
  expected.set(2, 0, 1);
  expected.set(1, 1, 2);
  expected.set(0, 2, 1);
  CHECK(lifted == expected);

  FpSeries one = constant_series(field, 6, field.one());
  CHECK(bivar_from_sum(one, 6) == BivarSeries::constant(5, 6, 1));

  // E_3(X+Y): constant term 1, degree-1 part X + Y
  FpSeries ep = ep_series(3, 12);
  BivarSeries lifted_ep = bivar_from_sum(ep, 12);
  CHECK(lifted_ep.at(0, 0) == 1);
  CHECK(lifted_ep.at(1, 0) == 1);
  CHECK(lifted_ep.at(0, 1) == 1);
}

TEST_CASE("bivar_from_sum is a ring homomorphism") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    FpSeries f = random_fp_series(rng, 5, 16);
    FpSeries g = random_fp_series(rng, 5, 16);
    CHECK(bivar_from_sum(f * g, 16) == bivar_from_sum(f, 16) * bivar_from_sum(g, 16));
  }
}

TEST_CASE("bivariate inversion") {
  // 1 - X - Y inverts to the geometric expansion, D=3
  BivarSeries f(7, 3);
  f.set(0, 0, 1);
  f.set(1, 0, 6);
  f.set(0, 1, 6);
  BivarSeries inv = bivar_invert(f);
  BivarSeries expected(7, 3);
  expected.set(0, 0, 1);
  expected.set(1, 0, 1);
  expected.set(0, 1, 1);
  expected.set(2, 0, 1);
  expected.set(1, 1, 2);
  expected.set(0, 2, 1);
  CHECK(inv == expected);

  CHECK(bivar_invert(BivarSeries::constant(7, 4, 1)) == BivarSeries::constant(7, 4, 1));
  CHECK_THROWS_AS(bivar_invert(BivarSeries(7, 4)), NonUnitConstantTerm);

  // round trip against E_3(X+Y)
  FpSeries ep = ep_series(3, 10);
  BivarSeries lifted = bivar_from_sum(ep, 10);
  CHECK(bivar_invert(lifted) * lifted == BivarSeries::constant(3, 10, 1));
}

TEST_CASE("support check reports the least offender") {
  BivarSeries good(3, 8);
  good.set(0, 0, 1);
  good.set(3, 3, 1);
  SupportCheck ok = support_multiple_of_p(good);
  CHECK(ok.ok);
  CHECK_FALSE(ok.offender.has_value());

  BivarSeries bad(3, 4);
  bad.set(1, 0, 1);
  SupportCheck found = support_multiple_of_p(bad);
  CHECK_FALSE(found.ok);
  CHECK(found.offender == std::make_pair(1, 0));
}

TEST_CASE("defect series of E_p lives on multiples of p") {
  Fp field(3);
  FpSeries one = constant_series(field, 12, field.one());
  CHECK(defect_series(one, 12) == BivarSeries::constant(3, 12, 1));

  FpSeries ep = ep_series(3, 12);
  BivarSeries defect = defect_series(ep, 12);
  CHECK(defect.at(0, 0) == 1);
  CHECK(support_multiple_of_p(defect).ok);
  // nonzero mass above degree zero: the defect is not trivially 1
  bool has_higher_term = false;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j + i < 12; ++j)
      if (i + j > 0 && defect.at(i, j) != 0) has_higher_term = true;
  CHECK(has_higher_term);

  for (std::uint32_t p : {3u, 5u, 7u}) {
    int d = 4 * static_cast<int>(p); // at least 3p; 12 for p = 3
    CHECK(support_multiple_of_p(defect_series(ep_series(p, d), d)).ok);
    CHECK(support_multiple_of_p(defect_series(s_series(p, 40), d)).ok);
  }
}

TEST_CASE("defect series is symmetric in the two variables") {
  FpSeries s = s_series(5, 15);
  BivarSeries defect = defect_series(s, 15);
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j + i < 15; ++j) CHECK(defect.at(i, j) == defect.at(j, i));
}

TEST_CASE("truncated exponential is a negative control") {
  FpSeries te = trunc_exp_mod_p(3, 6);
  BivarSeries defect = defect_series(te, 6);
  SupportCheck check = support_multiple_of_p(defect);
  CHECK_FALSE(check.ok);
  REQUIRE(check.offender.has_value());
  int total = check.offender->first + check.offender->second;
  CHECK(total > 3);
  CHECK(total <= 6);

  FpSeries not_unit(Fp(3), 6);
  not_unit.set(0, Fp(3).from_int(2));
  CHECK_THROWS_AS(defect_series(not_unit, 6), NonUnitConstantTerm);
}

TEST_CASE("a short series cannot support a wide total degree") {
  FpSeries ep = ep_series(3, 8);
  CHECK_THROWS_AS(bivar_from_sum(ep, 12), InsufficientPrecision);
  CHECK_THROWS_AS(defect_series(ep, 12), InsufficientPrecision);
}
