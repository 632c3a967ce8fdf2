#ifndef AHSERIES_TESTS_GENERATORS_HPP
#define AHSERIES_TESTS_GENERATORS_HPP

#include <random>

#include "ahseries/trunc_series.hpp"

namespace testgen {

inline ahseries::FpSeries random_fp_series(std::mt19937_64& rng, std::uint32_t p, int precision) {
  ahseries::Fp field(p);
  ahseries::FpSeries f(field, precision);
  std::uniform_int_distribution<std::int64_t> coeff(0, static_cast<std::int64_t>(p) - 1);
  for (int i = 0; i < precision; ++i) f.set(i, field.from_int(coeff(rng)));
  return f;
}

inline ahseries::QSeries random_q_series(std::mt19937_64& rng, int precision) {
  ahseries::QSeries f(ahseries::QQ{}, precision);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int i = 0; i < precision; ++i) f.set(i, ahseries::Rational(num(rng), den(rng)));
  return f;
}

} // namespace testgen

#endif
