#ifndef AHSERIES_NAMED_SERIES_HPP
#define AHSERIES_NAMED_SERIES_HPP

#include <cstdint>

#include "ahseries/trunc_series.hpp"

namespace ahseries {

/// AH(X) = exp(sum_i X^{p^i}/p^i) over Q, built from the coefficient
/// recurrence u_n = (1/n) sum_i u_{n - p^i}, u_0 = 1.
QSeries artin_hasse_rational(std::uint32_t p, int precision);

/// The same series built through exp of the defining argument; serves as
/// an independent cross-check of the recurrence route.
QSeries artin_hasse_oracle(std::uint32_t p, int precision);

/// E_p(X): reduction of AH mod p. Every u_n is checked to be p-integral;
/// a NotPIntegral here would mean an arithmetic bug upstream.
FpSeries ep_series(std::uint32_t p, int precision);
FpSeries ep_from_rational(const QSeries& ah, std::uint32_t p);

/// T(X) = sum_{i>=1} X^{p^i} over F_p.
FpSeries t_series(std::uint32_t p, int precision);

/// T(X) over Q, for the all-rational product checks.
QSeries t_series_rational(std::uint32_t p, int precision);

/// e_p(X) = sum_{p | k} X^k / k! over Q: the p-multisection of exp(X).
QSeries ep_lower_series(std::uint32_t p, int precision);

/// S(X): the degree p-1 Laguerre polynomial with its parameter
/// specialized to -T(X), collected as a univariate series.
FpSeries s_series(std::uint32_t p, int precision);

/// G(X^p) = sum_n (-1)^n a_{np} X^{np}, built from E_p. Odd primes only.
FpSeries g_series(std::uint32_t p, int precision);
FpSeries g_from_ep(const FpSeries& ep);

/// Independent construction G = S / E_p; throws SupportViolation if the
/// quotient has a term off the multiples of p.
FpSeries g_series_variant(const FpSeries& s, const FpSeries& ep);

/// F(X^p) = 1/G(X^p) for odd p; for p = 2 the odd-indexed coefficients
/// of E_2 repackaged as sum_n a_{2n+1} X^{2n}.
FpSeries f_series(std::uint32_t p, int precision);

/// Every named series for one (p, N), built once and shared by the
/// verifiers. Construction is deterministic.
struct NamedSeriesSet {
  std::uint32_t p = 0;
  int precision = 0;
  QSeries ah;       // u_n over Q
  FpSeries ep;      // a_n
  FpSeries t;       // T
  QSeries ep_lower; // e_p over Q
  FpSeries s;       // Laguerre route
  FpSeries g;       // supported on multiples of p
  FpSeries f;       // 1/G, same support

  static NamedSeriesSet build(std::uint32_t p, int precision);

  /// Copy with a_degree bumped by delta and every ep-derived series (g, f)
  /// rebuilt from the mutated ep. The Laguerre-route s is left intact.
  NamedSeriesSet with_mutated_ep(int degree, std::uint32_t delta) const;
};

} // namespace ahseries

#endif
