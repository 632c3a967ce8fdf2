#include "ahseries/named_series.hpp"

#include <string>
#include <vector>

#include <gmpxx.h>

#include "ahseries/laguerre.hpp"

namespace ahseries {

QSeries artin_hasse_rational(std::uint32_t p, int precision) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  // Work with v_n = n! u_n, which stays integral: the recurrence
  // u_n = (1/n) sum_i u_{n-p^i} becomes
  // v_n = sum_i v_{n-p^i} * (n-1)!/(n-p^i)!, all integer products.
  // Each u_n is then v_n / n!, normalized once.
  int n = precision;
  std::vector<mpz_class> v(static_cast<std::size_t>(std::max(n, 1)));
  v[0] = 1;
  std::vector<mpz_class> falling; // falling[i] = (n-1)!/(n-p^i)!, updated per n
  std::vector<long> powers;       // p^i <= n so far
  mpz_class factorial = 1;
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  if (n > 0) coeffs.emplace_back(1);
  for (long m = 1; m < n; ++m) {
    // extend the power list when p^{i} reaches m
    long long next = powers.empty() ? p : static_cast<long long>(powers.back()) * p;
    if (next <= m) {
      powers.push_back(static_cast<long>(next));
      // (m-1)!/(m-p^i)! for the fresh power p^i = m is (m-1)!
      falling.push_back(factorial);
    }
    mpz_class vm = v[static_cast<std::size_t>(m - 1)]; // i = 0 term, factor 1
    for (std::size_t i = 0; i < powers.size(); ++i) {
      vm += v[static_cast<std::size_t>(m - powers[i])] * falling[i];
    }
    v[static_cast<std::size_t>(m)] = vm;
    // shift the falling factorials from n = m to n = m+1:
    // (m)!/(m+1-p^i)! = previous * m / (m+1-p^i)
    for (std::size_t i = 0; i < powers.size(); ++i) {
      falling[i] *= m;
      mpz_divexact_ui(falling[i].get_mpz_t(), falling[i].get_mpz_t(),
                      static_cast<unsigned long>(m + 1 - powers[i]));
    }
    factorial *= m;
    // factorial now holds m!, the denominator for u_m
    coeffs.emplace_back(vm, factorial);
  }
  return QSeries(QQ{}, std::move(coeffs));
}

QSeries artin_hasse_oracle(std::uint32_t p, int precision) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  QSeries arg(QQ{}, precision);
  mpz_class q = 1;
  for (long long deg = 1; deg < precision; deg *= p) {
    arg.set(static_cast<int>(deg), Rational(mpz_class(1), q));
    q *= p;
    if (deg > precision / static_cast<long long>(p)) break; // avoid overflow in deg *= p
  }
  return exp_series(arg);
}

FpSeries ep_from_rational(const QSeries& ah, std::uint32_t p) {
  return reduce_series_mod_p(ah, p);
}

FpSeries ep_series(std::uint32_t p, int precision) {
  return ep_from_rational(artin_hasse_rational(p, precision), p);
}

FpSeries t_series(std::uint32_t p, int precision) {
  Fp field(p);
  FpSeries t(field, precision);
  for (long long deg = p; deg < precision; deg *= p) {
    t.set(static_cast<int>(deg), field.one());
    if (deg > precision / static_cast<long long>(p)) break;
  }
  return t;
}

QSeries t_series_rational(std::uint32_t p, int precision) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  QSeries t(QQ{}, precision);
  for (long long deg = p; deg < precision; deg *= p) {
    t.set(static_cast<int>(deg), Rational(1));
    if (deg > precision / static_cast<long long>(p)) break;
  }
  return t;
}

QSeries ep_lower_series(std::uint32_t p, int precision) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  QSeries e(QQ{}, precision);
  mpz_class factorial = 1;
  for (int k = 0; k < precision; ++k) {
    if (k > 0) factorial *= k;
    if (k % static_cast<int>(p) == 0) e.set(k, Rational(mpz_class(1), factorial));
  }
  return e;
}

FpSeries s_series(std::uint32_t p, int precision) {
  ParamPoly laguerre = laguerre_pm1(p);
  FpSeries minus_t = -t_series(p, precision);
  return specialize_alpha_series(laguerre, minus_t);
}

FpSeries g_from_ep(const FpSeries& ep) {
  std::uint32_t p = ep.ring().modulus();
  if (p == 2) throw OddPrimeRequired("G from E_p coefficients needs an odd prime");
  FpSeries g(ep.ring(), ep.precision());
  Residue sign = ep.ring().one();
  for (int n = 0; n < ep.precision(); n += static_cast<int>(p)) {
    g.set(n, sign * ep[n]);
    sign = -sign;
  }
  return g;
}

FpSeries g_series(std::uint32_t p, int precision) {
  if (p == 2) throw OddPrimeRequired("G series needs an odd prime");
  return g_from_ep(ep_series(p, precision));
}

FpSeries g_series_variant(const FpSeries& s, const FpSeries& ep) {
  detail::require_same_ring(s, ep);
  FpSeries quotient = s * invert(ep);
  int p = static_cast<int>(ep.ring().modulus());
  for (int n = 0; n < quotient.precision(); ++n) {
    if (n % p != 0 && !quotient[n].is_zero()) {
      throw SupportViolation("S/E_p has a term at degree " + std::to_string(n) +
                             ", not a multiple of " + std::to_string(p));
    }
  }
  return quotient;
}

namespace {
// p = 2 only: F(X^2) = sum_n a_{2n+1} X^{2n}. The coefficient at even
// degree 2n needs a_{2n+1}, so an odd input precision determines F only
// one coefficient short; the result precision is rounded down to even.
FpSeries f_from_ep(const FpSeries& ep) {
  int m = ep.precision() - ep.precision() % 2;
  FpSeries f(ep.ring(), m);
  for (int n = 0; 2 * n + 1 < ep.precision(); ++n) f.set(2 * n, ep[2 * n + 1]);
  return f;
}
} // namespace

FpSeries f_series(std::uint32_t p, int precision) {
  if (p == 2) {
    FpSeries ep = ep_series(2, precision + precision % 2);
    return truncated(f_from_ep(ep), precision);
  }
  return invert(g_series(p, precision));
}

NamedSeriesSet NamedSeriesSet::build(std::uint32_t p, int precision) {
  // For p = 2 with odd N, one extra Artin-Hasse coefficient keeps F at
  // full precision.
  int build_precision = p == 2 ? precision + precision % 2 : precision;
  QSeries ah = artin_hasse_rational(p, build_precision);
  FpSeries ep = ep_from_rational(ah, p);
  FpSeries f = p == 2 ? truncated(f_from_ep(ep), precision) : FpSeries(ep.ring(), 0);
  FpSeries g = p == 2 ? invert(f) : g_from_ep(ep);
  if (p != 2) f = invert(g);
  if (build_precision != precision) {
    ah = truncated(ah, precision);
    ep = truncated(ep, precision);
  }
  return NamedSeriesSet{
      p,
      precision,
      std::move(ah),
      std::move(ep),
      t_series(p, precision),
      ep_lower_series(p, precision),
      s_series(p, precision),
      std::move(g),
      std::move(f),
  };
}

NamedSeriesSet NamedSeriesSet::with_mutated_ep(int degree, std::uint32_t delta) const {
  NamedSeriesSet out = *this;
  Fp field(p);
  out.ep.set(degree, out.ep[degree] + field.from_int(static_cast<std::int64_t>(delta)));
  if (p == 2) {
    out.f = f_from_ep(out.ep);
    // A mutation at degree 1 kills F's unit constant term; G = 1/F is
    // then undefined and left empty.
    out.g = out.f.precision() > 0 && !out.f[0].is_zero() ? invert(out.f) : FpSeries(field, 0);
  } else {
    out.g = g_from_ep(out.ep);
    out.f = invert(out.g);
  }
  return out;
}

} // namespace ahseries
