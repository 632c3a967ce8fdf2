#ifndef AHSERIES_TRUNC_SERIES_HPP
#define AHSERIES_TRUNC_SERIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ahseries/errors.hpp"
#include "ahseries/rational.hpp"
#include "ahseries/residue.hpp"

namespace ahseries {

/// Dense truncated power series over a coefficient ring R (Fp or QQ).
///
/// `precision() == N` means the series is known modulo X^N; coeffs_ has
/// exactly N entries. Binary operations truncate to the minimum operand
/// precision. Equality compares up to the common precision and requires
/// identical rings; anything else throws RingMismatch.
template <typename R>
class TruncSeries {
public:
  using Ring = R;
  using Elem = typename R::Elem;

  /// Zero series known modulo X^precision.
  TruncSeries(R ring, int precision) : ring_(std::move(ring)) {
    if (precision < 0) throw IndexOutOfRange("negative precision");
    coeffs_.resize(static_cast<std::size_t>(precision), ring_.zero());
  }

  TruncSeries(R ring, std::vector<Elem> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (const Elem& c : coeffs_) {
      if (!ring_.contains(c)) throw RingMismatch("coefficient from a different ring");
    }
  }

  const R& ring() const noexcept { return ring_; }
  int precision() const noexcept { return static_cast<int>(coeffs_.size()); }

  const Elem& operator[](int n) const {
    if (n < 0 || n >= precision()) throw IndexOutOfRange("coefficient index " + std::to_string(n));
    return coeffs_[static_cast<std::size_t>(n)];
  }

  void set(int n, Elem v) {
    if (n < 0 || n >= precision()) throw IndexOutOfRange("coefficient index " + std::to_string(n));
    if (!ring_.contains(v)) throw RingMismatch("coefficient from a different ring");
    coeffs_[static_cast<std::size_t>(n)] = std::move(v);
  }

  bool is_zero() const {
    for (const Elem& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Largest degree with a nonzero coefficient, or nullopt for zero.
  std::optional<int> degree() const {
    for (int n = precision() - 1; n >= 0; --n)
      if (!coeffs_[static_cast<std::size_t>(n)].is_zero()) return n;
    return std::nullopt;
  }

private:
  R ring_;
  std::vector<Elem> coeffs_;
};

using FpSeries = TruncSeries<Fp>;
using QSeries = TruncSeries<QQ>;

namespace detail {
template <typename R>
void require_same_ring(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  if (f.ring() != g.ring()) {
    throw RingMismatch("series over " + f.ring().name() + " and " + g.ring().name());
  }
}
} // namespace detail

/// X^k * c, known modulo X^precision.
template <typename R>
TruncSeries<R> monomial(const R& ring, int precision, int k, typename R::Elem c) {
  TruncSeries<R> r(ring, precision);
  if (k < precision) r.set(k, std::move(c));
  return r;
}

template <typename R>
TruncSeries<R> constant_series(const R& ring, int precision, typename R::Elem c) {
  return monomial(ring, precision, 0, std::move(c));
}

template <typename R>
TruncSeries<R> operator+(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  detail::require_same_ring(f, g);
  int n = std::min(f.precision(), g.precision());
  TruncSeries<R> r(f.ring(), n);
  for (int i = 0; i < n; ++i) r.set(i, f[i] + g[i]);
  return r;
}

template <typename R>
TruncSeries<R> operator-(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  detail::require_same_ring(f, g);
  int n = std::min(f.precision(), g.precision());
  TruncSeries<R> r(f.ring(), n);
  for (int i = 0; i < n; ++i) r.set(i, f[i] - g[i]);
  return r;
}

template <typename R>
TruncSeries<R> operator-(const TruncSeries<R>& f) {
  TruncSeries<R> r(f.ring(), f.precision());
  for (int i = 0; i < f.precision(); ++i) r.set(i, -f[i]);
  return r;
}

/// Cauchy product truncated to the minimum operand precision.
template <typename R>
TruncSeries<R> operator*(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  detail::require_same_ring(f, g);
  int n = std::min(f.precision(), g.precision());
  std::vector<typename R::Elem> acc(static_cast<std::size_t>(n), f.ring().zero());
  for (int i = 0; i < n; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; j + i < n; ++j) {
      if (g[j].is_zero()) continue;
      acc[static_cast<std::size_t>(i + j)] += f[i] * g[j];
    }
  }
  return TruncSeries<R>(f.ring(), std::move(acc));
}

template <typename R>
TruncSeries<R> scale(const TruncSeries<R>& f, const typename R::Elem& c) {
  TruncSeries<R> r(f.ring(), f.precision());
  for (int i = 0; i < f.precision(); ++i) r.set(i, f[i] * c);
  return r;
}

/// Restrict to the first `precision` coefficients.
template <typename R>
TruncSeries<R> truncated(const TruncSeries<R>& f, int precision) {
  if (precision > f.precision()) {
    throw IndexOutOfRange("cannot extend precision by truncation");
  }
  TruncSeries<R> r(f.ring(), precision);
  for (int i = 0; i < precision; ++i) r.set(i, f[i]);
  return r;
}

/// Multiplicative inverse: f * invert(f) = 1 + O(X^N). The constant term
/// must be a unit.
template <typename R>
TruncSeries<R> invert(const TruncSeries<R>& f) {
  if (f.precision() == 0) return f;
  if (f[0].is_zero()) {
    throw NonUnitConstantTerm("cannot invert a series with zero constant term");
  }
  int n = f.precision();
  auto c0_inv = f[0].inverse();
  TruncSeries<R> r(f.ring(), n);
  r.set(0, c0_inv);
  for (int m = 1; m < n; ++m) {
    auto acc = f.ring().zero();
    for (int k = 1; k <= m; ++k) {
      if (f[k].is_zero()) continue;
      acc += f[k] * r[m - k];
    }
    r.set(m, -(acc * c0_inv));
  }
  return r;
}

/// Composition f(g(X)) via Horner; g must have zero constant term.
template <typename R>
TruncSeries<R> substitute(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  detail::require_same_ring(f, g);
  if (g.precision() > 0 && !g[0].is_zero()) {
    throw NonzeroConstantTerm("substituted series must have zero constant term");
  }
  int n = std::min(f.precision(), g.precision());
  TruncSeries<R> inner = truncated(g, n);
  TruncSeries<R> r(f.ring(), n);
  // Horner from the top; terms f_k g^k with k >= n vanish modulo X^n
  // because g has positive valuation.
  for (int k = std::min(f.precision(), n) - 1; k >= 0; --k) {
    r = r * inner;
    if (!f[k].is_zero()) r.set(0, r[0] + f[k]);
  }
  return r;
}

/// X -> cX, a cheap special case of substitution.
template <typename R>
TruncSeries<R> substitute_scaled(const TruncSeries<R>& f, const typename R::Elem& c) {
  TruncSeries<R> r(f.ring(), f.precision());
  auto pw = f.ring().one();
  for (int i = 0; i < f.precision(); ++i) {
    r.set(i, f[i] * pw);
    pw *= c;
  }
  return r;
}

/// X -> -X.
template <typename R>
TruncSeries<R> substitute_neg(const TruncSeries<R>& f) {
  return substitute_scaled(f, -f.ring().one());
}

/// X -> X^m for m >= 1, truncated to the original precision.
template <typename R>
TruncSeries<R> substitute_power(const TruncSeries<R>& f, int m) {
  if (m < 1) throw IndexOutOfRange("substitution exponent must be >= 1");
  TruncSeries<R> r(f.ring(), f.precision());
  for (int i = 0; static_cast<long long>(i) * m < f.precision(); ++i) {
    r.set(i * m, f[i]);
  }
  return r;
}

/// Keep exactly the terms of degree = r (mod m); precision unchanged.
template <typename R>
TruncSeries<R> multisect(const TruncSeries<R>& f, int m, int r) {
  if (m < 1 || r < 0 || r >= m) throw IndexOutOfRange("multisection class out of range");
  TruncSeries<R> out(f.ring(), f.precision());
  for (int i = r; i < f.precision(); i += m) out.set(i, f[i]);
  return out;
}

/// Termwise derivative; one coefficient of precision is lost.
template <typename R>
TruncSeries<R> derivative(const TruncSeries<R>& f) {
  int n = std::max(f.precision() - 1, 0);
  TruncSeries<R> r(f.ring(), n);
  for (int i = 0; i < n; ++i) r.set(i, f[i + 1] * f.ring().from_int(i + 1));
  return r;
}

/// Equality up to the common precision; identical rings required.
template <typename R>
bool operator==(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  detail::require_same_ring(f, g);
  int n = std::min(f.precision(), g.precision());
  for (int i = 0; i < n; ++i)
    if (f[i] != g[i]) return false;
  return true;
}

template <typename R>
bool operator!=(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  return !(f == g);
}

/// First degree where f and g disagree (within the common precision),
/// with the two offending coefficients.
template <typename R>
std::optional<std::pair<int, std::pair<typename R::Elem, typename R::Elem>>>
first_difference(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  detail::require_same_ring(f, g);
  int n = std::min(f.precision(), g.precision());
  for (int i = 0; i < n; ++i) {
    if (f[i] != g[i]) return std::make_pair(i, std::make_pair(f[i], g[i]));
  }
  return std::nullopt;
}

/// exp(f) for f over Q with f(0) = 0, via the recurrence
/// n g_n = sum_{k=1}^{n} k f_k g_{n-k} obtained from g' = f' g.
QSeries exp_series(const QSeries& f);

/// The unique h over Q with h(0) = 1 and h^p = f + O(X^N), for f(0) = 1.
/// Coefficients follow from p h' f = f' h.
QSeries pth_root(const QSeries& f, std::uint32_t p);

/// Coefficientwise reduction into F_p; throws NotPIntegral if any
/// coefficient has negative p-adic valuation.
FpSeries reduce_series_mod_p(const QSeries& f, std::uint32_t p);

std::string to_string(const FpSeries& f, int max_terms = 12);
std::string to_string(const QSeries& f, int max_terms = 12);

} // namespace ahseries

#endif
