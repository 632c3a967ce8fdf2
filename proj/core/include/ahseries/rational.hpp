#ifndef AHSERIES_RATIONAL_HPP
#define AHSERIES_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "ahseries/errors.hpp"
#include "ahseries/residue.hpp"

namespace ahseries {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Always normalized: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(std::int64_t n) : q_(static_cast<long>(n)) {} // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  Rational(mpz_class num, mpz_class den);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }

  /// Reciprocal; throws ZeroInverse on zero.
  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  /// "num/den" when den != 1, plain "num" otherwise.
  std::string to_string() const;

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// nu_p(q) = nu_p(num) - nu_p(den); std::nullopt encodes +infinity (q = 0).
/// Throws NotPrime unless p is prime.
std::optional<long> p_adic_valuation(const Rational& q, std::uint32_t p);

/// Reduction of a p-integral rational into F_p. Throws NotPIntegral when
/// nu_p(q) < 0.
Residue reduce_rational_mod_p(const Rational& q, std::uint32_t p);

/// Ring descriptor for Q, the counterpart of Fp for rational series.
class QQ {
public:
  using Elem = Rational;

  std::string name() const { return "Q"; }
  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(v); }
  bool contains(const Rational&) const noexcept { return true; }

  friend bool operator==(const QQ&, const QQ&) noexcept { return true; }
  friend bool operator!=(const QQ&, const QQ&) noexcept { return false; }
};

} // namespace ahseries

#endif
