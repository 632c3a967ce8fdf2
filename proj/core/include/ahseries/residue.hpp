#ifndef AHSERIES_RESIDUE_HPP
#define AHSERIES_RESIDUE_HPP

#include <cstdint>
#include <string>

#include "ahseries/errors.hpp"

namespace ahseries {

/// Trial-division primality test; meant for desk-scale moduli.
bool is_prime(std::uint64_t n) noexcept;

/// An element of the prime field F_p. Each value carries its modulus so
/// that operations on residues from different fields fail loudly instead
/// of coercing.
class Residue {
public:
  /// Reduces `value` into [0, modulus). Throws NotPrime unless the
  /// modulus is prime.
  Residue(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  /// Multiplicative inverse; throws ZeroInverse on zero.
  Residue inverse() const;

  Residue operator-() const noexcept;
  Residue& operator+=(const Residue& rhs);
  Residue& operator-=(const Residue& rhs);
  Residue& operator*=(const Residue& rhs);

  friend Residue operator+(Residue lhs, const Residue& rhs) { return lhs += rhs; }
  friend Residue operator-(Residue lhs, const Residue& rhs) { return lhs -= rhs; }
  friend Residue operator*(Residue lhs, const Residue& rhs) { return lhs *= rhs; }

  /// Equality is a field-element comparison; comparing residues from
  /// different fields is a contract violation.
  friend bool operator==(const Residue& a, const Residue& b);
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

  std::string to_string() const;

private:
  friend class Fp;
  struct unchecked_t {};
  Residue(unchecked_t, std::uint32_t value, std::uint32_t modulus) noexcept
      : value_(value), modulus_(modulus) {}

  void require_same_field(const Residue& other) const;

  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// Ring descriptor for F_p; hands out residues without re-running the
/// primality check on every construction.
class Fp {
public:
  using Elem = Residue;

  explicit Fp(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  Residue zero() const noexcept { return Residue(Residue::unchecked_t{}, 0, p_); }
  Residue one() const noexcept { return Residue(Residue::unchecked_t{}, p_ == 1 ? 0 : 1, p_); }
  Residue from_int(std::int64_t v) const noexcept;
  bool contains(const Residue& r) const noexcept { return r.modulus() == p_; }

  friend bool operator==(const Fp& a, const Fp& b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(const Fp& a, const Fp& b) noexcept { return !(a == b); }

  std::string name() const;

private:
  std::uint32_t p_;
};

} // namespace ahseries

#endif
