#include "ahseries/residue.hpp"

#include <utility>

namespace ahseries {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Residue::Residue(std::int64_t value, std::uint32_t modulus) {
  if (!is_prime(modulus)) {
    throw NotPrime("modulus " + std::to_string(modulus) + " is not prime");
  }
  std::int64_t m = static_cast<std::int64_t>(modulus);
  std::int64_t v = value % m;
  if (v < 0) v += m;
  value_ = static_cast<std::uint32_t>(v);
  modulus_ = modulus;
}

void Residue::require_same_field(const Residue& other) const {
  if (modulus_ != other.modulus_) {
    throw RingMismatch("residues from F_" + std::to_string(modulus_) + " and F_" +
                       std::to_string(other.modulus_));
  }
}

Residue Residue::inverse() const {
  if (value_ == 0) {
    throw ZeroInverse("zero has no inverse in F_" + std::to_string(modulus_));
  }
  // Extended Euclid on (value, modulus).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = modulus_, new_r = value_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += modulus_;
  return Residue(unchecked_t{}, static_cast<std::uint32_t>(t), modulus_);
}

Residue Residue::operator-() const noexcept {
  return Residue(unchecked_t{}, value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Residue& Residue::operator+=(const Residue& rhs) {
  require_same_field(rhs);
  std::uint64_t s = static_cast<std::uint64_t>(value_) + rhs.value_;
  if (s >= modulus_) s -= modulus_;
  value_ = static_cast<std::uint32_t>(s);
  return *this;
}

Residue& Residue::operator-=(const Residue& rhs) {
  require_same_field(rhs);
  std::uint64_t s = static_cast<std::uint64_t>(value_) + modulus_ - rhs.value_;
  if (s >= modulus_) s -= modulus_;
  value_ = static_cast<std::uint32_t>(s);
  return *this;
}

Residue& Residue::operator*=(const Residue& rhs) {
  require_same_field(rhs);
  value_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(value_) * rhs.value_ % modulus_);
  return *this;
}

bool operator==(const Residue& a, const Residue& b) {
  a.require_same_field(b);
  return a.value_ == b.value_;
}

std::string Residue::to_string() const { return std::to_string(value_); }

Fp::Fp(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  }
}

Residue Fp::from_int(std::int64_t v) const noexcept {
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return Residue(Residue::unchecked_t{}, static_cast<std::uint32_t>(r), p_);
}

std::string Fp::name() const { return "F_" + std::to_string(p_); }

} // namespace ahseries
