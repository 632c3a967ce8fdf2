#include "ahseries/rational.hpp"

namespace ahseries {

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) {
    throw ZeroInverse("rational with zero denominator");
  }
  q_ = mpq_class(std::move(num), std::move(den));
  q_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw ZeroInverse("zero has no reciprocal");
  }
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw ZeroInverse("division by zero rational");
  }
  q_ /= rhs.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::optional<long> p_adic_valuation(const Rational& q, std::uint32_t p) {
  if (!is_prime(p)) {
    throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  }
  if (q.is_zero()) return std::nullopt;
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class stripped;
  long vnum = static_cast<long>(mpz_remove(stripped.get_mpz_t(), q.numerator().get_mpz_t(), pz.get_mpz_t()));
  long vden = static_cast<long>(mpz_remove(stripped.get_mpz_t(), q.denominator().get_mpz_t(), pz.get_mpz_t()));
  return vnum - vden;
}

Residue reduce_rational_mod_p(const Rational& q, std::uint32_t p) {
  auto v = p_adic_valuation(q, p); // also validates p
  Fp field(p);
  if (!v.has_value() || *v > 0) return field.zero();
  if (*v < 0) {
    throw NotPIntegral("nu_" + std::to_string(p) + "(" + q.to_string() + ") = " +
                       std::to_string(*v) + " < 0");
  }
  // nu_p(q) = 0 and gcd(num, den) = 1, so both parts are p-adic units.
  mpz_class pz(static_cast<unsigned long>(p));
  Residue rn = field.from_int(mpz_class(q.numerator() % pz).get_si());
  Residue rd = field.from_int(mpz_class(q.denominator() % pz).get_si());
  return rn * rd.inverse();
}

} // namespace ahseries
