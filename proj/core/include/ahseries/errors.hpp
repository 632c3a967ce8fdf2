#ifndef AHSERIES_ERRORS_HPP
#define AHSERIES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ahseries {

/// Base class for all contract violations raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
public:
  using Error::Error;
};

/// Mixed-modulus or mixed-ring operands.
class RingMismatch : public Error {
public:
  using Error::Error;
};

class ZeroInverse : public Error {
public:
  using Error::Error;
};

/// Rational with negative p-adic valuation cannot be reduced mod p.
class NotPIntegral : public Error {
public:
  using Error::Error;
};

class NonUnitConstantTerm : public Error {
public:
  using Error::Error;
};

class NonzeroConstantTerm : public Error {
public:
  using Error::Error;
};

class ConstantTermNotOne : public Error {
public:
  using Error::Error;
};

class FactorialNotInvertible : public Error {
public:
  using Error::Error;
};

class OddPrimeRequired : public Error {
public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
public:
  using Error::Error;
};

/// A series expected to live on degrees divisible by p has a stray term.
class SupportViolation : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

} // namespace ahseries

#endif
