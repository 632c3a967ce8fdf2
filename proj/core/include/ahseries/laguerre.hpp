#ifndef AHSERIES_LAGUERRE_HPP
#define AHSERIES_LAGUERRE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ahseries/trunc_series.hpp"

namespace ahseries {

/// Exact polynomial in two symbols (parameter alpha, variable X) over F_p.
/// No truncation: products grow the degree bounds as needed.
class ParamPoly {
public:
  /// The zero polynomial over F_p.
  explicit ParamPoly(std::uint32_t p);

  static ParamPoly constant(std::uint32_t p, std::int64_t v);
  static ParamPoly alpha(std::uint32_t p);
  static ParamPoly x(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }
  int alpha_degree_bound() const noexcept { return adeg_; } // highest stored row
  int x_degree_bound() const noexcept { return xdeg_; }

  /// Coefficient of alpha^d X^k; zero outside the stored bounds.
  std::uint32_t at(int d, int k) const noexcept;
  void set(int d, int k, std::int64_t v); // grows bounds as needed

  bool is_zero() const noexcept;
  int x_degree() const noexcept;     // -1 for the zero polynomial
  int alpha_degree() const noexcept; // -1 for the zero polynomial

  friend ParamPoly operator+(const ParamPoly& f, const ParamPoly& g);
  friend ParamPoly operator-(const ParamPoly& f, const ParamPoly& g);
  friend ParamPoly operator*(const ParamPoly& f, const ParamPoly& g);
  friend bool operator==(const ParamPoly& f, const ParamPoly& g);
  friend bool operator!=(const ParamPoly& f, const ParamPoly& g) { return !(f == g); }

  ParamPoly scaled(std::int64_t c) const;

  /// (alpha, X) -> (-alpha, -X).
  ParamPoly negated_symbols() const;

  std::string to_string() const;

private:
  void require_compatible(const ParamPoly& other) const;
  std::size_t idx(int d, int k) const noexcept {
    return static_cast<std::size_t>(d) * static_cast<std::size_t>(xdeg_ + 1) +
           static_cast<std::size_t>(k);
  }

  std::uint32_t p_;
  int adeg_, xdeg_; // storage bounds, inclusive
  std::vector<std::uint32_t> c_;
};

/// A (A-1) (A-2) ... (A-m+1) / m! for m < p; the binomial coefficient
/// "A choose m" as an exact polynomial.
ParamPoly poly_binomial(const ParamPoly& a, unsigned m);

/// The degree p-1 generalized Laguerre polynomial
/// sum_{k=0}^{p-1} binom(alpha-1, p-1-k) (-X)^k / k!  in F_p[alpha, X].
ParamPoly laguerre_pm1(std::uint32_t p);

/// Substitute alpha = a0, giving an exact polynomial in X (as a series
/// of precision x_degree_bound + 1).
FpSeries specialize_alpha_scalar(const ParamPoly& f, const Residue& a0);

/// Substitute alpha = A(X) for a series A with zero constant term and
/// collect as a univariate series of A's precision.
FpSeries specialize_alpha_series(const ParamPoly& f, const FpSeries& a);

/// Rewrite X^p -> alpha^p - alpha, highest X-powers first, until the
/// X-degree drops below p. Exact polynomial arithmetic throughout.
ParamPoly reduce_mod_weierstrass(const ParamPoly& f);

} // namespace ahseries

#endif
