#ifndef AHSERIES_BIVAR_SERIES_HPP
#define AHSERIES_BIVAR_SERIES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ahseries/trunc_series.hpp"

namespace ahseries {

/// Truncated bivariate series over F_p, dense in the triangle i + j < D
/// where D is the total-degree precision.
class BivarSeries {
public:
  BivarSeries(std::uint32_t p, int total_precision);

  std::uint32_t prime() const noexcept { return p_; }
  int total_precision() const noexcept { return total_precision_; }

  std::uint32_t at(int i, int j) const;
  void set(int i, int j, std::uint32_t v);

  static BivarSeries constant(std::uint32_t p, int total_precision, std::uint32_t v);

  friend BivarSeries operator+(const BivarSeries& f, const BivarSeries& g);
  friend BivarSeries operator*(const BivarSeries& f, const BivarSeries& g);
  friend bool operator==(const BivarSeries& f, const BivarSeries& g);
  friend bool operator!=(const BivarSeries& f, const BivarSeries& g) { return !(f == g); }

private:
  std::size_t offset(int i, int j) const;
  void require_compatible(const BivarSeries& other) const;

  std::uint32_t p_;
  int total_precision_;
  std::vector<std::uint32_t> c_; // row i starts at i*D - i(i-1)/2, length D - i
};

/// f(X + Y) truncated to total degree D. A univariate input of precision
/// N supports total precision D <= N; anything larger throws
/// InsufficientPrecision instead of fabricating zero coefficients.
BivarSeries bivar_from_sum(const FpSeries& f, int total_precision);

/// Inverse with respect to the Cauchy product; constant term must be a unit.
BivarSeries bivar_invert(const BivarSeries& f);

/// (S(X+Y))^{-1} S(X) S(Y) truncated to total degree D, for S(0) = 1.
BivarSeries defect_series(const FpSeries& s, int total_precision);

struct SupportCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> offender; // lexicographically least (i, j)
};

/// True iff every nonzero coefficient sits at total degree divisible by p.
SupportCheck support_multiple_of_p(const BivarSeries& f);

} // namespace ahseries

#endif
