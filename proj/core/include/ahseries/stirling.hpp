#ifndef AHSERIES_STIRLING_HPP
#define AHSERIES_STIRLING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "ahseries/residue.hpp"

namespace ahseries {

/// Triangle of unsigned Stirling numbers of the first kind, exact
/// integers, built once by the recurrence s[n+1][k] = s[n][k-1] + n s[n][k].
class StirlingTable {
public:
  explicit StirlingTable(int n_max);

  int max_n() const noexcept { return n_max_; }

  /// s[n][i] for 0 <= i <= n <= max_n; throws IndexOutOfRange otherwise.
  const mpz_class& at(int n, int i) const;

private:
  int n_max_;
  std::vector<mpz_class> t_; // triangular, row n starts at n(n+1)/2
};

/// sum_{t=m}^{n} s[n][t] binom(t, m) == s[n+1][m+1], exactly.
bool check_stirling_binomial_identity(const StirlingTable& table, int n, int m);

/// The closed-form coefficient
///   (-1)^{k+1} sum_{j=0}^{r} s[p-k][j+1] c[(r-j)]  (mod p)
/// where c holds the p values c_0, c_p, ..., c_{(p-1)p} already reduced
/// mod p (with the +1 adjustment applied to the last entry by the caller).
/// Requires an odd p, 0 <= k < p, 0 <= r < p.
Residue closed_form_coefficient(const StirlingTable& table, std::uint32_t p, int r, int k,
                                std::span<const Residue> c);

} // namespace ahseries

#endif
