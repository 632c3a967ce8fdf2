#include "ahseries/stirling.hpp"

#include <string>

#include "ahseries/errors.hpp"

namespace ahseries {

namespace {
std::size_t tri(int n, int i) {
  return static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2 +
         static_cast<std::size_t>(i);
}
} // namespace

StirlingTable::StirlingTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw IndexOutOfRange("negative table size");
  t_.resize(tri(n_max, n_max) + 1);
  t_[tri(0, 0)] = 1;
  for (int n = 0; n < n_max; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      mpz_class v = 0;
      if (k >= 1) v += t_[tri(n, k - 1)];
      if (k <= n) v += n * t_[tri(n, k)];
      t_[tri(n + 1, k)] = v;
    }
  }
}

const mpz_class& StirlingTable::at(int n, int i) const {
  if (n < 0 || n > n_max_ || i < 0 || i > n) {
    throw IndexOutOfRange("stirling index (" + std::to_string(n) + "," + std::to_string(i) + ")");
  }
  return t_[tri(n, i)];
}

bool check_stirling_binomial_identity(const StirlingTable& table, int n, int m) {
  if (m < 0 || m > n || n + 1 > table.max_n()) {
    throw IndexOutOfRange("identity indices (" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
  mpz_class sum = 0;
  mpz_class binom;
  for (int t = m; t <= n; ++t) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(m));
    sum += table.at(n, t) * binom;
  }
  return sum == table.at(n + 1, m + 1);
}

Residue closed_form_coefficient(const StirlingTable& table, std::uint32_t p, int r, int k,
                                std::span<const Residue> c) {
  if (p == 2) throw OddPrimeRequired("closed-form coefficients need an odd prime");
  Fp field(p);
  if (r < 0 || r >= static_cast<int>(p) || k < 0 || k >= static_cast<int>(p)) {
    throw IndexOutOfRange("grid position (" + std::to_string(r) + "," + std::to_string(k) + ")");
  }
  if (c.size() != p) {
    throw IndexOutOfRange("expected " + std::to_string(p) + " c-values, got " +
                          std::to_string(c.size()));
  }
  if (static_cast<int>(p) > table.max_n()) {
    throw IndexOutOfRange("stirling table too small for p = " + std::to_string(p));
  }
  mpz_class pz(static_cast<unsigned long>(p));
  Residue acc = field.zero();
  for (int j = 0; j <= r; ++j) {
    int upper = static_cast<int>(p) - k; // row of the Stirling triangle
    if (j + 1 > upper) continue;         // s[n][i] = 0 for i > n
    if (c[static_cast<std::size_t>(r - j)].modulus() != p) {
      throw RingMismatch("c-value from a different field");
    }
    mpz_class s_mod = table.at(upper, j + 1) % pz;
    acc += field.from_int(s_mod.get_si()) * c[static_cast<std::size_t>(r - j)];
  }
  return (k % 2 == 0) ? -acc : acc; // (-1)^{k+1}
}

} // namespace ahseries
