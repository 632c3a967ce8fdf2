#include "ahseries/bivar_series.hpp"

#include <string>

namespace ahseries {

BivarSeries::BivarSeries(std::uint32_t p, int total_precision)
    : p_(p), total_precision_(total_precision) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  if (total_precision < 0) throw IndexOutOfRange("negative total precision");
  std::size_t d = static_cast<std::size_t>(total_precision);
  c_.assign(d * (d + 1) / 2, 0);
}

std::size_t BivarSeries::offset(int i, int j) const {
  if (i < 0 || j < 0 || i + j >= total_precision_) {
    throw IndexOutOfRange("bivariate index (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  std::size_t d = static_cast<std::size_t>(total_precision_);
  std::size_t row = static_cast<std::size_t>(i);
  return row * d - row * (row - 1) / 2 + static_cast<std::size_t>(j);
}

std::uint32_t BivarSeries::at(int i, int j) const { return c_[offset(i, j)]; }

void BivarSeries::set(int i, int j, std::uint32_t v) { c_[offset(i, j)] = v % p_; }

BivarSeries BivarSeries::constant(std::uint32_t p, int total_precision, std::uint32_t v) {
  BivarSeries r(p, total_precision);
  if (total_precision > 0) r.set(0, 0, v);
  return r;
}

void BivarSeries::require_compatible(const BivarSeries& other) const {
  if (p_ != other.p_) {
    throw RingMismatch("bivariate series over F_" + std::to_string(p_) + " and F_" +
                       std::to_string(other.p_));
  }
}

BivarSeries operator+(const BivarSeries& f, const BivarSeries& g) {
  f.require_compatible(g);
  int d = std::min(f.total_precision_, g.total_precision_);
  BivarSeries r(f.p_, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j + i < d; ++j) r.set(i, j, f.at(i, j) + g.at(i, j));
  return r;
}

BivarSeries operator*(const BivarSeries& f, const BivarSeries& g) {
  f.require_compatible(g);
  int d = std::min(f.total_precision_, g.total_precision_);
  std::uint64_t p = f.p_;
  BivarSeries r(f.p_, d);
  // Accumulate in 64 bits; p^2 * (#monomials) stays far below 2^64 for
  // desk-scale p and D.
  std::vector<std::uint64_t> acc(r.c_.size(), 0);
  for (int i1 = 0; i1 < d; ++i1) {
    for (int j1 = 0; j1 + i1 < d; ++j1) {
      std::uint64_t cf = f.at(i1, j1);
      if (cf == 0) continue;
      for (int i2 = 0; i1 + j1 + i2 < d; ++i2) {
        for (int j2 = 0; i1 + j1 + i2 + j2 < d; ++j2) {
          std::uint64_t cg = g.at(i2, j2);
          if (cg == 0) continue;
          acc[r.offset(i1 + i2, j1 + j2)] += cf * cg;
        }
      }
    }
  }
  for (std::size_t k = 0; k < acc.size(); ++k) {
    r.c_[k] = static_cast<std::uint32_t>(acc[k] % p);
  }
  return r;
}

bool operator==(const BivarSeries& f, const BivarSeries& g) {
  f.require_compatible(g);
  int d = std::min(f.total_precision_, g.total_precision_);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j + i < d; ++j)
      if (f.at(i, j) != g.at(i, j)) return false;
  return true;
}

BivarSeries bivar_from_sum(const FpSeries& f, int total_precision) {
  if (f.precision() < total_precision) {
    throw InsufficientPrecision("series of precision " + std::to_string(f.precision()) +
                                " cannot support total degree " + std::to_string(total_precision));
  }
  std::uint32_t p = f.ring().modulus();
  BivarSeries r(p, total_precision);
  int d = total_precision;
  // Pascal triangle mod p.
  std::vector<std::vector<std::uint32_t>> binom(static_cast<std::size_t>(d));
  for (int n = 0; n < d; ++n) {
    auto& row = binom[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k) {
      row[static_cast<std::size_t>(k)] =
          (binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
           binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)]) %
          p;
    }
  }
  for (int n = 0; n < d && n < f.precision(); ++n) {
    std::uint64_t cn = f[n].value();
    if (cn == 0) continue;
    for (int i = 0; i <= n; ++i) {
      std::uint64_t v =
          cn * binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] % p;
      r.set(i, n - i, static_cast<std::uint32_t>(v));
    }
  }
  return r;
}

BivarSeries bivar_invert(const BivarSeries& f) {
  int d = f.total_precision();
  std::uint64_t p = f.prime();
  if (d == 0) return f;
  std::uint64_t c0 = f.at(0, 0);
  if (c0 == 0) throw NonUnitConstantTerm("cannot invert a bivariate series with zero constant term");
  Fp field(f.prime());
  std::uint64_t c0_inv = field.from_int(static_cast<std::int64_t>(c0)).inverse().value();
  BivarSeries r(f.prime(), d);
  r.set(0, 0, static_cast<std::uint32_t>(c0_inv));
  // By increasing total degree: r[i][j] = -c0^{-1} sum_{(k,l) != (0,0)} f[k][l] r[i-k][j-l].
  for (int td = 1; td < d; ++td) {
    for (int i = 0; i <= td; ++i) {
      int j = td - i;
      std::uint64_t acc = 0;
      for (int k = 0; k <= i; ++k) {
        for (int l = 0; l <= j; ++l) {
          if (k == 0 && l == 0) continue;
          std::uint64_t cf = f.at(k, l);
          if (cf == 0) continue;
          acc += cf * r.at(i - k, j - l);
        }
      }
      acc %= p;
      std::uint64_t v = acc == 0 ? 0 : p - acc;
      r.set(i, j, static_cast<std::uint32_t>(v * c0_inv % p));
    }
  }
  return r;
}

BivarSeries defect_series(const FpSeries& s, int total_precision) {
  if (s.precision() < total_precision) {
    throw InsufficientPrecision("series of precision " + std::to_string(s.precision()) +
                                " cannot support total degree " + std::to_string(total_precision));
  }
  if (s.precision() > 0 && s[0] != s.ring().one()) {
    throw NonUnitConstantTerm("defect series requires S(0) = 1");
  }
  std::uint32_t p = s.ring().modulus();
  std::uint64_t pw = p;
  int d = total_precision;
  BivarSeries inv_sum = bivar_invert(bivar_from_sum(s, d));
  // S(X) S(Y) is rank one; build it directly.
  BivarSeries prod(p, d);
  for (int i = 0; i < d && i < s.precision(); ++i) {
    std::uint64_t ci = s[i].value();
    if (ci == 0) continue;
    for (int j = 0; j + i < d && j < s.precision(); ++j) {
      prod.set(i, j, static_cast<std::uint32_t>(ci * s[j].value() % pw));
    }
  }
  return inv_sum * prod;
}

SupportCheck support_multiple_of_p(const BivarSeries& f) {
  int p = static_cast<int>(f.prime());
  for (int i = 0; i < f.total_precision(); ++i) {
    for (int j = 0; j + i < f.total_precision(); ++j) {
      if (f.at(i, j) != 0 && (i + j) % p != 0) {
        return SupportCheck{false, std::make_pair(i, j)};
      }
    }
  }
  return SupportCheck{};
}

} // namespace ahseries
