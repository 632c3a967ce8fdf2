#include "ahseries/laguerre.hpp"

#include <algorithm>
#include <sstream>

namespace ahseries {

ParamPoly::ParamPoly(std::uint32_t p) : p_(p), adeg_(0), xdeg_(0), c_(1, 0) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
}

ParamPoly ParamPoly::constant(std::uint32_t p, std::int64_t v) {
  ParamPoly r(p);
  r.set(0, 0, v);
  return r;
}

ParamPoly ParamPoly::alpha(std::uint32_t p) {
  ParamPoly r(p);
  r.set(1, 0, 1);
  return r;
}

ParamPoly ParamPoly::x(std::uint32_t p) {
  ParamPoly r(p);
  r.set(0, 1, 1);
  return r;
}

std::uint32_t ParamPoly::at(int d, int k) const noexcept {
  if (d < 0 || k < 0 || d > adeg_ || k > xdeg_) return 0;
  return c_[idx(d, k)];
}

void ParamPoly::set(int d, int k, std::int64_t v) {
  if (d < 0 || k < 0) throw IndexOutOfRange("negative monomial exponent");
  if (d > adeg_ || k > xdeg_) {
    int new_adeg = std::max(adeg_, d);
    int new_xdeg = std::max(xdeg_, k);
    std::vector<std::uint32_t> grown(
        static_cast<std::size_t>(new_adeg + 1) * static_cast<std::size_t>(new_xdeg + 1), 0);
    for (int dd = 0; dd <= adeg_; ++dd)
      for (int kk = 0; kk <= xdeg_; ++kk)
        grown[static_cast<std::size_t>(dd) * static_cast<std::size_t>(new_xdeg + 1) +
              static_cast<std::size_t>(kk)] = c_[idx(dd, kk)];
    adeg_ = new_adeg;
    xdeg_ = new_xdeg;
    c_ = std::move(grown);
  }
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  c_[idx(d, k)] = static_cast<std::uint32_t>(r);
}

bool ParamPoly::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

int ParamPoly::x_degree() const noexcept {
  for (int k = xdeg_; k >= 0; --k)
    for (int d = 0; d <= adeg_; ++d)
      if (c_[idx(d, k)] != 0) return k;
  return -1;
}

int ParamPoly::alpha_degree() const noexcept {
  for (int d = adeg_; d >= 0; --d)
    for (int k = 0; k <= xdeg_; ++k)
      if (c_[idx(d, k)] != 0) return d;
  return -1;
}

void ParamPoly::require_compatible(const ParamPoly& other) const {
  if (p_ != other.p_) {
    throw RingMismatch("polynomials over F_" + std::to_string(p_) + " and F_" +
                       std::to_string(other.p_));
  }
}

ParamPoly operator+(const ParamPoly& f, const ParamPoly& g) {
  f.require_compatible(g);
  ParamPoly r(f.p_);
  r.set(std::max(f.adeg_, g.adeg_), std::max(f.xdeg_, g.xdeg_), 0);
  for (int d = 0; d <= r.adeg_; ++d)
    for (int k = 0; k <= r.xdeg_; ++k)
      r.c_[r.idx(d, k)] = (f.at(d, k) + g.at(d, k)) % f.p_;
  return r;
}

ParamPoly operator-(const ParamPoly& f, const ParamPoly& g) {
  f.require_compatible(g);
  ParamPoly r(f.p_);
  r.set(std::max(f.adeg_, g.adeg_), std::max(f.xdeg_, g.xdeg_), 0);
  for (int d = 0; d <= r.adeg_; ++d)
    for (int k = 0; k <= r.xdeg_; ++k)
      r.c_[r.idx(d, k)] = (f.at(d, k) + f.p_ - g.at(d, k)) % f.p_;
  return r;
}

ParamPoly operator*(const ParamPoly& f, const ParamPoly& g) {
  f.require_compatible(g);
  ParamPoly r(f.p_);
  r.set(f.adeg_ + g.adeg_, f.xdeg_ + g.xdeg_, 0);
  std::uint64_t p = f.p_;
  for (int d1 = 0; d1 <= f.adeg_; ++d1) {
    for (int k1 = 0; k1 <= f.xdeg_; ++k1) {
      std::uint64_t cf = f.c_[f.idx(d1, k1)];
      if (cf == 0) continue;
      for (int d2 = 0; d2 <= g.adeg_; ++d2) {
        for (int k2 = 0; k2 <= g.xdeg_; ++k2) {
          std::uint64_t cg = g.c_[g.idx(d2, k2)];
          if (cg == 0) continue;
          std::size_t i = r.idx(d1 + d2, k1 + k2);
          r.c_[i] = static_cast<std::uint32_t>((r.c_[i] + cf * cg) % p);
        }
      }
    }
  }
  return r;
}

bool operator==(const ParamPoly& f, const ParamPoly& g) {
  f.require_compatible(g);
  int ad = std::max(f.adeg_, g.adeg_);
  int xd = std::max(f.xdeg_, g.xdeg_);
  for (int d = 0; d <= ad; ++d)
    for (int k = 0; k <= xd; ++k)
      if (f.at(d, k) != g.at(d, k)) return false;
  return true;
}

ParamPoly ParamPoly::scaled(std::int64_t c) const {
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t cr = c % m;
  if (cr < 0) cr += m;
  ParamPoly r(*this);
  for (auto& v : r.c_) v = static_cast<std::uint32_t>(v * static_cast<std::uint64_t>(cr) % p_);
  return r;
}

ParamPoly ParamPoly::negated_symbols() const {
  ParamPoly r(*this);
  for (int d = 0; d <= adeg_; ++d)
    for (int k = 0; k <= xdeg_; ++k)
      if ((d + k) % 2 == 1) {
        std::uint32_t v = r.c_[idx(d, k)];
        r.c_[idx(d, k)] = v == 0 ? 0 : p_ - v;
      }
  return r;
}

std::string ParamPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= adeg_; ++d) {
    for (int k = 0; k <= xdeg_; ++k) {
      std::uint32_t v = at(d, k);
      if (v == 0) continue;
      if (!first) os << " + ";
      os << v;
      if (d > 0) os << "*a^" << d;
      if (k > 0) os << "*X^" << k;
      first = false;
    }
  }
  if (first) os << "0";
  return os.str();
}

ParamPoly poly_binomial(const ParamPoly& a, unsigned m) {
  std::uint32_t p = a.prime();
  if (m >= p) {
    throw FactorialNotInvertible("m! is not invertible mod " + std::to_string(p) + " for m = " +
                                 std::to_string(m));
  }
  ParamPoly r = ParamPoly::constant(p, 1);
  std::uint64_t fact = 1;
  for (unsigned t = 0; t < m; ++t) {
    r = r * (a - ParamPoly::constant(p, static_cast<std::int64_t>(t)));
    fact = fact * ((t + 1) % p) % p;
  }
  Residue inv_fact = Fp(p).from_int(static_cast<std::int64_t>(fact)).inverse();
  return r.scaled(inv_fact.value());
}

ParamPoly laguerre_pm1(std::uint32_t p) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  ParamPoly alpha_minus_1 = ParamPoly::alpha(p) - ParamPoly::constant(p, 1);
  ParamPoly sum(p);
  Fp field(p);
  std::uint64_t fact = 1; // k! mod p, updated per term
  for (unsigned k = 0; k < p; ++k) {
    if (k > 0) fact = fact * (k % p) % p;
    ParamPoly term = poly_binomial(alpha_minus_1, p - 1 - k);
    // (-X)^k / k!
    std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    Residue coeff = field.from_int(sign) * field.from_int(static_cast<std::int64_t>(fact)).inverse();
    ParamPoly xk(p);
    xk.set(0, static_cast<int>(k), coeff.value());
    sum = sum + term * xk;
  }
  return sum;
}

FpSeries specialize_alpha_scalar(const ParamPoly& f, const Residue& a0) {
  if (a0.modulus() != f.prime()) {
    throw RingMismatch("scalar from F_" + std::to_string(a0.modulus()) +
                       " substituted into polynomial over F_" + std::to_string(f.prime()));
  }
  Fp field(f.prime());
  int n = f.x_degree_bound() + 1;
  FpSeries r(field, n);
  for (int k = 0; k < n; ++k) {
    Residue acc = field.zero();
    Residue pw = field.one();
    for (int d = 0; d <= f.alpha_degree_bound(); ++d) {
      if (f.at(d, k) != 0) acc += field.from_int(f.at(d, k)) * pw;
      pw *= a0;
    }
    r.set(k, acc);
  }
  return r;
}

FpSeries specialize_alpha_series(const ParamPoly& f, const FpSeries& a) {
  if (a.ring().modulus() != f.prime()) {
    throw RingMismatch("series over " + a.ring().name() + " substituted into polynomial over F_" +
                       std::to_string(f.prime()));
  }
  if (a.precision() > 0 && !a[0].is_zero()) {
    throw NonzeroConstantTerm("alpha substitution requires zero constant term");
  }
  Fp field(f.prime());
  int n = a.precision();
  FpSeries result(field, n);
  FpSeries pw = constant_series(field, n, field.one()); // a^0
  for (int d = 0; d <= f.alpha_degree_bound(); ++d) {
    for (int k = 0; k <= f.x_degree_bound() && k < n; ++k) {
      std::uint32_t cf = f.at(d, k);
      if (cf == 0) continue;
      // add cf * X^k * pw
      Residue c = field.from_int(cf);
      for (int i = 0; i + k < n; ++i) {
        if (pw[i].is_zero()) continue;
        result.set(i + k, result[i + k] + c * pw[i]);
      }
    }
    if (d < f.alpha_degree_bound()) pw = pw * a;
  }
  return result;
}

ParamPoly reduce_mod_weierstrass(const ParamPoly& f) {
  int p = static_cast<int>(f.prime());
  ParamPoly r = f;
  for (int k = r.x_degree(); k >= p; k = r.x_degree()) {
    // Clear the whole column X^k at once: X^k -> (alpha^p - alpha) X^{k-p}.
    for (int d = r.alpha_degree_bound(); d >= 0; --d) {
      std::int64_t v = r.at(d, k);
      if (v == 0) continue;
      r.set(d, k, 0);
      r.set(d + p, k - p, r.at(d + p, k - p) + v);
      r.set(d + 1, k - p, r.at(d + 1, k - p) - v);
    }
  }
  return r;
}

} // namespace ahseries
