#include "ahseries/trunc_series.hpp"

#include <sstream>

namespace ahseries {

QSeries exp_series(const QSeries& f) {
  if (f.precision() > 0 && !f[0].is_zero()) {
    throw NonzeroConstantTerm("exp requires zero constant term");
  }
  int n = f.precision();
  QSeries g(QQ{}, n);
  if (n == 0) return g;
  g.set(0, Rational(1));
  for (int m = 1; m < n; ++m) {
    Rational acc;
    for (int k = 1; k <= m; ++k) {
      if (f[k].is_zero()) continue;
      acc += Rational(k) * f[k] * g[m - k];
    }
    g.set(m, acc / Rational(m));
  }
  return g;
}

QSeries pth_root(const QSeries& f, std::uint32_t p) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  if (f.precision() > 0 && f[0] != Rational(1)) {
    throw ConstantTermNotOne("p-th root requires constant term 1");
  }
  int n = f.precision();
  QSeries h(QQ{}, n);
  if (n == 0) return h;
  h.set(0, Rational(1));
  Rational pr(static_cast<std::int64_t>(p));
  // From p h' f = f' h with f_0 = 1:
  //   p n h_n = sum_{k=1}^{n} k f_k h_{n-k} - p sum_{k=1}^{n-1} k h_k f_{n-k}
  for (int m = 1; m < n; ++m) {
    Rational acc;
    for (int k = 1; k <= m; ++k) {
      if (!f[k].is_zero()) acc += Rational(k) * f[k] * h[m - k];
    }
    for (int k = 1; k < m; ++k) {
      if (!h[k].is_zero() && !f[m - k].is_zero()) acc -= pr * Rational(k) * h[k] * f[m - k];
    }
    h.set(m, acc / (pr * Rational(m)));
  }
  return h;
}

FpSeries reduce_series_mod_p(const QSeries& f, std::uint32_t p) {
  Fp field(p);
  FpSeries r(field, f.precision());
  for (int i = 0; i < f.precision(); ++i) r.set(i, reduce_rational_mod_p(f[i], p));
  return r;
}

namespace {
template <typename S>
std::string render(const S& f, int max_terms) {
  std::ostringstream os;
  int shown = 0;
  for (int i = 0; i < f.precision() && shown < max_terms; ++i) {
    if (f[i].is_zero()) continue;
    if (shown > 0) os << " + ";
    os << f[i].to_string();
    if (i > 0) os << "*X^" << i;
    ++shown;
  }
  if (shown == 0) os << "0";
  os << " + O(X^" << f.precision() << ")";
  return os.str();
}
} // namespace

std::string to_string(const FpSeries& f, int max_terms) { return render(f, max_terms); }
std::string to_string(const QSeries& f, int max_terms) { return render(f, max_terms); }

} // namespace ahseries
