#include "ahseries/verify.hpp"

#include <algorithm>

#include "ahseries/bivar_series.hpp"
#include "ahseries/laguerre.hpp"
#include "ahseries/stirling.hpp"

namespace ahseries {

std::string_view to_string(VerifyStatus s) noexcept {
  switch (s) {
    case VerifyStatus::passed: return "passed";
    case VerifyStatus::failed: return "failed";
    case VerifyStatus::skipped: return "skipped";
    case VerifyStatus::insufficient_precision: return "insufficient_precision";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Discrepancy {
  long degree;
  std::string lhs, rhs;
};

VerificationReport finish(std::string identity, std::uint32_t p, long precision,
                          const std::optional<Discrepancy>& d, Clock::time_point started) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.prime = p;
  r.precision = precision;
  if (d.has_value()) {
    r.status = VerifyStatus::failed;
    r.holds = false;
    r.first_discrepancy_degree = d->degree;
    r.witness = VerificationWitness{d->lhs, d->rhs};
  } else {
    r.status = VerifyStatus::passed;
    r.holds = true;
  }
  r.elapsed = Clock::now() - started;
  return r;
}

template <typename R>
std::optional<Discrepancy> compare_series(const TruncSeries<R>& lhs, const TruncSeries<R>& rhs) {
  auto diff = first_difference(lhs, rhs);
  if (!diff) return std::nullopt;
  return Discrepancy{diff->first, diff->second.first.to_string(), diff->second.second.to_string()};
}

void require_odd_prime(std::uint32_t p) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  if (p == 2) throw OddPrimeRequired("identity holds for odd primes only");
}

void require_precision(const NamedSeriesSet& set) {
  if (set.precision < 2 * static_cast<int>(set.p)) {
    throw InsufficientPrecision("precision " + std::to_string(set.precision) +
                                " is below 2p = " + std::to_string(2 * set.p));
  }
}

} // namespace

VerificationReport verify_eq2(const NamedSeriesSet& set) {
  require_odd_prime(set.p);
  require_precision(set);
  auto t0 = Clock::now();
  FpSeries rhs = set.ep * set.g;
  return finish("eq2", set.p, set.precision, compare_series(set.s, rhs), t0);
}

VerificationReport verify_eq2(std::uint32_t p, int precision) {
  require_odd_prime(p);
  return verify_eq2(NamedSeriesSet::build(p, precision));
}

VerificationReport verify_eq3(const NamedSeriesSet& set) {
  require_odd_prime(set.p);
  require_precision(set);
  auto t0 = Clock::now();
  FpSeries lhs = set.s * set.t * multisect(set.ep, static_cast<int>(set.p), 0);
  FpSeries xp = monomial(set.ep.ring(), set.precision, static_cast<int>(set.p), set.ep.ring().one());
  return finish("eq3", set.p, set.precision, compare_series(lhs, xp * set.ep), t0);
}

VerificationReport verify_eq3(std::uint32_t p, int precision) {
  require_odd_prime(p);
  return verify_eq3(NamedSeriesSet::build(p, precision));
}

VerificationReport verify_prop_xp(const NamedSeriesSet& set) {
  require_odd_prime(set.p);
  require_precision(set);
  auto t0 = Clock::now();
  FpSeries plus = multisect(set.ep, static_cast<int>(set.p), 0);
  FpSeries lhs = plus * substitute_neg(plus) * set.t;
  FpSeries xp = monomial(set.ep.ring(), set.precision, static_cast<int>(set.p), set.ep.ring().one());
  return finish("prop_xp", set.p, set.precision, compare_series(lhs, xp), t0);
}

VerificationReport verify_prop_xp(std::uint32_t p, int precision) {
  require_odd_prime(p);
  return verify_prop_xp(NamedSeriesSet::build(p, precision));
}

VerificationReport verify_prop_ep(const NamedSeriesSet& set) {
  require_odd_prime(set.p);
  require_precision(set);
  auto t0 = Clock::now();
  QSeries product =
      set.ep_lower * substitute_neg(set.ep_lower) * t_series_rational(set.p, set.precision);
  // The integrality gate: reduction throws NotPIntegral on any
  // coefficient with negative valuation, which would be an arithmetic
  // bug rather than a failed identity.
  FpSeries reduced = reduce_series_mod_p(product, set.p);
  FpSeries xp =
      monomial(reduced.ring(), set.precision, static_cast<int>(set.p), reduced.ring().one());
  return finish("prop_ep", set.p, set.precision, compare_series(reduced, xp), t0);
}

VerificationReport verify_prop_ep(std::uint32_t p, int precision) {
  require_odd_prime(p);
  return verify_prop_ep(NamedSeriesSet::build(p, precision));
}

namespace {
VerificationReport weak_fe_impl(std::string identity, const FpSeries& series, std::uint32_t p,
                                int total_precision) {
  if (total_precision < 2 * static_cast<int>(p)) {
    throw InsufficientPrecision("total degree " + std::to_string(total_precision) +
                                " is below 2p = " + std::to_string(2 * p));
  }
  auto t0 = Clock::now();
  BivarSeries defect = defect_series(series, total_precision);
  SupportCheck check = support_multiple_of_p(defect);
  std::optional<Discrepancy> d;
  if (!check.ok) {
    auto [i, j] = *check.offender;
    d = Discrepancy{static_cast<long>(i + j),
                    std::to_string(defect.at(i, j)) + " at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")",
                    "0"};
  }
  return finish(std::move(identity), p, total_precision, d, t0);
}
} // namespace

VerificationReport verify_weak_fe(WeakFeTarget target, const NamedSeriesSet& set) {
  return weak_fe_impl(target == WeakFeTarget::ep ? "weak_fe_ep" : "weak_fe_s",
                      target == WeakFeTarget::ep ? set.ep : set.s, set.p, set.precision);
}

VerificationReport verify_weak_fe(WeakFeTarget target, const NamedSeriesSet& set,
                                  int total_precision) {
  if (total_precision > set.precision) {
    throw InsufficientPrecision("window " + std::to_string(total_precision) +
                                " exceeds the set precision " + std::to_string(set.precision));
  }
  return weak_fe_impl(target == WeakFeTarget::ep ? "weak_fe_ep" : "weak_fe_s",
                      target == WeakFeTarget::ep ? set.ep : set.s, set.p, total_precision);
}

VerificationReport verify_weak_fe(WeakFeTarget target, std::uint32_t p, int total_precision) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  if (total_precision < 2 * static_cast<int>(p)) {
    throw InsufficientPrecision("total degree " + std::to_string(total_precision) +
                                " is below 2p = " + std::to_string(2 * p));
  }
  FpSeries series = target == WeakFeTarget::ep ? ep_series(p, total_precision)
                                               : s_series(p, total_precision);
  return weak_fe_impl(target == WeakFeTarget::ep ? "weak_fe_ep" : "weak_fe_s", series, p,
                      total_precision);
}

VerificationReport verify_lemma_ss(std::uint32_t p) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  auto t0 = Clock::now();
  ParamPoly laguerre = laguerre_pm1(p);
  ParamPoly reduced = reduce_mod_weierstrass(laguerre * laguerre.negated_symbols());
  ParamPoly expected(p);
  expected.set(0, 0, 1);
  if (p > 2) {
    expected.set(static_cast<int>(p) - 1, 0, -1);
  } else {
    expected.set(1, 0, 1); // 1 - alpha == 1 + alpha mod 2
  }
  std::optional<Discrepancy> d;
  int ad = std::max(reduced.alpha_degree_bound(), expected.alpha_degree_bound());
  int xd = std::max(reduced.x_degree_bound(), expected.x_degree_bound());
  for (int total = 0; total <= ad + xd && !d.has_value(); ++total) {
    for (int dd = 0; dd <= std::min(total, ad) && !d.has_value(); ++dd) {
      int kk = total - dd;
      if (kk > xd) continue;
      if (reduced.at(dd, kk) != expected.at(dd, kk)) {
        d = Discrepancy{static_cast<long>(total),
                        std::to_string(reduced.at(dd, kk)) + " at alpha^" + std::to_string(dd) +
                            " X^" + std::to_string(kk),
                        std::to_string(expected.at(dd, kk))};
      }
    }
  }
  return finish("lemma_ss", p, 0, d, t0);
}

VerificationReport verify_remark_p2(const NamedSeriesSet& set) {
  if (set.p != 2) throw OddPrimeRequired("the p = 2 replacement identity needs p = 2");
  if (set.precision < 4) {
    throw InsufficientPrecision("precision " + std::to_string(set.precision) + " is below 4");
  }
  auto t0 = Clock::now();
  std::optional<Discrepancy> d = compare_series(set.ep, set.s * set.f);
  if (!d.has_value()) {
    // a_{2n} = a_{2n+1} + sum_{2^i <= 2n+1} a_{2n+1 - 2^i}
    Fp field(2);
    for (int n = 0; 2 * n + 1 < set.precision; ++n) {
      Residue sum = set.ep[2 * n + 1];
      for (long long q = 2; q <= 2 * n + 1; q *= 2) {
        sum += set.ep[2 * n + 1 - static_cast<int>(q)];
      }
      if (sum != set.ep[2 * n]) {
        d = Discrepancy{2L * n, set.ep[2 * n].to_string(), sum.to_string() + " (recursion)"};
        break;
      }
    }
  }
  return finish("remark_p2", 2, set.precision, d, t0);
}

VerificationReport verify_remark_p2(int precision) {
  if (precision < 4) {
    throw InsufficientPrecision("precision " + std::to_string(precision) + " is below 4");
  }
  return verify_remark_p2(NamedSeriesSet::build(2, precision));
}

VerificationReport verify_prop_coeffs(const NamedSeriesSet& set) {
  require_odd_prime(set.p);
  int p = static_cast<int>(set.p);
  if (set.precision < p * p) {
    throw InsufficientPrecision("need precision >= p^2 = " + std::to_string(p * p));
  }
  auto t0 = Clock::now();
  StirlingTable table(p);
  Fp field(set.p);
  std::vector<Residue> c;
  c.reserve(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) c.push_back(set.ep[j * p]);
  c[static_cast<std::size_t>(p - 1)] += field.one();
  std::optional<Discrepancy> d;
  for (int n = 0; n < p * p && !d.has_value(); ++n) {
    int r = n / p, k = n % p;
    Residue closed = closed_form_coefficient(table, set.p, r, k, c);
    if (closed != set.ep[n]) {
      d = Discrepancy{static_cast<long>(n), closed.to_string() + " (closed form)",
                      set.ep[n].to_string()};
    }
  }
  return finish("prop_coeffs", set.p, p * p, d, t0);
}

VerificationReport verify_prop_coeffs(std::uint32_t p) {
  require_odd_prime(p);
  return verify_prop_coeffs(NamedSeriesSet::build(p, static_cast<int>(p) * static_cast<int>(p)));
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "eq2",     "eq3",       "prop_xp",   "prop_ep",     "weak_fe_ep",
      "weak_fe_s", "lemma_ss", "remark_p2", "prop_coeffs",
  };
  return names;
}

namespace {

VerificationReport not_run(std::string identity, std::uint32_t p, long precision,
                           VerifyStatus status) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.prime = p;
  r.precision = precision;
  r.status = status;
  r.holds = false;
  return r;
}

/// Dispatch one registered identity, mapping non-applicability and thin
/// precision to statuses instead of throws. `set` may be null when
/// precision < 2p; no verifier that needs it runs in that regime.
VerificationReport run_one(const std::string& name, std::uint32_t p, int n,
                           const NamedSeriesSet* set) {
  bool odd = p != 2;
  bool enough = n >= 2 * static_cast<int>(p);
  if (name == "eq2" || name == "eq3" || name == "prop_xp" || name == "prop_ep") {
    if (!odd) return not_run(name, p, n, VerifyStatus::skipped);
    if (!enough) return not_run(name, p, n, VerifyStatus::insufficient_precision);
    if (name == "eq2") return verify_eq2(*set);
    if (name == "eq3") return verify_eq3(*set);
    if (name == "prop_xp") return verify_prop_xp(*set);
    return verify_prop_ep(*set);
  }
  if (name == "weak_fe_ep" || name == "weak_fe_s") {
    if (!enough) return not_run(name, p, n, VerifyStatus::insufficient_precision);
    return verify_weak_fe(name == "weak_fe_ep" ? WeakFeTarget::ep : WeakFeTarget::s, *set);
  }
  if (name == "lemma_ss") {
    return verify_lemma_ss(p);
  }
  if (name == "remark_p2") {
    if (odd) return not_run(name, p, n, VerifyStatus::skipped);
    if (n < 4) return not_run(name, p, n, VerifyStatus::insufficient_precision);
    return verify_remark_p2(*set);
  }
  if (name == "prop_coeffs") {
    if (!odd) return not_run(name, p, n, VerifyStatus::skipped);
    if (set != nullptr && n >= static_cast<int>(p) * static_cast<int>(p)) {
      return verify_prop_coeffs(*set);
    }
    return verify_prop_coeffs(p); // builds its own p^2-precision set
  }
  throw IndexOutOfRange("unknown identity '" + name + "'");
}

} // namespace

std::vector<VerificationReport> verify_all(const NamedSeriesSet& set) {
  std::vector<VerificationReport> reports;
  reports.reserve(identity_names().size());
  for (const std::string& name : identity_names()) {
    reports.push_back(run_one(name, set.p, set.precision, &set));
  }
  return reports;
}

std::vector<VerificationReport> verify_all(std::uint32_t p, int precision) {
  if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
  if (precision < 2 * static_cast<int>(p)) {
    std::vector<VerificationReport> reports;
    for (const std::string& name : identity_names()) {
      reports.push_back(run_one(name, p, precision, nullptr));
    }
    return reports;
  }
  return verify_all(NamedSeriesSet::build(p, precision));
}

std::vector<VerificationReport> run_identity(std::string_view name, const NamedSeriesSet& set) {
  if (name == "all") return verify_all(set);
  const auto& names = identity_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw IndexOutOfRange("unknown identity '" + std::string(name) + "'");
  }
  return {run_one(std::string(name), set.p, set.precision, &set)};
}

} // namespace ahseries
