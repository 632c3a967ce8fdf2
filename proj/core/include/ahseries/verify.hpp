#ifndef AHSERIES_VERIFY_HPP
#define AHSERIES_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ahseries/named_series.hpp"

namespace ahseries {

enum class VerifyStatus {
  passed,
  failed,
  skipped,                // verifier not applicable to this prime
  insufficient_precision, // precision below the 2p working threshold
};

std::string_view to_string(VerifyStatus s) noexcept;

struct VerificationWitness {
  std::string lhs;
  std::string rhs;
};

/// Structured outcome of one identity check. `holds` is true exactly
/// when the check ran and found no discrepancy; a discrepancy degree and
/// witness pair are present exactly when it failed.
struct VerificationReport {
  std::string identity;
  std::uint32_t prime = 0;
  long precision = 0; // 0 on exact (untruncated) checks
  VerifyStatus status = VerifyStatus::skipped;
  bool holds = false;
  std::optional<long> first_discrepancy_degree; // total degree for bivariate checks
  std::optional<VerificationWitness> witness;
  std::chrono::duration<double> elapsed{0};
};

/// S(X) = E_p(X) * G(X^p), with S from the Laguerre route and G built
/// from the a_{np}; odd p, N >= 2p.
VerificationReport verify_eq2(const NamedSeriesSet& set);
VerificationReport verify_eq2(std::uint32_t p, int precision);

/// S(X) * T(X) * sum_n a_{np} X^{np} = X^p E_p(X); odd p, N >= 2p.
VerificationReport verify_eq3(const NamedSeriesSet& set);
VerificationReport verify_eq3(std::uint32_t p, int precision);

/// (sum_s a_{sp} X^{sp}) (sum_r a_{rp} (-X)^{rp}) T(X) = X^p; odd p.
VerificationReport verify_prop_xp(const NamedSeriesSet& set);
VerificationReport verify_prop_xp(std::uint32_t p, int precision);

/// e_p(X) e_p(-X) T(X) = X^p mod p, computed over exact rationals with a
/// p-integrality gate before reduction; odd p.
VerificationReport verify_prop_ep(const NamedSeriesSet& set);
VerificationReport verify_prop_ep(std::uint32_t p, int precision);

enum class WeakFeTarget { ep, s };

/// The defect series (S(X+Y))^{-1} S(X) S(Y) has support only at total
/// degrees divisible by p; checked for E_p or S at total degree D = N,
/// or at an explicit D <= N.
VerificationReport verify_weak_fe(WeakFeTarget target, const NamedSeriesSet& set);
VerificationReport verify_weak_fe(WeakFeTarget target, const NamedSeriesSet& set,
                                  int total_precision);
VerificationReport verify_weak_fe(WeakFeTarget target, std::uint32_t p, int total_precision);

/// Exact polynomial identity: the degree p-1 Laguerre polynomial times
/// its (alpha, X) -> (-alpha, -X) image reduces to 1 - alpha^{p-1}
/// modulo X^p - (alpha^p - alpha). No truncation involved.
VerificationReport verify_lemma_ss(std::uint32_t p);

/// p = 2 replacement: E_2 = (1 + X + sum X^{2^i}) sum_n a_{2n+1} X^{2n},
/// plus the intermediate step a_{2n} = a_{2n+1} + sum_i a_{2n+1-2^i}.
VerificationReport verify_remark_p2(const NamedSeriesSet& set);
VerificationReport verify_remark_p2(int precision);

/// The closed-form coefficients from the Stirling triangle match the
/// recursion-route a_{rp+k} for all rp+k < p^2; odd p.
VerificationReport verify_prop_coeffs(std::uint32_t p);
VerificationReport verify_prop_coeffs(const NamedSeriesSet& set);

/// Registered identity names, in the order verify_all reports them.
const std::vector<std::string>& identity_names();

/// Runs every registered verifier against one (p, N), reporting
/// non-applicable ones as skipped and under-precise ones as
/// insufficient_precision. Report order is deterministic.
std::vector<VerificationReport> verify_all(std::uint32_t p, int precision);
std::vector<VerificationReport> verify_all(const NamedSeriesSet& set);

/// Runs a single named identity (or "all") for the CLI.
std::vector<VerificationReport> run_identity(std::string_view name, const NamedSeriesSet& set);

} // namespace ahseries

#endif
