// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any fails. Heavier than the unit tests; expect a few minutes.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "ahseries/bivar_series.hpp"
#include "ahseries/laguerre.hpp"
#include "ahseries/named_series.hpp"
#include "ahseries/stirling.hpp"
#include "ahseries/verify.hpp"

using namespace ahseries;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& fn) {
  std::string detail;
  bool ok = false;
  auto t0 = Clock::now();
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double elapsed = seconds_since(t0);
  char line[160];
  std::snprintf(line, sizeof(line), "[%s] criterion %2d: %s (%.2f s)", ok ? "PASS" : "FAIL", number,
                label.c_str(), elapsed);
  std::cout << line << "\n";
  if (!detail.empty()) std::cout << "        " << detail << "\n";
  std::cout.flush();
  if (!ok) ++g_failures;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  CliResult result;
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

FpSeries trunc_exp_mod_p(std::uint32_t p, int precision) {
  Fp field(p);
  FpSeries f(field, precision);
  Residue inv_fact = field.one();
  for (std::uint32_t k = 0; k < p && static_cast<int>(k) < precision; ++k) {
    if (k > 0) inv_fact *= field.from_int(static_cast<std::int64_t>(k)).inverse();
    f.set(static_cast<int>(k), inv_fact);
  }
  return f;
}

} // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : AHSERIES_CLI_PATH;

  // 1. The recurrence and the exponential construction agree exactly.
  criterion(1, "recurrence/exp-oracle agreement, p in {2,3,5,7}, N=120, < 10 s", [](std::string& detail) {
    auto t0 = Clock::now();
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      if (artin_hasse_rational(p, 120) != artin_hasse_oracle(p, 120)) {
        detail = "mismatch for p = " + std::to_string(p);
        return false;
      }
    }
    double elapsed = seconds_since(t0);
    if (elapsed >= 10.0) {
      detail = "took " + std::to_string(elapsed) + " s";
      return false;
    }
    return true;
  });

  // 2. p-integrality of the first 1000 coefficients, six primes.
  criterion(2, "u_n is p-integral for n < 1000, p in {2,3,5,7,11,13}", [](std::string& detail) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      QSeries ah = artin_hasse_rational(p, 1000);
      for (int n = 0; n < 1000; ++n) {
        auto v = p_adic_valuation(ah[n], p);
        if (v.has_value() && *v < 0) {
          detail = "nu_" + std::to_string(p) + "(u_" + std::to_string(n) + ") < 0";
          return false;
        }
      }
    }
    return true;
  });

  // Shared N=1500 sets for criteria 3 and 4.
  std::map<std::uint32_t, NamedSeriesSet> big_sets;
  std::map<std::uint32_t, double> build_seconds;
  const std::vector<std::uint32_t> big_primes{3, 5, 7, 11, 13};

  // 3. The two main identities at N=1500.
  criterion(3, "eq2 and eq3 hold for p in {3,5,7,11,13}, N=1500, < 60 s/prime", [&](std::string& detail) {
    for (std::uint32_t p : big_primes) {
      auto t0 = Clock::now();
      big_sets.emplace(p, NamedSeriesSet::build(p, 1500));
      const NamedSeriesSet& set = big_sets.at(p);
      VerificationReport r2 = verify_eq2(set);
      VerificationReport r3 = verify_eq3(set);
      double elapsed = seconds_since(t0);
      build_seconds[p] = elapsed;
      if (!r2.holds || !r3.holds) {
        detail = "failed at p = " + std::to_string(p);
        return false;
      }
      if (elapsed >= 60.0) {
        detail = "p = " + std::to_string(p) + " took " + std::to_string(elapsed) + " s";
        return false;
      }
    }
    return true;
  });

  // 4. The X^p product identity at the same scale, plus the pinned
  //    degree-9 cancellation at p = 3.
  criterion(4, "prop_xp holds at N=1500 and the p=3 degree-9 coefficient cancels", [&](std::string& detail) {
    for (std::uint32_t p : big_primes) {
      auto it = big_sets.find(p);
      const NamedSeriesSet& set =
          it != big_sets.end() ? it->second : big_sets.emplace(p, NamedSeriesSet::build(p, 1500)).first->second;
      if (!verify_prop_xp(set).holds) {
        detail = "failed at p = " + std::to_string(p);
        return false;
      }
    }
    const NamedSeriesSet& set3 = big_sets.at(3);
    Fp field(3);
    // a_3 = 2 and a_6 = 0 force the degree-9 coefficient 2 a_6 - a_3^2 + 1 to vanish.
    if (set3.ep[3] != field.from_int(2) || !set3.ep[6].is_zero()) {
      detail = "unexpected a_3/a_6";
      return false;
    }
    Residue pinned = field.from_int(2) * set3.ep[6] - set3.ep[3] * set3.ep[3] + field.one();
    FpSeries plus = multisect(set3.ep, 3, 0);
    FpSeries product = plus * substitute_neg(plus) * set3.t;
    if (!pinned.is_zero() || !product[9].is_zero()) {
      detail = "degree-9 coefficient did not cancel";
      return false;
    }
    return true;
  });

  // 5. The all-rational route with the integrality gate.
  criterion(5, "prop_ep holds over exact rationals, p in {3,5,7}, N=400", [](std::string& detail) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
      if (!verify_prop_ep(p, 400).holds) {
        detail = "failed at p = " + std::to_string(p);
        return false;
      }
    }
    return true;
  });

  // 6. Weak functional equations at D=120 plus the negative control.
  criterion(6, "weak_fe for E_p and S at D=120; truncated exp fails in (p, 2p]", [](std::string& detail) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
      if (!verify_weak_fe(WeakFeTarget::ep, p, 120).holds ||
          !verify_weak_fe(WeakFeTarget::s, p, 120).holds) {
        detail = "failed at p = " + std::to_string(p);
        return false;
      }
      int d = 2 * static_cast<int>(p) + 1;
      SupportCheck control = support_multiple_of_p(defect_series(trunc_exp_mod_p(p, d), d));
      if (control.ok) {
        detail = "negative control passed unexpectedly at p = " + std::to_string(p);
        return false;
      }
      int total = control.offender->first + control.offender->second;
      if (total <= static_cast<int>(p) || total > 2 * static_cast<int>(p)) {
        detail = "offender at total degree " + std::to_string(total) + " outside (p, 2p]";
        return false;
      }
    }
    return true;
  });

  // 7. The exact reflection identity.
  criterion(7, "lemma_ss exact for p in {3,5,7,11,13}, < 5 s total", [](std::string& detail) {
    auto t0 = Clock::now();
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
      if (!verify_lemma_ss(p).holds) {
        detail = "failed at p = " + std::to_string(p);
        return false;
      }
    }
    double elapsed = seconds_since(t0);
    if (elapsed >= 5.0) {
      detail = "took " + std::to_string(elapsed) + " s";
      return false;
    }
    return true;
  });

  // 8. Closed-form grid for five primes; dropping the +1 adjustment
  //    breaks exactly the last row.
  criterion(8, "prop_coeffs for p in {3,5,7,11,13}; no-+1 control fails only in row p-1", [](std::string& detail) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
      if (!verify_prop_coeffs(p).holds) {
        detail = "failed at p = " + std::to_string(p);
        return false;
      }
      int pi = static_cast<int>(p);
      NamedSeriesSet set = NamedSeriesSet::build(p, pi * pi);
      StirlingTable table(pi);
      std::vector<Residue> c_bad;
      for (int j = 0; j < pi; ++j) c_bad.push_back(set.ep[j * pi]); // +1 omitted
      for (int r = 0; r < pi; ++r) {
        for (int k = 0; k < pi; ++k) {
          bool match = closed_form_coefficient(table, p, r, k, c_bad) == set.ep[r * pi + k];
          bool expect_match = r != pi - 1;
          if (match != expect_match) {
            detail = "p = " + std::to_string(p) + ": unexpected " +
                     (match ? "match" : "mismatch") + " at r=" + std::to_string(r) +
                     " k=" + std::to_string(k);
            return false;
          }
        }
      }
    }
    return true;
  });

  // 9. The p = 2 replacement identity at N=2048.
  criterion(9, "remark_p2 holds at N=2048", [](std::string& detail) {
    VerificationReport r = verify_remark_p2(2048);
    if (!r.holds) {
      detail = "failed at degree " +
               (r.first_discrepancy_degree ? std::to_string(*r.first_discrepancy_degree) : "?");
      return false;
    }
    return true;
  });

  // 10. Mutation soundness: every verifier whose inputs a random
  //     single-coefficient mutation touches must fail with a finite
  //     discrepancy degree.
  criterion(10, "100 random E_p mutations (p=3, N=200): affected verifiers all fail", [](std::string& detail) {
    const std::uint32_t p = 3;
    const int n = 200;
    NamedSeriesSet base = NamedSeriesSet::build(p, n);
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> degree_dist(1, n - 1);
    std::uniform_int_distribution<std::uint32_t> delta_dist(1, p - 1);
    const int pi = static_cast<int>(p);
    for (int trial = 0; trial < 100; ++trial) {
      int d = degree_dist(rng);
      std::uint32_t delta = delta_dist(rng);
      NamedSeriesSet mutated = base.with_mutated_ep(d, delta);
      std::vector<VerificationReport> reports;
      // A verifier is affected when the mutation provably shifts its
      // compared payloads inside the comparison window:
      //   eq2 deviates by degree d+1, eq3 by d+p (p does not divide d)
      //   or d+p+1 (p divides d), prop_xp at d+p when d/p is even.
      std::vector<long> bounds; // matching provable detection bound per report
      if (d % pi != 0 || d + 1 < n) {
        reports.push_back(verify_eq2(mutated));
        bounds.push_back(d + 1);
      }
      if ((d % pi != 0 && d + pi < n) || (d % pi == 0 && d + pi + 1 < n)) {
        reports.push_back(verify_eq3(mutated));
        bounds.push_back(d + pi + 1);
      }
      if (d % pi == 0 && (d / pi) % 2 == 0 && d + pi < n) {
        reports.push_back(verify_prop_xp(mutated));
        bounds.push_back(d + pi);
      }
      if (d < pi * pi) {
        reports.push_back(verify_prop_coeffs(mutated));
        bounds.push_back(pi * pi - 1);
      }
      int window = std::min(n, d + 2 * pi + 1);
      reports.push_back(verify_weak_fe(WeakFeTarget::ep, mutated, window));
      bounds.push_back(d + 2 * pi);
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (r.holds || !r.first_discrepancy_degree.has_value()) {
          detail = "mutation at degree " + std::to_string(d) + " (delta " + std::to_string(delta) +
                   ") not detected by " + r.identity;
          return false;
        }
        if (*r.first_discrepancy_degree > bounds[i]) {
          detail = r.identity + " reported degree " + std::to_string(*r.first_discrepancy_degree) +
                   " beyond the bound " + std::to_string(bounds[i]) + " for mutation at " +
                   std::to_string(d);
          return false;
        }
      }
    }
    return true;
  });

  // 11. CLI determinism and the exit-code contract.
  criterion(11, "CLI: byte-identical payloads and 0/1/2 exit codes", [&](std::string& detail) {
    const std::string pass_args = "verify --prime 5 --precision 200 --identity all --format json";
    CliResult a = run_cli(cli, pass_args);
    CliResult b = run_cli(cli, pass_args);
    if (a.exit_code != 0 || b.exit_code != 0) {
      detail = "pass case exit codes " + std::to_string(a.exit_code) + "/" +
               std::to_string(b.exit_code);
      return false;
    }
    if (a.out.empty() || a.out != b.out) {
      detail = "payloads differ between runs";
      return false;
    }
    CliResult induced =
        run_cli(cli, "verify --prime 5 --precision 200 --identity eq2 --mutate 7 --format json");
    if (induced.exit_code != 1) {
      detail = "induced failure exited " + std::to_string(induced.exit_code);
      return false;
    }
    CliResult misuse = run_cli(cli, "verify --prime 2 --precision 64 --identity eq2");
    if (misuse.exit_code != 2) {
      detail = "p=2 misuse exited " + std::to_string(misuse.exit_code);
      return false;
    }
    return true;
  });

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
