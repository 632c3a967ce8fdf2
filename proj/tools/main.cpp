// Command-line front end: coefficient tables, identity verification
// reports, and the recursion-vs-closed-form grid, with deterministic
// csv/json/text output. Exit codes: 0 all checks hold, 1 an identity
// failed, 2 configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ahseries/named_series.hpp"
#include "ahseries/stirling.hpp"
#include "ahseries/verify.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailed = 1;
constexpr int kExitUsage = 2;

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ahseries::Error("cannot open output file '" + out_path + "'");
  out << payload;
}

// ---- coeffs ----------------------------------------------------------

std::string render_coeffs(const ahseries::QSeries& ah, const ahseries::FpSeries& ep,
                          const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    os << "n,numerator,denominator,residue\n";
    for (int n = 0; n < ah.precision(); ++n) {
      os << n << ',' << ah[n].numerator().get_str() << ',' << ah[n].denominator().get_str() << ','
         << ep[n].value() << '\n';
    }
  } else if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (int n = 0; n < ah.precision(); ++n) {
      rows.push_back({{"n", n},
                      {"numerator", ah[n].numerator().get_str()},
                      {"denominator", ah[n].denominator().get_str()},
                      {"residue", ep[n].value()}});
    }
    os << rows.dump(2) << '\n';
  } else {
    os << "coefficients of the Artin-Hasse series, p = " << ep.ring().modulus() << "\n";
    for (int n = 0; n < ah.precision(); ++n) {
      os << "  u_" << n << " = " << ah[n].to_string() << "  ->  a_" << n << " = " << ep[n].value()
         << "\n";
    }
  }
  return os.str();
}

int cmd_coeffs(std::uint32_t prime, int count, const std::string& format,
               const std::string& out_path) {
  ahseries::QSeries ah = ahseries::artin_hasse_rational(prime, count);
  ahseries::FpSeries ep = ahseries::ep_from_rational(ah, prime);
  emit(render_coeffs(ah, ep, format), out_path);
  return kExitOk;
}

// ---- verify ----------------------------------------------------------

ordered_json report_to_json(const ahseries::VerificationReport& r) {
  ordered_json j;
  j["identity"] = r.identity;
  j["prime"] = r.prime;
  j["precision"] = r.precision;
  j["status"] = std::string(ahseries::to_string(r.status));
  j["holds"] = r.holds;
  if (r.first_discrepancy_degree.has_value()) {
    j["first_discrepancy_degree"] = *r.first_discrepancy_degree;
  } else {
    j["first_discrepancy_degree"] = nullptr;
  }
  if (r.witness.has_value()) {
    j["witness"] = {{"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string render_reports(const std::vector<ahseries::VerificationReport>& reports,
                           const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    os << arr.dump(2) << '\n';
  } else if (format == "csv") {
    os << "identity,prime,precision,status,holds,first_discrepancy_degree,witness_lhs,witness_rhs\n";
    for (const auto& r : reports) {
      os << r.identity << ',' << r.prime << ',' << r.precision << ','
         << ahseries::to_string(r.status) << ',' << (r.holds ? "true" : "false") << ',';
      if (r.first_discrepancy_degree.has_value()) os << *r.first_discrepancy_degree;
      os << ',';
      if (r.witness.has_value()) {
        os << csv_escape(r.witness->lhs) << ',' << csv_escape(r.witness->rhs);
      } else {
        os << ',';
      }
      os << '\n';
    }
  } else {
    for (const auto& r : reports) {
      os << r.identity;
      for (std::size_t pad = r.identity.size(); pad < 12; ++pad) os << ' ';
      os << " p=" << r.prime << " N=" << r.precision << "  " << ahseries::to_string(r.status);
      if (r.first_discrepancy_degree.has_value()) {
        os << " (first discrepancy at degree " << *r.first_discrepancy_degree << ": "
           << r.witness->lhs << " != " << r.witness->rhs << ")";
      }
      os << '\n';
    }
  }
  return os.str();
}

int cmd_verify(std::uint32_t prime, int precision, const std::string& identity,
               const std::string& format, const std::string& out_path,
               std::optional<int> mutate_degree) {
  ahseries::NamedSeriesSet set = ahseries::NamedSeriesSet::build(prime, precision);
  if (mutate_degree.has_value()) {
    if (*mutate_degree < 1 || *mutate_degree >= precision) {
      std::cerr << "error: --mutate degree must lie in [1, precision)\n";
      return kExitUsage;
    }
    set = set.with_mutated_ep(*mutate_degree, 1);
  }
  std::vector<ahseries::VerificationReport> reports = ahseries::run_identity(identity, set);
  if (identity != "all" && reports.size() == 1 &&
      (reports[0].status == ahseries::VerifyStatus::skipped ||
       reports[0].status == ahseries::VerifyStatus::insufficient_precision)) {
    std::cerr << "error: identity '" << identity << "' cannot run at p=" << prime
              << ", N=" << precision << " ("
              << (reports[0].status == ahseries::VerifyStatus::skipped ? "odd prime required"
                                                                       : "insufficient precision")
              << ")\n";
    return kExitUsage;
  }
  emit(render_reports(reports, format), out_path);
  bool any_failed = false;
  for (const auto& r : reports) {
    std::cerr << "# " << r.identity << ": " << r.elapsed.count() << " s\n";
    if (r.status == ahseries::VerifyStatus::failed) any_failed = true;
  }
  return any_failed ? kExitIdentityFailed : kExitOk;
}

// ---- table -----------------------------------------------------------

int cmd_table(std::uint32_t prime, const std::string& format, const std::string& out_path) {
  int p = static_cast<int>(prime);
  ahseries::NamedSeriesSet set = ahseries::NamedSeriesSet::build(prime, p * p);
  ahseries::StirlingTable table(p);
  ahseries::Fp field(prime);
  std::vector<ahseries::Residue> c;
  for (int j = 0; j < p; ++j) c.push_back(set.ep[j * p]);
  c[static_cast<std::size_t>(p - 1)] += field.one();

  struct Cell {
    int r, k;
    std::uint32_t recursion, closed_form;
  };
  std::vector<Cell> cells;
  bool any_mismatch = false;
  for (int r = 0; r < p; ++r) {
    for (int k = 0; k < p; ++k) {
      std::uint32_t rec = set.ep[r * p + k].value();
      std::uint32_t closed = ahseries::closed_form_coefficient(table, prime, r, k, c).value();
      cells.push_back({r, k, rec, closed});
      if (rec != closed) any_mismatch = true;
    }
  }

  std::ostringstream os;
  if (format == "csv") {
    os << "r,k,recursion,closed_form,match\n";
    for (const auto& cell : cells) {
      os << cell.r << ',' << cell.k << ',' << cell.recursion << ',' << cell.closed_form << ','
         << (cell.recursion == cell.closed_form ? "true" : "false") << '\n';
    }
  } else if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& cell : cells) {
      arr.push_back({{"r", cell.r},
                     {"k", cell.k},
                     {"recursion", cell.recursion},
                     {"closed_form", cell.closed_form},
                     {"match", cell.recursion == cell.closed_form}});
    }
    os << arr.dump(2) << '\n';
  } else {
    os << "a_{rp+k} for p = " << p << ": recursion/closed-form\n";
    for (int r = 0; r < p; ++r) {
      for (int k = 0; k < p; ++k) {
        const auto& cell = cells[static_cast<std::size_t>(r * p + k)];
        os << ' ' << cell.recursion << '/' << cell.closed_form;
        if (cell.recursion != cell.closed_form) os << '!';
      }
      os << '\n';
    }
    os << (any_mismatch ? "MISMATCH\n" : "all entries match\n");
  }
  emit(os.str(), out_path);
  return any_mismatch ? kExitIdentityFailed : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact power-series toolkit: Artin-Hasse coefficients mod p and the identities "
               "relating them to Laguerre polynomials"};
  app.require_subcommand(1);

  std::uint32_t prime = 0;
  int precision = 200;
  int count = 200;
  std::string identity = "all";
  std::string format = "text";
  std::string out_path;
  std::optional<int> mutate_degree;

  std::vector<std::string> identity_choices = ahseries::identity_names();
  identity_choices.insert(identity_choices.begin(), "all");

  CLI::App* coeffs = app.add_subcommand("coeffs", "Print u_n and a_n = u_n mod p");
  coeffs->add_option("--prime", prime, "Prime modulus p")->required();
  coeffs->add_option("--count", count, "Number of coefficients")->capture_default_str();
  coeffs->add_option("--format", format, "Output format: csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  coeffs->add_option("--out", out_path, "Write the payload to a file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "Check the series identities and report");
  verify->add_option("--prime", prime, "Prime modulus p")->required();
  verify->add_option("--precision", precision, "Truncation precision N")->capture_default_str()
      ->envname("AHSERIES_PRECISION");
  verify->add_option("--identity", identity, "Identity name or 'all'")->capture_default_str()
      ->check(CLI::IsMember(identity_choices));
  verify->add_option("--format", format, "Output format: csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  verify->add_option("--out", out_path, "Write the payload to a file instead of stdout");
  verify
      ->add_option("--mutate", mutate_degree,
                   "Negative control: bump a_degree of E_p by one before verifying")
      ->check(CLI::PositiveNumber);

  CLI::App* table = app.add_subcommand("table", "p x p grid of a_{rp+k}: recursion vs closed form");
  table->add_option("--prime", prime, "Odd prime modulus p")->required();
  table->add_option("--format", format, "Output format: csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  table->add_option("--out", out_path, "Write the payload to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!ahseries::is_prime(prime)) {
      std::cerr << "error: modulus not prime: " << prime << "\n";
      return kExitUsage;
    }
    if (coeffs->parsed()) {
      if (count < 1) {
        std::cerr << "error: --count must be at least 1\n";
        return kExitUsage;
      }
      return cmd_coeffs(prime, count, format, out_path);
    }
    if (verify->parsed()) {
      if (precision < 1) {
        std::cerr << "error: --precision must be at least 1\n";
        return kExitUsage;
      }
      return cmd_verify(prime, precision, identity, format, out_path, mutate_degree);
    }
    if (table->parsed()) {
      if (prime == 2) {
        std::cerr << "error: the coefficient grid is stated for odd primes\n";
        return kExitUsage;
      }
      return cmd_table(prime, format, out_path);
    }
  } catch (const ahseries::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
