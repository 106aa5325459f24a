#include "pqt/verify.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "pqt/multipoly.hpp"
#include "pqt/numbers.hpp"
#include "pqt/partitions.hpp"
#include "pqt/touchard.hpp"

namespace pqt {

namespace {

struct IdentityInfo {
  Identity id;
  std::string_view name;
  int budget;
};

constexpr std::array<IdentityInfo, 8> kIdentities{{
    {Identity::stirling12, "stirling12", 200},
    {Identity::orthogonality, "orthogonality", 200},
    {Identity::slp_count, "slp-count", 200},
    {Identity::llp_grid, "llp-grid", 8},
    {Identity::lsp_slice, "lsp-slice", 8},
    {Identity::slp_slice, "slp-slice", 8},
    {Identity::series_vs_explicit, "series-vs-explicit", 20},
    {Identity::oracle_vs_eval, "oracle-vs-eval", 16},
}};

const IdentityInfo& info(Identity id) {
  for (const auto& entry : kIdentities)
    if (entry.id == id) return entry;
  throw std::logic_error("unregistered identity");
}

std::string cell_label(int n, int k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

VerificationCell compare(std::string label, const BigInt& expected, const BigInt& actual) {
  VerificationCell cell{std::move(label), expected == actual, {}};
  if (!cell.pass) cell.detail = "expected " + expected.get_str() + ", got " + actual.get_str();
  return cell;
}

VerificationCell compare(std::string label, const MultiPoly& expected, const MultiPoly& actual) {
  VerificationCell cell{std::move(label), expected == actual, {}};
  if (!cell.pass) cell.detail = "expected " + to_string(expected) + ", got " + to_string(actual);
  return cell;
}

BigInt slp_closed_form(int n, int k) { return count_closed_form(n, k, Flavor::SLP); }

void check_stirling12(int n_max, VerificationReport& report) {
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      BigInt sum = 0;
      for (int l = k; l <= n; ++l) sum += stirling1_unsigned(n, l) * stirling2(l, k);
      report.cells.push_back(compare(cell_label(n, k), slp_closed_form(n, k), sum));
    }
  }
}

void check_orthogonality(int n_max, VerificationReport& report) {
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      BigInt sum = 0;
      for (int l = k; l <= n; ++l) sum += stirling1_signed(n, l) * stirling2(l, k);
      report.cells.push_back(compare(cell_label(n, k), BigInt(n == k ? 1 : 0), sum));
    }
  }
}

void check_slp_count(int n_max, VerificationReport& report) {
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      BigInt sum = 0;
      for (int j = 0; j <= n - k; ++j) sum += stirling1_unsigned(n, n - j) * stirling2(n - j, k);
      report.cells.push_back(compare(cell_label(n, k), slp_closed_form(n, k), sum));
    }
  }
}

void check_llp_grid(int n_max, bool force, VerificationReport& report) {
  for (int n = 1; n <= n_max; ++n)
    for (int k = 1; k <= n; ++k) report.cells.push_back(compare(cell_label(n, k), s_uv(n, k), dist_poly(n, k, force)));
}

// Distribution of one statistic over an enumerated family, as a polynomial
// in `var`.
MultiPoly tally_statistic(int n, int k, Flavor flavor, Var var, bool force) {
  std::map<std::size_t, std::uint64_t> tally;
  enumerate(
      n, k, flavor,
      [&](const OrderedPartition& pi) { ++tally[var == Var::u ? nsb(pi) : nse(pi)]; }, force);
  MultiPoly poly;
  for (const auto& [e, c] : tally)
    poly += MultiPoly::variable(var, static_cast<std::uint32_t>(e)) * BigInt(static_cast<unsigned long>(c));
  return poly;
}

void check_lsp_slice(int n_max, bool force, VerificationReport& report) {
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      MultiPoly expected;
      for (int i = 0; i <= k - 1; ++i)
        expected += MultiPoly::variable(Var::u, static_cast<std::uint32_t>(i)) *
                    BigInt(stirling2(n, k) * stirling1_unsigned(k, k - i));
      const MultiPoly enumerated = tally_statistic(n, k, Flavor::LSP, Var::u, force);
      auto cell = compare(cell_label(n, k), expected, enumerated);
      // the closed-form joint distribution must have the same v^0 slice
      if (cell.pass && s_uv(n, k).coeff_of(Var::v, 0) != expected) {
        cell.pass = false;
        cell.detail = "v^0 slice of S(n,k;u,v) differs: " + to_string(s_uv(n, k).coeff_of(Var::v, 0));
      }
      report.cells.push_back(std::move(cell));
    }
  }
}

void check_slp_slice(int n_max, bool force, VerificationReport& report) {
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      MultiPoly expected;
      for (int j = 0; j <= n - k; ++j)
        expected += MultiPoly::variable(Var::v, static_cast<std::uint32_t>(j)) *
                    BigInt(stirling1_unsigned(n, n - j) * stirling2(n - j, k));
      const MultiPoly enumerated = tally_statistic(n, k, Flavor::SLP, Var::v, force);
      auto cell = compare(cell_label(n, k), expected, enumerated);
      if (cell.pass && s_uv(n, k).coeff_of(Var::u, 0) != expected) {
        cell.pass = false;
        cell.detail = "u^0 slice of S(n,k;u,v) differs: " + to_string(s_uv(n, k).coeff_of(Var::u, 0));
      }
      report.cells.push_back(std::move(cell));
    }
  }
}

void check_series_vs_explicit(int n_max, VerificationReport& report) {
  const EgfSeries series = touchard_series(static_cast<std::size_t>(n_max));
  for (int n = 0; n <= n_max; ++n) {
    const MultiPoly& composed = series[static_cast<std::size_t>(n)];
    const std::string label = "n=" + std::to_string(n);
    report.cells.push_back(compare(label + " explicit", composed, touchard_explicit(n)));
    report.cells.push_back(compare(label + " substitution", composed, touchard_substitution(n)));
  }
}

void check_oracle_vs_eval(int n_max, const VerifyOptions& options, VerificationReport& report) {
  std::vector<MultiPoly> polys;
  for (int n = 0; n <= n_max; ++n) polys.push_back(touchard_poly(n));
  for (const auto& x : options.xs) {
    for (const auto& p : options.ps) {
      for (const auto& q : options.qs) {
        VerificationCell cell{"x=" + to_string(x) + ",p=" + to_string(p) + ",q=" + to_string(q), true, {}};
        const auto oracle = taylor_oracle(x, p, q, static_cast<std::size_t>(n_max));
        for (int n = 0; n <= n_max && cell.pass; ++n) {
          const Rational value = poly_eval(polys[n], {{Var::x, x}, {Var::p, p}, {Var::q, q}}) / Rational(factorial(n));
          if (value != oracle[n]) {
            cell.pass = false;
            cell.detail = "n=" + std::to_string(n) + ": T_n/n! = " + to_string(value) + ", oracle " +
                          to_string(oracle[n]);
          }
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }
}

}  // namespace

std::string_view identity_name(Identity id) { return info(id).name; }

std::optional<Identity> parse_identity(std::string_view name) {
  for (const auto& entry : kIdentities)
    if (entry.name == name) return entry.id;
  return std::nullopt;
}

std::vector<Identity> all_identities() {
  std::vector<Identity> ids;
  for (const auto& entry : kIdentities) ids.push_back(entry.id);
  return ids;
}

int identity_budget(Identity id) { return info(id).budget; }

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const VerificationCell* VerificationReport::first_failure() const {
  for (const auto& cell : cells)
    if (!cell.pass) return &cell;
  return nullptr;
}

VerificationReport verify_identity(Identity id, int n_max, const VerifyOptions& options) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (n_max > identity_budget(id) && !options.force)
    throw std::invalid_argument(std::string(identity_name(id)) + " accepts n_max <= " +
                                std::to_string(identity_budget(id)) + " without force");
  VerificationReport report{std::string(identity_name(id)), n_max, {}};
  switch (id) {
    case Identity::stirling12: check_stirling12(n_max, report); break;
    case Identity::orthogonality: check_orthogonality(n_max, report); break;
    case Identity::slp_count: check_slp_count(n_max, report); break;
    case Identity::llp_grid: check_llp_grid(n_max, options.force, report); break;
    case Identity::lsp_slice: check_lsp_slice(n_max, options.force, report); break;
    case Identity::slp_slice: check_slp_slice(n_max, options.force, report); break;
    case Identity::series_vs_explicit: check_series_vs_explicit(n_max, report); break;
    case Identity::oracle_vs_eval: check_oracle_vs_eval(n_max, options, report); break;
  }
  return report;
}

VerificationReport verify_identity(std::string_view name, int n_max, const VerifyOptions& options) {
  const auto id = parse_identity(name);
  if (!id) throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
  return verify_identity(*id, n_max, options);
}

Rational avg_nse_enumerated(int n) {
  if (n < 1) throw std::domain_error("avg_nse_enumerated needs n >= 1");
  std::uint64_t objects = 0;
  std::uint64_t total = 0;
  for (int k = 1; k <= n; ++k) {
    enumerate(n, k, Flavor::SLP, [&](const OrderedPartition& pi) {
      ++objects;
      total += nse(pi);
    });
  }
  Rational r(BigInt(static_cast<unsigned long>(total)), BigInt(static_cast<unsigned long>(objects)));
  r.canonicalize();
  return r;
}

}  // namespace pqt
