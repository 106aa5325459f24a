// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pqt/numbers.hpp"
#include "pqt/partitions.hpp"
#include "pqt/permstats.hpp"
#include "pqt/touchard.hpp"
#include "pqt/verify.hpp"

using namespace pqt;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // 0 = no limit stated
  std::function<std::string()> check;  // empty string means pass
};

constexpr int kGridN = 7;

// LLP distribution grids for 1 <= k <= n <= 7, built once.
const std::map<std::pair<int, int>, DistGrid>& oracle_grids() {
  static const auto grids = [] {
    std::map<std::pair<int, int>, DistGrid> g;
    for (int n = 1; n <= kGridN; ++n)
      for (int k = 1; k <= n; ++k) g[{n, k}] = dist_grid(n, k);
    return g;
  }();
  return grids;
}

std::string cell(int n, int k) { return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")"; }

std::string oracle_grid() {
  for (const auto& [nk, grid] : oracle_grids()) {
    const auto [n, k] = nk;
    const MultiPoly formula = s_uv(n, k);
    const MultiPoly enumerated = grid_to_poly(grid);
    if (formula != enumerated)
      return cell(n, k) + " formula " + to_string(formula) + " vs enumeration " + to_string(enumerated);
  }
  return {};
}

std::string slp_slice() {
  for (const auto& [nk, grid] : oracle_grids()) {
    const auto [n, k] = nk;
    for (int j = 0; j <= n - k; ++j) {
      const BigInt expected = stirling1_unsigned(n, n - j) * stirling2(n - j, k);
      if (grid[0][j] != expected) return cell(n, k) + " j=" + std::to_string(j);
    }
  }
  return {};
}

std::string lsp_slice() {
  for (const auto& [nk, grid] : oracle_grids()) {
    const auto [n, k] = nk;
    for (int i = 0; i <= k - 1; ++i) {
      const BigInt expected = stirling2(n, k) * stirling1_unsigned(k, k - i);
      if (grid[i][0] != expected) return cell(n, k) + " i=" + std::to_string(i);
    }
  }
  return {};
}

std::string cardinalities() {
  for (const auto& [nk, grid] : oracle_grids()) {
    const auto [n, k] = nk;
    const MultiPoly d = grid_to_poly(grid);
    const auto at = [&](long u, long v) { return poly_eval(d, {{Var::u, Rational(u)}, {Var::v, Rational(v)}}); };
    const BigInt s = stirling2(n, k);
    const BigInt slp = BigInt(factorial(n) / factorial(k)) * binomial(n - 1, k - 1);
    const BigInt llp = factorial(n) * binomial(n - 1, k - 1);
    if (at(0, 0) != Rational(s)) return cell(n, k) + " at (0,0)";
    if (at(1, 0) != Rational(BigInt(factorial(k) * s))) return cell(n, k) + " at (1,0)";
    if (at(0, 1) != Rational(slp)) return cell(n, k) + " at (0,1)";
    if (at(1, 1) != Rational(llp)) return cell(n, k) + " at (1,1)";
  }
  return {};
}

std::string route_agreement() {
  constexpr int n_max = 12;
  const EgfSeries series = touchard_series(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const MultiPoly explicit_form = touchard_explicit(n);
    MultiPoly by_columns;
    for (int k = 0; k <= n; ++k) by_columns += s_pq(n, k) * MultiPoly::variable(Var::x, static_cast<std::uint32_t>(k));
    if (series[n] != explicit_form) return "n=" + std::to_string(n) + " composition vs explicit";
    if (series[n] != by_columns) return "n=" + std::to_string(n) + " composition vs sum_k s_pq x^k";
  }
  return {};
}

std::string closed_forms() {
  const long bells[] = {1, 1, 2, 5, 15, 52, 203, 877};
  const MultiPoly x = MultiPoly::variable(Var::x);
  for (int n = 0; n <= 15; ++n) {
    const MultiPoly t = touchard_poly(n);
    const MultiPoly classical = poly_specialize(t, {{Var::p, BigInt(1)}, {Var::q, BigInt(1)}});
    for (int k = 0; k <= n; ++k) {
      Monomial m{};
      m[static_cast<std::size_t>(Var::x)] = k;
      if (classical.coeff(m) != stirling2(n, k)) return "Stirling-2 row n=" + std::to_string(n);
    }
    if (n <= 7 && poly_eval(classical, {{Var::x, Rational(1)}}) != bells[n]) return "Bell n=" + std::to_string(n);
    if (n >= 1) {
      const MultiPoly at_two = poly_specialize(t, {{Var::p, BigInt(2)}, {Var::q, BigInt(2)}});
      if (at_two != factorial(n) * (x * pow(x + MultiPoly(1L), static_cast<std::uint32_t>(n - 1))))
        return "p=q=2 closed form n=" + std::to_string(n);
    }
  }
  return {};
}

std::string numeric_oracle() {
  const auto report = verify_identity(Identity::oracle_vs_eval, 10);
  if (report.cells.size() != 48) return "expected 48 grid points, got " + std::to_string(report.cells.size());
  if (const auto* f = report.first_failure()) return f->label + ": " + f->detail;
  return {};
}

std::string stirling_identities() {
  for (Identity id : {Identity::stirling12, Identity::orthogonality}) {
    const auto report = verify_identity(id, 30);
    if (const auto* f = report.first_failure())
      return std::string(identity_name(id)) + " " + f->label + ": " + f->detail;
  }
  return {};
}

std::string average_nse() {
  if (avg_nse(2) != Rational(1, 3)) return "n=2 gives " + to_string(avg_nse(2));
  for (int n = 1; n <= 7; ++n) {
    const Rational formula = avg_nse(n);
    const Rational enumerated = avg_nse_enumerated(n);
    if (formula != enumerated)
      return "n=" + std::to_string(n) + " formula " + to_string(formula) + " vs enumeration " + to_string(enumerated);
  }
  return {};
}

std::string permutation_proposition() {
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::uint64_t> nse_counts(n, 0), ltr_counts(n + 1, 0);
    std::string failure;
    for_each_permutation(n, [&](const Permutation& sigma) {
      const auto split = decompose(sigma);
      std::vector<bool> used(n, false);
      for (auto j : split.nse_positions) used[j] = true;
      for (auto j : split.rlm_positions) {
        if (used[j] && failure.empty()) failure = "NSE and RLM overlap";
        used[j] = true;
      }
      if (nse_perm(sigma) + rlm_count(sigma) != static_cast<std::size_t>(n) && failure.empty())
        failure = "nse + rlm != n";
      ++nse_counts[nse_perm(sigma)];
      ++ltr_counts[ltr_max_count(sigma)];
    });
    if (!failure.empty()) return "n=" + std::to_string(n) + ": " + failure;
    for (int j = 0; j < n; ++j) {
      if (BigInt(static_cast<unsigned long>(nse_counts[j])) != stirling1_unsigned(n, n - j))
        return "n=" + std::to_string(n) + " #{nse=" + std::to_string(j) + "}";
      if (ltr_counts[n - j] != nse_counts[j])
        return "n=" + std::to_string(n) + " #{ltr_max=" + std::to_string(n - j) + "}";
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "oracle grid: s_uv == dist_poly for 1<=k<=n<=7", 120.0, oracle_grid},
      {"AC2", "SLP slice: u^0 slice == c(n,n-j) S(n-j,k), n<=7", 0.0, slp_slice},
      {"AC3", "LSP slice: v^0 slice == S(n,k) c(k,k-i), n<=7", 0.0, lsp_slice},
      {"AC4", "cardinalities at (u,v) in {0,1}^2, n<=7", 0.0, cardinalities},
      {"AC5", "route agreement: composition == explicit == sum_k s_pq x^k, n<=12", 30.0, route_agreement},
      {"AC6", "closed forms: p=q=1 Stirling-2/Bell, p=q=2 n! x (1+x)^(n-1), n<=15", 0.0, closed_forms},
      {"AC7", "numeric oracle on the 4x4x3 rational grid, n<=10", 0.0, numeric_oracle},
      {"AC8", "sum_l c(n,l) S(l,k) identity and orthogonality, n<=30", 0.0, stirling_identities},
      {"AC9", "average nse formula == SLP enumeration, n<=7; n=2 -> 1/3", 0.0, average_nse},
      {"AC10", "NSE/RLM split, nse distribution, ltr-max duality, n<=8", 60.0, permutation_proposition},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    std::string failure;
    try {
      failure = c.check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (failure.empty() && c.time_limit_s > 0 && elapsed > c.time_limit_s)
      failure = "took " + std::to_string(elapsed) + " s, limit " + std::to_string(c.time_limit_s) + " s";
    const bool pass = failure.empty();
    if (!pass) ++failures;
    std::cout << (pass ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  [" << elapsed << " s]";
    if (!pass) std::cout << "  -- " << failure;
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
