#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqt/rational.hpp"

namespace pqt {

enum class Identity {
  stirling12,          // sum_l c(n,l) S(l,k) = (n!/k!) C(n-1,k-1)
  orthogonality,       // sum_l (-1)^(n-l) c(n,l) S(l,k) = [n = k]
  slp_count,           // sum_j c(n,n-j) S(n-j,k) = (n!/k!) C(n-1,k-1)
  llp_grid,            // closed-form S(n,k;u,v) vs LLP enumeration
  lsp_slice,           // S(n,k) c(k,k-i) vs nsb over LSP enumeration
  slp_slice,           // c(n,n-j) S(n-j,k) vs nse over SLP enumeration
  series_vs_explicit,  // EGF composition vs explicit sum vs substitution
  oracle_vs_eval,      // rational Taylor oracle vs T_n(x;p,q)/n!
};

std::string_view identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
std::vector<Identity> all_identities();

// Largest n_max accepted for each identity without force.
int identity_budget(Identity id);

struct VerifyOptions {
  // oracle_vs_eval grid
  std::vector<Rational> xs{Rational(1, 2), Rational(1), Rational(2)};
  std::vector<Rational> ps{Rational(-1), Rational(1, 2), Rational(2), Rational(3)};
  std::vector<Rational> qs{Rational(-1), Rational(1, 2), Rational(2), Rational(3)};
  bool force = false;
};

struct VerificationCell {
  std::string label;  // e.g. "n=3,k=2"
  bool pass = false;
  std::string detail;  // expected vs actual when failing
};

struct VerificationReport {
  std::string identity;
  int n_max = 0;
  std::vector<VerificationCell> cells;

  bool passed() const;
  const VerificationCell* first_failure() const;
};

/// Checks the identity cell by cell for all parameters up to n_max.
/// Throws std::invalid_argument if n_max exceeds identity_budget(id) and
/// options.force is not set, or if n_max < 0.
VerificationReport verify_identity(Identity id, int n_max, const VerifyOptions& options = {});

// Parses the name first; unknown names throw std::invalid_argument.
VerificationReport verify_identity(std::string_view name, int n_max, const VerifyOptions& options = {});

// Mean nse over every SLP object of [n], by enumeration.
Rational avg_nse_enumerated(int n);

}  // namespace pqt
