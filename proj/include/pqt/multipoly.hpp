#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "pqt/rational.hpp"

namespace pqt {

using BigInt = mpz_class;

// The closed set of indeterminates. Declaration order is the canonical
// variable order x < p < q < u < v.
enum class Var : std::uint8_t { x = 0, p, q, u, v };

inline constexpr std::size_t kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::x, Var::p, Var::q, Var::u, Var::v};

char var_name(Var var);
std::optional<Var> parse_var(std::string_view name);

// Exponent vector over the full variable set; absent variables carry 0.
using Monomial = std::array<std::uint32_t, kNumVars>;

std::uint32_t total_degree(const Monomial& m);

// Graded order on monomials: lower total degree first, then larger
// exponent in the earlier variable first.
bool graded_less(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so the zero
/// polynomial has no terms and structural equality is polynomial equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT: integers promote to constants
  MultiPoly(const BigInt& c);  // NOLINT

  static MultiPoly variable(Var var, std::uint32_t exponent = 1);
  static MultiPoly monomial(const Monomial& m, const BigInt& coeff);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Coefficient of the exact monomial m (0 when absent).
  BigInt coeff(const Monomial& m) const;

  // Polynomial coefficient of var^e, with var eliminated.
  MultiPoly coeff_of(Var var, std::uint32_t e) const;

  std::uint32_t degree(Var var) const;
  std::uint32_t total_degree() const;
  // Variables that occur with positive exponent, in canonical order.
  std::vector<Var> variables() const;

  // Terms sorted by graded_less.
  std::vector<std::pair<Monomial, BigInt>> sorted_terms() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const BigInt& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }
  friend MultiPoly operator*(const BigInt& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  void add_term(const Monomial& m, const BigInt& c);

 private:
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, std::uint32_t exponent);

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);

// Replace every occurrence of var by replacement and re-normalize.
MultiPoly poly_substitute(const MultiPoly& a, Var var, const MultiPoly& replacement);

// Replace a subset of variables by integers. Unassigned variables remain.
MultiPoly poly_specialize(const MultiPoly& a, const std::map<Var, BigInt>& values);

using Assignment = std::map<Var, Rational>;

// Exact value of a at the assignment. Throws std::invalid_argument naming the
// first variable of a that the assignment does not cover.
Rational poly_eval(const MultiPoly& a, const Assignment& assignment);

// Human-readable form, e.g. "q*x + p*x^2". Factors inside a monomial are
// written p, q, u, v and then x.
std::string to_string(const MultiPoly& a);
std::ostream& operator<<(std::ostream& os, const MultiPoly& a);

}  // namespace pqt
