#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pqt/multipoly.hpp"
#include "pqt/rational.hpp"

namespace pqt {

/// Truncated exponential generating function. Entry n holds the coefficient
/// of t^n/n!, so integer sequences such as Bell numbers are stored as-is.
class EgfSeries {
 public:
  explicit EgfSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit EgfSeries(std::vector<MultiPoly> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  const MultiPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  MultiPoly& operator[](std::size_t n) { return coeffs_.at(n); }

  const std::vector<MultiPoly>& coeffs() const noexcept { return coeffs_; }

  EgfSeries truncated(std::size_t order) const;

  friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

 private:
  std::vector<MultiPoly> coeffs_;
};

// Product of EGFs (binomial convolution), truncated to the smaller order.
EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b);

/// Partial Bell polynomial B_{n,k}(g_1, ..., g_{n-k+1}).
///
/// `g[j]` is the j-th argument; g[0] is ignored so that indices match the
/// usual notation. Evaluated with
///   B_{n,k} = sum_{j=1}^{n-k+1} C(n-1, j-1) g_j B_{n-j,k-1},
/// B_{0,0} = 1 and B_{n,0} = 0 for n > 0. Any k > n gives 0.
/// Throws std::invalid_argument if g does not reach index n-k+1.
MultiPoly partial_bell(std::size_t n, std::size_t k, std::span<const MultiPoly> g);

// Full triangle B_{m,k} for 0 <= k <= m <= n; row m has m+1 entries.
std::vector<std::vector<MultiPoly>> partial_bell_table(std::size_t n, std::span<const MultiPoly> g);

/// Composition F(G(t)) truncated to min(order(F), order(G)).
/// Coefficient n is sum_{k=1}^n F_k B_{n,k}(G_1, G_2, ...) for n >= 1 and F_0
/// at n = 0. Throws std::invalid_argument if G has a nonzero constant term.
EgfSeries egf_compose(const EgfSeries& outer, const EgfSeries& inner);

/// Ordinary coefficients of (1 + z(t))^alpha up to t^n_max, expanded as
/// sum_m binom(alpha, m) z^m with the generalized binomial coefficient.
/// `z` lists ordinary coefficients and must have z[0] == 0.
/// Throws std::invalid_argument on a nonzero constant term or when z is
/// shorter than n_max + 1.
std::vector<Rational> ogf_binomial_power(std::span<const Rational> z, const Rational& alpha, std::size_t n_max);

// Generalized binomial coefficient alpha (alpha-1) ... (alpha-m+1) / m!.
Rational generalized_binomial(const Rational& alpha, std::size_t m);

}  // namespace pqt
