#include "pqt/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pqt/numbers.hpp"

namespace pqt {

EgfSeries::EgfSeries(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("EgfSeries needs at least the constant coefficient");
}

EgfSeries EgfSeries::truncated(std::size_t order) const {
  const auto n = std::min(order, this->order());
  return EgfSeries(std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n) + 1));
}

EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b) {
  const auto order = std::min(a.order(), b.order());
  EgfSeries r(order);
  for (std::size_t n = 0; n <= order; ++n) {
    MultiPoly sum;
    for (std::size_t i = 0; i <= n; ++i) {
      if (a[i].is_zero() || b[n - i].is_zero()) continue;
      sum += binomial(static_cast<int>(n), static_cast<int>(i)) * (a[i] * b[n - i]);
    }
    r[n] = std::move(sum);
  }
  return r;
}

std::vector<std::vector<MultiPoly>> partial_bell_table(std::size_t n, std::span<const MultiPoly> g) {
  if (n > 0 && g.size() < n + 1)
    throw std::invalid_argument("partial_bell_table: need arguments g_1..g_" + std::to_string(n));
  std::vector<std::vector<MultiPoly>> table(n + 1);
  table[0] = {MultiPoly(1L)};
  for (std::size_t m = 1; m <= n; ++m) {
    table[m].resize(m + 1);
    for (std::size_t k = 1; k <= m; ++k) {
      MultiPoly sum;
      for (std::size_t j = 1; j <= m - k + 1; ++j) {
        const MultiPoly& prev = table[m - j][k - 1];
        if (prev.is_zero() || g[j].is_zero()) continue;
        sum += binomial(static_cast<int>(m - 1), static_cast<int>(j - 1)) * (g[j] * prev);
      }
      table[m][k] = std::move(sum);
    }
  }
  return table;
}

MultiPoly partial_bell(std::size_t n, std::size_t k, std::span<const MultiPoly> g) {
  if (k > n) return {};
  if (n == 0) return MultiPoly(1L);
  if (k == 0) return {};
  if (g.size() < n - k + 2)
    throw std::invalid_argument("partial_bell: B_{" + std::to_string(n) + "," + std::to_string(k) +
                                "} needs arguments g_1..g_" + std::to_string(n - k + 1));
  // Only g_1..g_{n-k+1} can contribute; pad the rest with zeros.
  std::vector<MultiPoly> args(n + 1);
  std::copy_n(g.begin(), n - k + 2, args.begin());
  return partial_bell_table(n, args)[n][k];
}

EgfSeries egf_compose(const EgfSeries& outer, const EgfSeries& inner) {
  if (!inner[0].is_zero()) throw std::invalid_argument("egf_compose: inner series has a nonzero constant term");
  const auto order = std::min(outer.order(), inner.order());
  const auto bell_table = partial_bell_table(order, inner.coeffs());
  EgfSeries r(order);
  r[0] = outer[0];
  for (std::size_t n = 1; n <= order; ++n) {
    MultiPoly sum;
    for (std::size_t k = 1; k <= n; ++k) {
      if (outer[k].is_zero() || bell_table[n][k].is_zero()) continue;
      sum += outer[k] * bell_table[n][k];
    }
    r[n] = std::move(sum);
  }
  return r;
}

Rational generalized_binomial(const Rational& alpha, std::size_t m) {
  Rational r = 1;
  for (std::size_t i = 0; i < m; ++i) {
    r *= alpha - static_cast<long>(i);
    r /= static_cast<long>(i + 1);
  }
  return r;
}

std::vector<Rational> ogf_binomial_power(std::span<const Rational> z, const Rational& alpha, std::size_t n_max) {
  if (z.empty() || z[0] != 0) throw std::invalid_argument("ogf_binomial_power: z must have zero constant term");
  if (z.size() < n_max + 1)
    throw std::invalid_argument("ogf_binomial_power: z has " + std::to_string(z.size()) +
                                " coefficients, need " + std::to_string(n_max + 1));
  std::vector<Rational> result(n_max + 1, Rational(0));
  std::vector<Rational> z_power(n_max + 1, Rational(0));
  z_power[0] = 1;
  Rational binom = 1;
  // z^m has no terms below t^m, so m never needs to exceed n_max
  for (std::size_t m = 0; m <= n_max; ++m) {
    if (m > 0) {
      binom *= alpha - static_cast<long>(m - 1);
      binom /= static_cast<long>(m);
      std::vector<Rational> next(n_max + 1, Rational(0));
      for (std::size_t i = m - 1; i <= n_max; ++i) {
        if (z_power[i] == 0) continue;
        for (std::size_t j = 1; i + j <= n_max; ++j) next[i + j] += z_power[i] * z[j];
      }
      z_power = std::move(next);
    }
    if (binom == 0) break;
    for (std::size_t n = m; n <= n_max; ++n) result[n] += binom * z_power[n];
  }
  return result;
}

}  // namespace pqt
