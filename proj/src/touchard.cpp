#include "pqt/touchard.hpp"

#include <stdexcept>

#include "pqt/numbers.hpp"

namespace pqt {

namespace {

Monomial uv_monomial(int i, int j) {
  Monomial m{};
  m[static_cast<std::size_t>(Var::u)] = static_cast<std::uint32_t>(i);
  m[static_cast<std::size_t>(Var::v)] = static_cast<std::uint32_t>(j);
  return m;
}

Monomial pqx_monomial(int m_exp, int l_exp, int k_exp) {
  Monomial m{};
  m[static_cast<std::size_t>(Var::p)] = static_cast<std::uint32_t>(m_exp);
  m[static_cast<std::size_t>(Var::q)] = static_cast<std::uint32_t>(l_exp);
  m[static_cast<std::size_t>(Var::x)] = static_cast<std::uint32_t>(k_exp);
  return m;
}

void require_nonnegative(int n) {
  if (n < 0) throw std::domain_error("negative degree n = " + std::to_string(n));
}

}  // namespace

std::string_view route_name(Route route) {
  switch (route) {
    case Route::composition: return "composition";
    case Route::explicit_sum: return "explicit";
    case Route::substitution: return "substitution";
  }
  return "?";
}

EgfSeries exp_q_series(std::size_t order, Var var) {
  EgfSeries s(order);
  s[0] = MultiPoly(1L);
  const MultiPoly v = MultiPoly::variable(var);
  MultiPoly q_prod(1L);  // Q_{n-1}(var)
  for (std::size_t n = 1; n <= order; ++n) {
    if (n >= 2) {
      const auto m = static_cast<long>(n - 1);
      q_prod *= v * BigInt(m) - MultiPoly(m - 1);
    }
    s[n] = q_prod;
  }
  return s;
}

EgfSeries exp_q_series_shifted(std::size_t order) {
  const MultiPoly q_as_v = MultiPoly::variable(Var::v) + MultiPoly(1L);
  EgfSeries s = exp_q_series(order, Var::q);
  for (std::size_t n = 0; n <= order; ++n) s[n] = poly_substitute(s[n], Var::q, q_as_v);
  return s;
}

std::vector<Rational> exp_q_series_at(std::size_t order, const Rational& q) {
  std::vector<Rational> s(order + 1, Rational(1));
  Rational q_prod = 1;
  for (std::size_t n = 2; n <= order; ++n) {
    const auto m = static_cast<long>(n - 1);
    q_prod *= Rational(m) * q - (m - 1);
    s[n] = q_prod;
  }
  return s;
}

MultiPoly s_uv(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  if (k == 0) return n == 0 ? MultiPoly(1L) : MultiPoly();
  MultiPoly r;
  for (int j = 0; j <= n - k; ++j) {
    const BigInt inner = stirling1_unsigned(n, n - j) * stirling2(n - j, k);
    if (inner == 0) continue;
    for (int i = 0; i <= k - 1; ++i) r.add_term(uv_monomial(i, j), inner * stirling1_unsigned(k, k - i));
  }
  return r;
}

MultiPoly s_pq(int n, int k) {
  const MultiPoly p_minus_1 = MultiPoly::variable(Var::p) - MultiPoly(1L);
  const MultiPoly q_minus_1 = MultiPoly::variable(Var::q) - MultiPoly(1L);
  return poly_substitute(poly_substitute(s_uv(n, k), Var::u, p_minus_1), Var::v, q_minus_1);
}

MultiPoly touchard_substitution(int n) {
  require_nonnegative(n);
  MultiPoly r;
  for (int k = 0; k <= n; ++k) r += s_pq(n, k) * MultiPoly::variable(Var::x, static_cast<std::uint32_t>(k));
  return r;
}

MultiPoly touchard_explicit(int n) {
  require_nonnegative(n);
  if (n == 0) return MultiPoly(1L);
  MultiPoly r;
  for (int k = 1; k <= n; ++k) {
    for (int m = 0; m <= k - 1; ++m) {
      for (int l = 0; l <= n - k; ++l) {
        BigInt sum = 0;
        for (int i = m; i <= k - 1; ++i) {
          for (int j = l; j <= n - k; ++j) {
            sum += binomial(i, m) * binomial(j, l) * stirling1_signed(n, n - j) * stirling2(n - j, k) *
                   stirling1_signed(k, k - i);
          }
        }
        if ((m + l) % 2 != 0) sum = -sum;
        r.add_term(pqx_monomial(m, l, k), sum);
      }
    }
  }
  return r;
}

EgfSeries touchard_series(std::size_t order) {
  const EgfSeries outer = exp_q_series(order, Var::p);
  EgfSeries inner = exp_q_series(order, Var::q);
  const MultiPoly x = MultiPoly::variable(Var::x);
  inner[0] = MultiPoly();
  for (std::size_t n = 1; n <= order; ++n) inner[n] = x * inner[n];
  return egf_compose(outer, inner);
}

MultiPoly touchard_poly(int n, Route route) {
  require_nonnegative(n);
  switch (route) {
    case Route::composition: return touchard_series(static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
    case Route::explicit_sum: return touchard_explicit(n);
    case Route::substitution: return touchard_substitution(n);
  }
  return {};
}

TouchardResult touchard(int n, Route route) { return {n, touchard_poly(n, route), route}; }

Rational touchard_eval(int n, const Rational& x, const Rational& p, const Rational& q) {
  return poly_eval(touchard_poly(n), {{Var::x, x}, {Var::p, p}, {Var::q, q}});
}

std::vector<Rational> taylor_oracle(const Rational& x, const Rational& p, const Rational& q, std::size_t order) {
  if (p == 1 || q == 1)
    throw std::invalid_argument(
        "taylor_oracle needs p != 1 and q != 1; use touchard_series for the classical-exponential limits");
  // exp_q(t) = (1 + (1-q) t)^(1/(1-q))
  std::vector<Rational> z(order + 1, Rational(0));
  if (order >= 1) z[1] = 1 - q;
  const Rational alpha_q = 1 / Rational(1 - q);
  std::vector<Rational> inner = ogf_binomial_power(z, alpha_q, order);

  // w(t) = (1-p) x (exp_q(t) - 1)
  inner[0] = 0;
  const Rational scale = (1 - p) * x;
  for (auto& c : inner) c *= scale;
  const Rational alpha_p = 1 / Rational(1 - p);
  return ogf_binomial_power(inner, alpha_p, order);
}

Rational avg_nse(int n) {
  if (n < 1) throw std::domain_error("avg_nse needs n >= 1");
  BigInt numerator = 0;
  for (int j = 0; j <= n - 1; ++j) numerator += j * stirling1_unsigned(n, n - j) * bell(n - j);
  BigInt denominator = 0;
  for (int k = 0; k <= n; ++k) denominator += stirling1_unsigned(n, k) * bell(k);
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

}  // namespace pqt
