#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "pqt/multipoly.hpp"
#include "pqt/rational.hpp"
#include "pqt/series.hpp"

namespace pqt {

// How T_n(x;p,q) was obtained.
enum class Route {
  composition,   // coefficient of the composed EGF exp_p(x (exp_q(t) - 1))
  explicit_sum,  // five-fold sum with signed Stirling numbers and binomials
  substitution,  // sum_k S(n,k; p-1, q-1) x^k from the nsb/nse distribution
};

std::string_view route_name(Route route);

struct TouchardResult {
  int n = 0;
  MultiPoly poly;  // in x, p, q
  Route route = Route::substitution;
};

/// EGF of the deformed exponential (1 + (1-q) t)^(1/(1-q)) in the symbol
/// `var`: coefficient 0 is 1 and coefficient n >= 1 is Q_{n-1}(var).
EgfSeries exp_q_series(std::size_t order, Var var = Var::q);

// Same series with q = v + 1, so coefficient n is (1+v)(1+2v)...(1+(n-1)v).
EgfSeries exp_q_series_shifted(std::size_t order);

// EGF coefficients at a fixed rational q. q = 1 gives all ones.
std::vector<Rational> exp_q_series_at(std::size_t order, const Rational& q);

/// Joint nsb/nse distribution on lists of lists in closed form:
///   [u^i v^j] S(n,k;u,v) = c(n,n-j) S(n-j,k) c(k,k-i).
/// S(0,0) = 1, S(n,0) = 0 for n > 0, and out-of-range cells are 0.
MultiPoly s_uv(int n, int k);

// S_{p,q}(n,k) = S(n,k; p-1, q-1).
MultiPoly s_pq(int n, int k);

MultiPoly touchard_poly(int n, Route route = Route::substitution);
TouchardResult touchard(int n, Route route = Route::substitution);

// sum_k S_{p,q}(n,k) x^k
MultiPoly touchard_substitution(int n);

// Explicit five-fold sum; T_0 = 1 by convention.
MultiPoly touchard_explicit(int n);

// Coefficients 0..order of exp_p(x (exp_q(t) - 1)) by EGF composition.
EgfSeries touchard_series(std::size_t order);

Rational touchard_eval(int n, const Rational& x, const Rational& p, const Rational& q);

/// Ordinary Taylor coefficients 0..order of
///   (1 + (1-p) x ((1 + (1-q) t)^(1/(1-q)) - 1))^(1/(1-p))
/// computed with two rational-exponent binomial expansions, independently
/// of the polynomial routes. Entry n equals touchard_eval(n, x, p, q) / n!.
/// Throws std::invalid_argument for p = 1 or q = 1; use touchard_series for
/// those limits.
std::vector<Rational> taylor_oracle(const Rational& x, const Rational& p, const Rational& q, std::size_t order);

/// Mean nse over all sets of lists of [n] (any number of blocks):
///   sum_j j c(n,n-j) B_{n-j} / sum_k c(n,k) B_k.
Rational avg_nse(int n);

}  // namespace pqt
