#include "pqt/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pqt {

char var_name(Var var) {
  static constexpr char names[kNumVars] = {'x', 'p', 'q', 'u', 'v'};
  return names[static_cast<std::size_t>(var)];
}

std::optional<Var> parse_var(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  for (Var var : kAllVars)
    if (var_name(var) == name.front()) return var;
  return std::nullopt;
}

std::uint32_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

bool graded_less(const Monomial& a, const Monomial& b) {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, BigInt(c));
}

MultiPoly::MultiPoly(const BigInt& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(Var var, std::uint32_t exponent) {
  Monomial m{};
  m[static_cast<std::size_t>(var)] = exponent;
  return monomial(m, BigInt(1));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const BigInt& coeff) {
  MultiPoly r;
  r.add_term(m, coeff);
  return r;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

MultiPoly MultiPoly::coeff_of(Var var, std::uint32_t e) const {
  const auto idx = static_cast<std::size_t>(var);
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m[idx] != e) continue;
    Monomial rest = m;
    rest[idx] = 0;
    r.terms_.emplace(rest, c);
  }
  return r;
}

std::uint32_t MultiPoly::degree(Var var) const {
  const auto idx = static_cast<std::size_t>(var);
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[idx]);
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, pqt::total_degree(m));
  return d;
}

std::vector<Var> MultiPoly::variables() const {
  std::vector<Var> vars;
  for (Var var : kAllVars)
    if (degree(var) > 0) vars.push_back(var);
  return vars;
}

std::vector<std::pair<Monomial, BigInt>> MultiPoly::sorted_terms() const {
  std::vector<std::pair<Monomial, BigInt>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return graded_less(a.first, b.first); });
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  BigInt prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
      prod = ca * cb;
      r.add_term(m, prod);
    }
  }
  return r;
}

MultiPoly pow(const MultiPoly& base, std::uint32_t exponent) {
  MultiPoly result(1L);
  MultiPoly sq = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= sq;
    exponent >>= 1U;
    if (exponent > 0) sq = sq * sq;
  }
  return result;
}

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly poly_substitute(const MultiPoly& a, Var var, const MultiPoly& replacement) {
  const auto idx = static_cast<std::size_t>(var);
  std::vector<MultiPoly> powers{MultiPoly(1L)};
  const auto power = [&](std::uint32_t e) -> const MultiPoly& {
    while (powers.size() <= e) powers.push_back(powers.back() * replacement);
    return powers[e];
  };
  MultiPoly r;
  for (const auto& [m, c] : a.terms()) {
    Monomial rest = m;
    rest[idx] = 0;
    r += MultiPoly::monomial(rest, c) * power(m[idx]);
  }
  return r;
}

MultiPoly poly_specialize(const MultiPoly& a, const std::map<Var, BigInt>& values) {
  MultiPoly r;
  BigInt factor;
  for (const auto& [m, c] : a.terms()) {
    Monomial rest = m;
    BigInt coeff = c;
    for (const auto& [var, value] : values) {
      const auto idx = static_cast<std::size_t>(var);
      mpz_pow_ui(factor.get_mpz_t(), value.get_mpz_t(), m[idx]);
      coeff *= factor;
      rest[idx] = 0;
    }
    r.add_term(rest, coeff);
  }
  return r;
}

Rational poly_eval(const MultiPoly& a, const Assignment& assignment) {
  for (Var var : a.variables())
    if (!assignment.contains(var))
      throw std::invalid_argument(std::string("no value assigned to variable '") + var_name(var) + "'");
  Rational sum = 0;
  Rational term;
  Rational factor;
  for (const auto& [m, c] : a.terms()) {
    term = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      const Rational& base = assignment.at(kAllVars[i]);
      mpz_pow_ui(factor.get_num_mpz_t(), base.get_num_mpz_t(), m[i]);
      mpz_pow_ui(factor.get_den_mpz_t(), base.get_den_mpz_t(), m[i]);
      term *= factor;
    }
    sum += term;
  }
  return sum;
}

std::string to_string(const MultiPoly& a) {
  if (a.is_zero()) return "0";
  // x prints last so that polynomials in x read with their p,q coefficients first
  static constexpr std::array<Var, kNumVars> print_order = {Var::p, Var::q, Var::u, Var::v, Var::x};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.sorted_terms()) {
    const bool negative = c < 0;
    const BigInt magnitude = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    const bool constant = total_degree(m) == 0;
    bool need_star = false;
    if (constant || magnitude != 1) {
      os << magnitude;
      need_star = true;
    }
    for (Var var : print_order) {
      const auto e = m[static_cast<std::size_t>(var)];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << var_name(var);
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& a) { return os << to_string(a); }

}  // namespace pqt
