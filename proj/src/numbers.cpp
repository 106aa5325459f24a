#include "pqt/numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace pqt {

namespace {

void require_nonnegative(int n) {
  if (n < 0) throw std::domain_error("negative argument n = " + std::to_string(n));
}

BigInt lookup(const std::vector<std::vector<BigInt>>& table, int n, int k) {
  if (k < 0 || k > n) return 0;
  return table[n][k];
}

}  // namespace

NumberTables& NumberTables::instance() {
  static NumberTables tables;
  return tables;
}

NumberTables::NumberTables() {
  binomial_.push_back({BigInt(1)});
  stirling2_.push_back({BigInt(1)});
  stirling1_.push_back({BigInt(1)});
  bell_.push_back(1);
  factorial_.push_back(1);
}

int NumberTables::max_n() const {
  std::shared_lock lock(mutex_);
  return static_cast<int>(binomial_.size()) - 1;
}

void NumberTables::reserve(int n) {
  require_nonnegative(n);
  {
    std::shared_lock lock(mutex_);
    if (static_cast<int>(binomial_.size()) > n) return;
  }
  std::unique_lock lock(mutex_);
  grow_locked(n);
}

void NumberTables::grow_locked(int n) {
  for (int m = static_cast<int>(binomial_.size()); m <= n; ++m) {
    const auto& b_prev = binomial_.back();
    const auto& s2_prev = stirling2_.back();
    const auto& s1_prev = stirling1_.back();
    std::vector<BigInt> b(m + 1), s2(m + 1), s1(m + 1);
    // entries with k = m read index m of the previous row, which is out of range
    const auto prev = [m](const std::vector<BigInt>& row, int k) { return k < m ? row[k] : BigInt(0); };
    b[0] = 1;
    s2[0] = 0;
    s1[0] = 0;
    BigInt row_sum = 0;
    for (int k = 1; k <= m; ++k) {
      b[k] = prev(b_prev, k) + b_prev[k - 1];
      s2[k] = k * prev(s2_prev, k) + s2_prev[k - 1];
      s1[k] = (m - 1) * prev(s1_prev, k) + s1_prev[k - 1];
      row_sum += s2[k];
    }
    binomial_.push_back(std::move(b));
    stirling2_.push_back(std::move(s2));
    stirling1_.push_back(std::move(s1));
    bell_.push_back(row_sum);
    factorial_.push_back(factorial_.back() * m);
  }
}

BigInt NumberTables::binomial(int n, int k) {
  reserve(n);
  std::shared_lock lock(mutex_);
  return lookup(binomial_, n, k);
}

BigInt NumberTables::stirling2(int n, int k) {
  reserve(n);
  std::shared_lock lock(mutex_);
  return lookup(stirling2_, n, k);
}

BigInt NumberTables::stirling1_unsigned(int n, int k) {
  reserve(n);
  std::shared_lock lock(mutex_);
  return lookup(stirling1_, n, k);
}

BigInt NumberTables::bell(int n) {
  reserve(n);
  std::shared_lock lock(mutex_);
  return bell_[n];
}

BigInt NumberTables::factorial(int n) {
  reserve(n);
  std::shared_lock lock(mutex_);
  return factorial_[n];
}

BigInt binomial(int n, int k) { return NumberTables::instance().binomial(n, k); }
BigInt stirling2(int n, int k) { return NumberTables::instance().stirling2(n, k); }
BigInt stirling1_unsigned(int n, int k) { return NumberTables::instance().stirling1_unsigned(n, k); }

BigInt stirling1_signed(int n, int k) {
  BigInt c = stirling1_unsigned(n, k);
  return (n - k) % 2 == 0 ? c : BigInt(-c);
}

BigInt bell(int n) { return NumberTables::instance().bell(n); }
BigInt factorial(int n) { return NumberTables::instance().factorial(n); }

MultiPoly q_product_poly(int n) {
  require_nonnegative(n);
  const MultiPoly q = MultiPoly::variable(Var::q);
  MultiPoly result(1L);
  for (int m = 1; m <= n; ++m) {
    // m*q - (m - 1)
    result *= q * BigInt(m) - MultiPoly(static_cast<long>(m - 1));
  }
  return result;
}

}  // namespace pqt
