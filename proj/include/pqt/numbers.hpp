#pragma once

#include <shared_mutex>
#include <vector>

#include "pqt/multipoly.hpp"

namespace pqt {

/// Process-wide memoized tables of exact combinatorial numbers.
///
/// Rows are appended on demand and never modified afterwards. Lookups take a
/// shared lock; growth takes the exclusive lock, so concurrent readers are
/// safe and table construction is serialized.
///
/// All lookups take k as a signed value and return 0 outside 0 <= k <= n.
/// A negative n throws std::domain_error.
class NumberTables {
 public:
  static NumberTables& instance();

  BigInt binomial(int n, int k);
  BigInt stirling2(int n, int k);
  BigInt stirling1_unsigned(int n, int k);
  BigInt bell(int n);
  BigInt factorial(int n);

  // Largest n for which every table currently holds a row.
  int max_n() const;

  // Make sure rows 0..n exist.
  void reserve(int n);

 private:
  NumberTables();
  void grow_locked(int n);

  mutable std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> binomial_;
  std::vector<std::vector<BigInt>> stirling2_;
  std::vector<std::vector<BigInt>> stirling1_;
  std::vector<BigInt> bell_;
  std::vector<BigInt> factorial_;
};

BigInt binomial(int n, int k);
BigInt stirling2(int n, int k);
BigInt stirling1_unsigned(int n, int k);
// (-1)^(n-k) * stirling1_unsigned(n, k)
BigInt stirling1_signed(int n, int k);
BigInt bell(int n);
BigInt factorial(int n);

/// Q_n(q) = 1 * q * (2q - 1) * ... * (nq - (n - 1)), Q_0 = 1.
/// Q_{n-1}(q) is the coefficient of t^n/n! in (1 + (1-q)t)^(1/(1-q)).
MultiPoly q_product_poly(int n);

}  // namespace pqt
