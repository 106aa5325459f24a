#include "pqt/permstats.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pqt {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const auto n = static_cast<int>(word_.size());
  std::vector<bool> seen(word_.size() + 1, false);
  for (int value : word_) {
    if (value < 1 || value > n || seen[value])
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    seen[value] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(std::max(n, 0));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

NseRlmSplit decompose(const Permutation& sigma) {
  NseRlmSplit split;
  const auto word = sigma.word();
  int running_min = std::numeric_limits<int>::max();
  for (std::size_t j = word.size(); j-- > 0;) {
    if (word[j] < running_min) {
      running_min = word[j];
      split.rlm_positions.push_back(j);
    } else {
      split.nse_positions.push_back(j);
    }
  }
  std::reverse(split.rlm_positions.begin(), split.rlm_positions.end());
  std::reverse(split.nse_positions.begin(), split.nse_positions.end());
  return split;
}

std::size_t rlm_count(const Permutation& sigma) {
  std::size_t count = 0;
  int running_min = std::numeric_limits<int>::max();
  const auto word = sigma.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < running_min) {
      running_min = *it;
      ++count;
    }
  }
  return count;
}

std::size_t nse_perm(const Permutation& sigma) { return sigma.size() - rlm_count(sigma); }

std::size_t ltr_max_count(const Permutation& sigma) {
  std::size_t count = 0;
  int running_max = 0;
  for (int value : sigma.word()) {
    if (value > running_max) {
      running_max = value;
      ++count;
    }
  }
  return count;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> word(std::max(n, 0));
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

namespace {

void check_budget(int n) {
  if (n < 1 || n > kMaxExhaustivePermN)
    throw std::invalid_argument("exhaustive permutation scan needs 1 <= n <= " + std::to_string(kMaxExhaustivePermN));
}

}  // namespace

std::vector<std::uint64_t> nse_distribution(int n) {
  check_budget(n);
  std::vector<std::uint64_t> counts(n, 0);
  for_each_permutation(n, [&](const Permutation& sigma) { ++counts[nse_perm(sigma)]; });
  return counts;
}

std::vector<std::uint64_t> ltr_max_distribution(int n) {
  check_budget(n);
  std::vector<std::uint64_t> counts(n + 1, 0);
  for_each_permutation(n, [&](const Permutation& sigma) { ++counts[ltr_max_count(sigma)]; });
  return counts;
}

}  // namespace pqt
