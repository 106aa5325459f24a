#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pqt {

/// A permutation of [n] in one-line notation sigma_1 ... sigma_n.
class Permutation {
 public:
  // Throws std::invalid_argument unless word is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  std::size_t size() const noexcept { return word_.size(); }
  std::span<const int> word() const noexcept { return word_; }
  int operator[](std::size_t i) const { return word_.at(i); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Split of the positions (0-based) of a permutation into the elements that
/// must move right (NSE) and the right-to-left minima (RLM). Both lists are
/// increasing.
struct NseRlmSplit {
  std::vector<std::size_t> nse_positions;
  std::vector<std::size_t> rlm_positions;
};

NseRlmSplit decompose(const Permutation& sigma);

// Positions j with sigma_j > sigma_k for some k > j.
std::size_t nse_perm(const Permutation& sigma);
std::size_t rlm_count(const Permutation& sigma);
std::size_t ltr_max_count(const Permutation& sigma);

inline constexpr int kMaxExhaustivePermN = 9;

// Calls visit for every permutation of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

/// Entry j counts permutations of [n] with nse = j, j = 0..n-1.
/// Throws std::invalid_argument for n < 1 or n > kMaxExhaustivePermN.
std::vector<std::uint64_t> nse_distribution(int n);

/// Entry k counts permutations of [n] with exactly k left-to-right maxima,
/// k = 0..n (entry 0 is always 0). Same budget as nse_distribution.
std::vector<std::uint64_t> ltr_max_distribution(int n);

}  // namespace pqt
