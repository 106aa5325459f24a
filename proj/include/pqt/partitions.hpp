#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqt/multipoly.hpp"

namespace pqt {

/// The four partition families of [n] into k non-empty blocks.
///   SSP  sets of sets    (unordered blocks, unordered elements)
///   LSP  lists of sets   (ordered blocks, unordered elements)
///   SLP  sets of lists   (unordered blocks, ordered elements)
///   LLP  lists of lists  (ordered blocks, ordered elements)
enum class Flavor { SSP, LSP, SLP, LLP };

std::string_view flavor_name(Flavor flavor);
std::optional<Flavor> parse_flavor(std::string_view name);

using Block = std::vector<int>;

/// A partition of [n] = {1..n} written as a sequence of blocks, each a
/// sequence of elements. Unordered families are represented by their
/// canonical form: increasing elements for "sets" of elements, blocks
/// ordered by minimum for "sets" of blocks.
struct OrderedPartition {
  int n = 0;
  std::vector<Block> blocks;

  std::size_t num_blocks() const noexcept { return blocks.size(); }

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

// Non-empty, pairwise disjoint blocks whose union is exactly [n].
bool is_well_formed(const OrderedPartition& pi);

/// Parses slash notation such as "32/681/57/4". Elements inside a block
/// are single digits unless commas are present ("10,3/2,1"). n is the
/// largest element. Throws std::invalid_argument if the result is not a
/// partition of [n].
OrderedPartition parse_partition(std::string_view text);

// Slash notation; digits are concatenated when n <= 9 and comma-separated
// otherwise.
std::string to_string(const OrderedPartition& pi);

// Number of right-to-left minima of a sequence of distinct values.
std::size_t count_rl_minima(const std::vector<int>& seq);

/// Blocks that must be moved right so that block minima increase: k minus
/// the number of right-to-left minima of the sequence of block minima.
std::size_t nsb(const OrderedPartition& pi);

/// Elements that must be moved right so every block increases: for each
/// block, its length minus its number of right-to-left minima.
std::size_t nse(const OrderedPartition& pi);

class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unforced enumeration limits: LLP stops at n = 8, and no single call may
// emit more objects than the whole of LLP at n = 8 (8! * 2^7).
inline constexpr int kMaxUnforcedLlpN = 8;
inline constexpr std::uint64_t kMaxUnforcedObjects = 5'160'960;

/// Calls `visit` once per object of the family, in a deterministic order:
/// set-partition skeletons by restricted growth string, then block orders,
/// then element orders, each in lexicographic order. SSP and SLP objects
/// come in canonical block order. k outside 1..n visits nothing. Throws
/// EnumerationBudgetExceeded past the unforced limits unless `force`.
void enumerate(int n, int k, Flavor flavor, const std::function<void(const OrderedPartition&)>& visit,
               bool force = false);

std::vector<OrderedPartition> enumerate_all(int n, int k, Flavor flavor, bool force = false);

/// Closed-form family sizes:
///   SSP S(n,k), LSP k! S(n,k), SLP (n!/k!) C(n-1,k-1), LLP n! C(n-1,k-1).
BigInt count_closed_form(int n, int k, Flavor flavor);

/// Family size. For n <= 7 the objects are enumerated and the tally is
/// checked against the closed form (std::logic_error on mismatch);
/// larger n use the closed form directly.
BigInt count(int n, int k, Flavor flavor);

/// grid[i][j] = number of LLP objects with nsb = i and nse = j;
/// i ranges over 0..k-1 and j over 0..n-k.
using DistGrid = std::vector<std::vector<BigInt>>;
DistGrid dist_grid(int n, int k, bool force = false);

// sum over LLP objects of u^nsb v^nse, from full enumeration.
MultiPoly dist_poly(int n, int k, bool force = false);

MultiPoly grid_to_poly(const DistGrid& grid);

}  // namespace pqt
