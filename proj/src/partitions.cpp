#include "pqt/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "pqt/numbers.hpp"

namespace pqt {

namespace {

bool has_ordered_blocks(Flavor f) { return f == Flavor::LSP || f == Flavor::LLP; }
bool has_ordered_elements(Flavor f) { return f == Flavor::SLP || f == Flavor::LLP; }

// Drives restricted growth strings a[0..n-1] with exactly k distinct values;
// element i+1 goes to block a[i].
class SkeletonWalker {
 public:
  SkeletonWalker(int n, int k, const std::function<void(const std::vector<Block>&)>& visit)
      : n_(n), k_(k), rgs_(n), visit_(visit) {}

  void run() { extend(0, 0); }

 private:
  void extend(int i, int used) {
    if (i == n_) {
      if (used == k_) emit();
      return;
    }
    // the remaining n - i elements must open the k - used missing blocks
    if (k_ - used > n_ - i) return;
    for (int b = 0; b <= std::min(used, k_ - 1); ++b) {
      rgs_[i] = b;
      extend(i + 1, b == used ? used + 1 : used);
    }
  }

  void emit() {
    std::vector<Block> blocks(k_);
    for (int i = 0; i < n_; ++i) blocks[rgs_[i]].push_back(i + 1);
    visit_(blocks);
  }

  int n_;
  int k_;
  std::vector<int> rgs_;
  const std::function<void(const std::vector<Block>&)>& visit_;
};

}  // namespace

std::string_view flavor_name(Flavor flavor) {
  switch (flavor) {
    case Flavor::SSP: return "SSP";
    case Flavor::LSP: return "LSP";
    case Flavor::SLP: return "SLP";
    case Flavor::LLP: return "LLP";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(std::string_view name) {
  for (Flavor f : {Flavor::SSP, Flavor::LSP, Flavor::SLP, Flavor::LLP}) {
    std::string lower(flavor_name(f));
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (name == flavor_name(f) || name == lower) return f;
  }
  return std::nullopt;
}

bool is_well_formed(const OrderedPartition& pi) {
  if (pi.n < 0) return false;
  std::vector<bool> seen(pi.n + 1, false);
  std::size_t total = 0;
  for (const auto& block : pi.blocks) {
    if (block.empty()) return false;
    for (int e : block) {
      if (e < 1 || e > pi.n || seen[e]) return false;
      seen[e] = true;
      ++total;
    }
  }
  return total == static_cast<std::size_t>(pi.n);
}

OrderedPartition parse_partition(std::string_view text) {
  OrderedPartition pi;
  const bool comma_separated = text.find(',') != std::string_view::npos;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('/', start);
    if (end == std::string_view::npos) end = text.size();
    const auto piece = text.substr(start, end - start);
    Block block;
    if (comma_separated) {
      std::size_t s = 0;
      while (s <= piece.size()) {
        auto e = piece.find(',', s);
        if (e == std::string_view::npos) e = piece.size();
        const auto token = piece.substr(s, e - s);
        if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
          throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        block.push_back(std::stoi(std::string(token)));
        s = e + 1;
      }
    } else {
      for (char c : piece) {
        if (c < '0' || c > '9') throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        block.push_back(c - '0');
      }
    }
    pi.blocks.push_back(std::move(block));
    start = end + 1;
  }
  for (const auto& block : pi.blocks)
    for (int e : block) pi.n = std::max(pi.n, e);
  if (!is_well_formed(pi)) throw std::invalid_argument("'" + std::string(text) + "' is not a partition of [n]");
  return pi;
}

std::string to_string(const OrderedPartition& pi) {
  std::ostringstream os;
  const bool commas = pi.n > 9;
  for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
    if (b > 0) os << '/';
    for (std::size_t i = 0; i < pi.blocks[b].size(); ++i) {
      if (commas && i > 0) os << ',';
      os << pi.blocks[b][i];
    }
  }
  return os.str();
}

std::size_t count_rl_minima(const std::vector<int>& seq) {
  std::size_t count = 0;
  int running_min = std::numeric_limits<int>::max();
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (*it < running_min) {
      running_min = *it;
      ++count;
    }
  }
  return count;
}

std::size_t nsb(const OrderedPartition& pi) {
  std::vector<int> openers;
  openers.reserve(pi.blocks.size());
  for (const auto& block : pi.blocks) openers.push_back(*std::min_element(block.begin(), block.end()));
  return pi.blocks.size() - count_rl_minima(openers);
}

std::size_t nse(const OrderedPartition& pi) {
  std::size_t total = 0;
  for (const auto& block : pi.blocks) total += block.size() - count_rl_minima(block);
  return total;
}

BigInt count_closed_form(int n, int k, Flavor flavor) {
  if (k < 1 || k > n) return 0;
  switch (flavor) {
    case Flavor::SSP: return stirling2(n, k);
    case Flavor::LSP: return factorial(k) * stirling2(n, k);
    case Flavor::SLP: return BigInt(factorial(n) / factorial(k)) * binomial(n - 1, k - 1);
    case Flavor::LLP: return factorial(n) * binomial(n - 1, k - 1);
  }
  return 0;
}

void enumerate(int n, int k, Flavor flavor, const std::function<void(const OrderedPartition&)>& visit, bool force) {
  if (k < 1 || k > n) return;
  if (!force) {
    if (flavor == Flavor::LLP && n > kMaxUnforcedLlpN)
      throw EnumerationBudgetExceeded("LLP enumeration is limited to n <= " + std::to_string(kMaxUnforcedLlpN) +
                                      " without force");
    if (count_closed_form(n, k, flavor) > kMaxUnforcedObjects)
      throw EnumerationBudgetExceeded("enumeration of " + std::string(flavor_name(flavor)) + "(" +
                                      std::to_string(n) + "," + std::to_string(k) +
                                      ") exceeds the object budget without force");
  }

  OrderedPartition pi;
  pi.n = n;
  pi.blocks.resize(k);

  const auto visit_element_orders = [&](std::vector<Block>& blocks) {
    if (!has_ordered_elements(flavor)) {
      pi.blocks = blocks;
      visit(pi);
      return;
    }
    // odometer over per-block permutations; every block starts increasing
    std::vector<Block> current = blocks;
    while (true) {
      pi.blocks = current;
      visit(pi);
      int b = k - 1;
      while (b >= 0 && !std::next_permutation(current[b].begin(), current[b].end())) --b;
      if (b < 0) break;
    }
  };

  const std::function<void(const std::vector<Block>&)> on_skeleton = [&](const std::vector<Block>& skeleton) {
    if (!has_ordered_blocks(flavor)) {
      std::vector<Block> blocks = skeleton;
      visit_element_orders(blocks);
      return;
    }
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<Block> blocks;
      blocks.reserve(k);
      for (int idx : order) blocks.push_back(skeleton[idx]);
      visit_element_orders(blocks);
    } while (std::next_permutation(order.begin(), order.end()));
  };

  SkeletonWalker(n, k, on_skeleton).run();
}

std::vector<OrderedPartition> enumerate_all(int n, int k, Flavor flavor, bool force) {
  std::vector<OrderedPartition> out;
  enumerate(n, k, flavor, [&](const OrderedPartition& pi) { out.push_back(pi); }, force);
  return out;
}

BigInt count(int n, int k, Flavor flavor) {
  const BigInt closed = count_closed_form(n, k, flavor);
  if (n > 7) return closed;
  std::uint64_t tally = 0;
  enumerate(n, k, flavor, [&](const OrderedPartition&) { ++tally; });
  if (BigInt(static_cast<unsigned long>(tally)) != closed)
    throw std::logic_error("enumerated " + std::string(flavor_name(flavor)) + " count " + std::to_string(tally) +
                           " disagrees with closed form " + closed.get_str());
  return closed;
}

DistGrid dist_grid(int n, int k, bool force) {
  if (k < 1 || k > n) return {};
  std::vector<std::vector<std::uint64_t>> tally(k, std::vector<std::uint64_t>(n - k + 1, 0));
  enumerate(
      n, k, Flavor::LLP, [&](const OrderedPartition& pi) { ++tally[nsb(pi)][nse(pi)]; }, force);
  DistGrid grid(k, std::vector<BigInt>(n - k + 1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= n - k; ++j) grid[i][j] = static_cast<unsigned long>(tally[i][j]);
  return grid;
}

MultiPoly grid_to_poly(const DistGrid& grid) {
  MultiPoly poly;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid[i].size(); ++j) {
      Monomial m{};
      m[static_cast<std::size_t>(Var::u)] = static_cast<std::uint32_t>(i);
      m[static_cast<std::size_t>(Var::v)] = static_cast<std::uint32_t>(j);
      poly.add_term(m, grid[i][j]);
    }
  }
  return poly;
}

MultiPoly dist_poly(int n, int k, bool force) { return grid_to_poly(dist_grid(n, k, force)); }

}  // namespace pqt
