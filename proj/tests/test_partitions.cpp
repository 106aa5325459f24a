#include <algorithm>
#include <numeric>
#include <set>

#include "catch_amalgamated.hpp"
#include "pqt/numbers.hpp"
#include "pqt/partitions.hpp"

using namespace pqt;

namespace {

const MultiPoly u = MultiPoly::variable(Var::u);
const MultiPoly v = MultiPoly::variable(Var::v);
const MultiPoly one(1L);

// A list of lists of [n] with k blocks is a permutation word cut into k
// consecutive non-empty pieces; each object arises exactly once this way.
MultiPoly dist_by_cutting_words(int n, int k) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  MultiPoly result;
  do {
    // choose k-1 of the n-1 gaps
    std::vector<bool> cut(n - 1, false);
    std::fill(cut.begin(), cut.begin() + (k - 1), true);
    do {
      OrderedPartition pi{n, {{}}};
      for (int i = 0; i < n; ++i) {
        pi.blocks.back().push_back(word[i]);
        if (i < n - 1 && cut[i]) pi.blocks.emplace_back();
      }
      result += pow(u, static_cast<std::uint32_t>(nsb(pi))) * pow(v, static_cast<std::uint32_t>(nse(pi)));
    } while (std::prev_permutation(cut.begin(), cut.end()));
  } while (std::next_permutation(word.begin(), word.end()));
  return result;
}

bool is_increasing(const Block& b) { return std::is_sorted(b.begin(), b.end()); }

bool blocks_by_minimum(const OrderedPartition& pi) {
  return std::is_sorted(pi.blocks.begin(), pi.blocks.end(), [](const Block& a, const Block& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
}

}  // namespace

TEST_CASE("nsb and nse on the worked example") {
  const auto pi = parse_partition("32/681/57/4");
  CHECK(pi.n == 8);
  CHECK(pi.num_blocks() == 4);
  CHECK(nsb(pi) == 2);
  CHECK(nse(pi) == 3);
  CHECK(to_string(pi) == "32/681/57/4");
}

TEST_CASE("nsb and nse edge cases") {
  CHECK(nsb(parse_partition("3142")) == 0);
  CHECK(nsb(parse_partition("2/1/3")) == 1);
  CHECK(nse(parse_partition("12/345/6")) == 0);
  CHECK(nse(parse_partition("321")) == 2);
  CHECK(nse(parse_partition("2/1/3")) == 0);
}

TEST_CASE("slash notation parsing") {
  const auto big = parse_partition("10,3/2,1/4,5,6,7,8,9");
  CHECK(big.n == 10);
  CHECK(big.blocks[0] == Block{10, 3});
  CHECK(to_string(big) == "10,3/2,1/4,5,6,7,8,9");
  CHECK_THROWS_AS(parse_partition("12/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("13"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1//2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1a"), std::invalid_argument);
  CHECK_FALSE(is_well_formed(OrderedPartition{3, {{1, 2}}}));
  CHECK(is_well_formed(OrderedPartition{3, {{3}, {1, 2}}}));
}

TEST_CASE("enumerate examples") {
  const auto llp21 = enumerate_all(2, 1, Flavor::LLP);
  REQUIRE(llp21.size() == 2);
  CHECK(llp21[0].blocks == std::vector<Block>{{1, 2}});
  CHECK(llp21[1].blocks == std::vector<Block>{{2, 1}});

  const auto ssp33 = enumerate_all(3, 3, Flavor::SSP);
  REQUIRE(ssp33.size() == 1);
  CHECK(to_string(ssp33[0]) == "1/2/3");

  CHECK(enumerate_all(3, 2, Flavor::LLP).size() == 12);
  CHECK(enumerate_all(3, 0, Flavor::LLP).empty());
  CHECK(enumerate_all(3, 4, Flavor::SSP).empty());
}

TEST_CASE("enumeration yields each canonical object exactly once") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (Flavor f : {Flavor::SSP, Flavor::LSP, Flavor::SLP, Flavor::LLP}) {
        const auto all = enumerate_all(n, k, f);
        std::set<std::vector<Block>> distinct;
        for (const auto& pi : all) {
          REQUIRE(is_well_formed(pi));
          REQUIRE(pi.num_blocks() == static_cast<std::size_t>(k));
          if (f == Flavor::SSP || f == Flavor::LSP)
            CHECK(std::all_of(pi.blocks.begin(), pi.blocks.end(), is_increasing));
          if (f == Flavor::SSP || f == Flavor::SLP) CHECK(blocks_by_minimum(pi));
          distinct.insert(pi.blocks);
        }
        CHECK(distinct.size() == all.size());
        CHECK(BigInt(static_cast<unsigned long>(all.size())) == count_closed_form(n, k, f));
      }
    }
  }
}

TEST_CASE("enumeration order is deterministic") {
  CHECK(enumerate_all(5, 3, Flavor::LLP) == enumerate_all(5, 3, Flavor::LLP));
  const auto lsp = enumerate_all(3, 2, Flavor::LSP);
  std::vector<std::string> text;
  for (const auto& pi : lsp) text.push_back(to_string(pi));
  CHECK(text == std::vector<std::string>{"12/3", "3/12", "13/2", "2/13", "1/23", "23/1"});
}

TEST_CASE("count examples") {
  CHECK(count(3, 2, Flavor::LLP) == 12);
  CHECK(count(4, 2, Flavor::SSP) == 7);
  CHECK(count(3, 2, Flavor::SLP) == 6);
  CHECK(count(3, 2, Flavor::LSP) == 6);
  CHECK(count(20, 5, Flavor::LLP) == factorial(20) * binomial(19, 4));
  CHECK(count(5, 7, Flavor::LLP) == 0);
}

TEST_CASE("statistic bounds and invariance") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      enumerate(n, k, Flavor::LLP, [&](const OrderedPartition& pi) {
        CHECK(nsb(pi) <= static_cast<std::size_t>(k - 1));
        CHECK(nse(pi) <= static_cast<std::size_t>(n - k));
        // nse ignores block order
        OrderedPartition rotated = pi;
        std::rotate(rotated.blocks.begin(), rotated.blocks.begin() + 1, rotated.blocks.end());
        CHECK(nse(rotated) == nse(pi));
        // nsb ignores element order
        OrderedPartition sorted = pi;
        for (auto& b : sorted.blocks) std::sort(b.begin(), b.end());
        CHECK(nsb(sorted) == nsb(pi));
      });
    }
  }
}

TEST_CASE("dist_poly examples") {
  CHECK(dist_poly(2, 1) == one + v);
  CHECK(dist_poly(3, 2) == BigInt(3) * (one + u) * (one + v));
  for (int n = 1; n <= 6; ++n) {
    MultiPoly expected;
    for (int i = 0; i <= n - 1; ++i) expected += stirling1_unsigned(n, n - i) * pow(u, static_cast<std::uint32_t>(i));
    CHECK(dist_poly(n, n) == expected);
  }
}

TEST_CASE("dist_poly matches the word-cutting oracle") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) CHECK(dist_poly(n, k) == dist_by_cutting_words(n, k));
}

TEST_CASE("dist_poly degree bounds and family cardinalities") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      const MultiPoly d = dist_poly(n, k);
      CHECK(d.degree(Var::u) <= static_cast<std::uint32_t>(k - 1));
      CHECK(d.degree(Var::v) <= static_cast<std::uint32_t>(n - k));
      const auto at = [&](long uu, long vv) { return poly_eval(d, {{Var::u, Rational(uu)}, {Var::v, Rational(vv)}}); };
      CHECK(at(0, 0) == Rational(count(n, k, Flavor::SSP)));
      CHECK(at(1, 0) == Rational(count(n, k, Flavor::LSP)));
      CHECK(at(0, 1) == Rational(count(n, k, Flavor::SLP)));
      CHECK(at(1, 1) == Rational(count(n, k, Flavor::LLP)));
    }
  }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(enumerate(9, 1, Flavor::LLP, [](const OrderedPartition&) {}), EnumerationBudgetExceeded);
  CHECK_THROWS_AS(dist_grid(9, 3), EnumerationBudgetExceeded);
  CHECK_THROWS_AS(enumerate(11, 11, Flavor::LSP, [](const OrderedPartition&) {}), EnumerationBudgetExceeded);
  std::uint64_t seen = 0;
  enumerate(9, 9, Flavor::LLP, [&](const OrderedPartition&) { ++seen; }, /*force=*/true);
  CHECK(seen == 362880);
  // SSP is cheap and stays open past n = 8
  CHECK(enumerate_all(10, 2, Flavor::SSP).size() == 511);
}

TEST_CASE("flavor names") {
  CHECK(parse_flavor("llp") == Flavor::LLP);
  CHECK(parse_flavor("SLP") == Flavor::SLP);
  CHECK_FALSE(parse_flavor("XYZ").has_value());
  CHECK(flavor_name(Flavor::LSP) == "LSP");
}
