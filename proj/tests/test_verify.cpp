#include <algorithm>

#include "catch_amalgamated.hpp"
#include "pqt/numbers.hpp"
#include "pqt/verify.hpp"

using namespace pqt;

TEST_CASE("every identity passes at small n") {
  for (Identity id : all_identities()) {
    const auto report = verify_identity(id, 5);
    INFO(report.identity);
    CHECK(report.passed());
    CHECK_FALSE(report.cells.empty());
    CHECK(report.first_failure() == nullptr);
  }
}

TEST_CASE("stirling12 cell n=3, k=2") {
  const auto report = verify_identity("stirling12", 3);
  const auto it = std::find_if(report.cells.begin(), report.cells.end(),
                               [](const VerificationCell& c) { return c.label == "n=3,k=2"; });
  REQUIRE(it != report.cells.end());
  CHECK(it->pass);
  // c(3,2) S(2,2) + c(3,3) S(3,2) = 3 + 3 = (3!/2!) C(2,1)
  CHECK(stirling1_unsigned(3, 2) * stirling2(2, 2) + stirling1_unsigned(3, 3) * stirling2(3, 2) == 6);
}

TEST_CASE("orthogonality diagonal") {
  const auto report = verify_identity(Identity::orthogonality, 0);
  REQUIRE(report.cells.size() == 1);
  CHECK(report.cells[0].pass);
}

TEST_CASE("names, budgets and errors") {
  CHECK(parse_identity("llp-grid") == Identity::llp_grid);
  CHECK(identity_name(Identity::oracle_vs_eval) == "oracle-vs-eval");
  CHECK_FALSE(parse_identity("nope").has_value());
  CHECK_THROWS_AS(verify_identity("nope", 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(Identity::llp_grid, 9), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(Identity::stirling12, -1), std::invalid_argument);
  CHECK(identity_budget(Identity::llp_grid) == 8);
}

TEST_CASE("custom oracle grid") {
  VerifyOptions options;
  options.xs = {Rational(-3, 4)};
  options.ps = {Rational(5)};
  options.qs = {Rational(-2, 3), Rational(7, 2)};
  const auto report = verify_identity(Identity::oracle_vs_eval, 8, options);
  CHECK(report.cells.size() == 2);
  CHECK(report.passed());
}

TEST_CASE("report with a failing cell") {
  VerificationReport report{"demo", 1, {{"a", true, {}}, {"b", false, "expected 1, got 2"}, {"c", false, {}}}};
  CHECK_FALSE(report.passed());
  REQUIRE(report.first_failure() != nullptr);
  CHECK(report.first_failure()->label == "b");
}

TEST_CASE("average nse by enumeration") {
  CHECK(avg_nse_enumerated(1) == 0);
  CHECK(avg_nse_enumerated(2) == Rational(1, 3));
  CHECK(avg_nse_enumerated(3) == Rational(10, 13));
}
