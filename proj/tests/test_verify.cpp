#include "rankmech/verify.hpp"

#include <stdexcept>

#include "doctest.h"
#include "rankmech/optimal.hpp"

using namespace rankmech;

namespace {

Rational R(const char* s) { return parse_rational(s); }

ValuationProfile profile(std::initializer_list<const char*> values) {
  std::vector<Rational> v;
  for (const char* s : values) v.push_back(R(s));
  return ValuationProfile(std::move(v));
}

GridSpec coarse_grid() {
  GridSpec grid;
  grid.values = {0, R("1/3"), R("2/3"), 1};
  return grid;
}

const CheckResult* find_check(const VerificationReport& report, const std::string& name) {
  for (const auto& c : report.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("grid expansion is exhaustive and ordered") {
  GridSpec grid;
  grid.values = {0, 1};
  std::vector<ValuationProfile> profiles = make_profiles(3, grid);
  CHECK(profiles.size() == 8);
  CHECK(profiles.front().values() == std::vector<Rational>{0, 0, 0});
  CHECK(profiles.back().values() == std::vector<Rational>{1, 1, 1});
}

TEST_CASE("random grids are reproducible from the seed") {
  GridSpec grid;
  grid.random_count = 5;
  grid.seed = 3;
  std::vector<ValuationProfile> a = make_profiles(4, grid);
  std::vector<ValuationProfile> b = make_profiles(4, grid);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].values() == b[i].values());
}

TEST_CASE("alternating subset sum vanishes for a balanceable rule") {
  CHECK(check_residual_balance(gl_rule(3), profile({"3", "2", "1"})) == 0);
}

TEST_CASE("alternating subset sum flags the efficient rule") {
  RankingRule efficient({Rational(1), 0, 0});
  CHECK(check_residual_balance(efficient, profile({"3", "2", "1"})) != 0);
}

TEST_CASE("alternating subset sum rejects zeros in the profile") {
  CHECK_THROWS_AS(check_residual_balance(gl_rule(3), profile({"3", "2", "0"})),
                  std::invalid_argument);
}

TEST_CASE("alternating subset sum vanishes at random positive profiles") {
  for (std::size_t n : {3, 5, 7}) {
    RankingRule r = r_optimal_rule(n).pi_star;
    GridSpec grid;
    grid.random_count = 30;
    grid.seed = n;
    for (const auto& v : make_profiles(n, grid)) {
      if (!v.zero_agents().empty()) continue;
      CHECK(check_residual_balance(r, v) == 0);
    }
  }
}

TEST_CASE("single-equation test agrees with the full subset sweep") {
  std::vector<RankingRule> rules{gl_rule(4), equal_share_rule(4),
                                 RankingRule({Rational(1), 0, 0, 0}),
                                 RankingRule({R("1/2"), R("1/4"), R("1/4"), 0})};
  GridSpec grid;
  grid.random_count = 20;
  grid.seed = 11;
  for (const auto& r : rules) {
    bool balanced_everywhere = true;
    for (const auto& v : make_profiles(4, grid)) {
      if (!v.zero_agents().empty()) continue;
      if (check_residual_balance(r, v) != 0) balanced_everywhere = false;
    }
    CHECK(balanced_everywhere == is_implementable(r).implementable);
  }
}

TEST_CASE("full property sweep passes for the five-agent optimal rule") {
  VerificationReport report = check_satisfactory(r_optimal_rule(5).pi_star, coarse_grid());
  CHECK(report.all_passed());
}

TEST_CASE("the efficient rule fails with a reported residual") {
  RankingRule efficient({Rational(1), 0, 0});
  VerificationReport report = check_satisfactory(efficient, coarse_grid());
  CHECK_FALSE(report.all_passed());
  const CheckResult* mono = find_check(report, "monotone_pi");
  REQUIRE(mono);
  CHECK(mono->passed);
  const CheckResult* impl = find_check(report, "implementability_equation");
  REQUIRE(impl);
  CHECK_FALSE(impl->passed);
  const CheckResult* residual = find_check(report, "residual_balance");
  REQUIRE(residual);
  CHECK_FALSE(residual->passed);
  CHECK(residual->counterexample.has_value());
  CHECK(residual->residual.has_value());
}

TEST_CASE("a near-balanced rule reports its exact residual") {
  RankingRule r({R("1/2"), R("1/4"), R("1/4")});
  VerificationReport report = check_satisfactory(r, coarse_grid());
  const CheckResult* impl = find_check(report, "implementability_equation");
  REQUIRE(impl);
  CHECK_FALSE(impl->passed);
  CHECK(impl->residual == R("-1/4"));
}

TEST_CASE("failed checks always carry a counterexample") {
  RankingRule efficient({Rational(1), 0, 0});
  VerificationReport report = check_satisfactory(efficient, coarse_grid());
  for (const auto& c : report.checks) {
    if (!c.passed && c.name != "implementability_equation" && c.name != "monotone_pi") {
      CHECK(c.counterexample.has_value());
      CHECK(c.residual.has_value());
    }
  }
}

TEST_CASE("loser-pays sweep passes under the narrow rule") {
  VerificationReport report = check_expost_ir(gl_rule(4), coarse_grid());
  CHECK(report.all_passed());
  const CheckResult* c = find_check(report, "expost_ir");
  REQUIRE(c);
  CHECK(c->passed);
}

TEST_CASE("loser-pays sweep passes for the nine-agent optimal rule") {
  GridSpec grid;
  grid.random_count = 15;
  grid.seed = 9;
  VerificationReport report = check_expost_ir(r_optimal_rule(9).pi_star, grid);
  CHECK(report.all_passed());
}

TEST_CASE("wide rules get a search report instead of a verdict") {
  // ell = 4 with five agents violates 2 * ell <= n + 1
  Int c = binomial(3, 3);
  TwoStepRule ts = two_step_rule(Rational(c + 1, c + 4), 4, 5);
  VerificationReport report = check_expost_ir(ts.to_ranking_rule(), coarse_grid());
  const CheckResult* search = find_check(report, "ir_counterexample_search");
  REQUIRE(search);
  CHECK(search->passed);  // exploratory only
  CHECK_FALSE(search->detail.empty());
}
