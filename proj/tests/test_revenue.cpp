#include "rankmech/revenue.hpp"

#include <stdexcept>

#include "doctest.h"
#include "rankmech/harness.hpp"

using namespace rankmech;

namespace {

Rational R(const char* s) { return parse_rational(s); }

ValuationProfile profile(std::initializer_list<const char*> values) {
  std::vector<Rational> v;
  for (const char* s : values) v.push_back(R(s));
  return ValuationProfile(std::move(v));
}

// test oracle: Riemann-sum quadrature over the agent's own value, exact
// because the integrand is sampled at midpoints of a refinement that
// includes every breakpoint (the opponents' values)
Rational quadrature_integral(const RankingRule& rule, const ValuationProfile& v,
                             std::size_t agent) {
  std::vector<Rational> cuts{0, v.value(agent)};
  for (std::size_t j = 0; j < v.n(); ++j) {
    if (j != agent && v.value(j) < v.value(agent)) cuts.push_back(v.value(j));
  }
  std::sort(cuts.begin(), cuts.end());
  Rational sum = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Rational mid = (cuts[k] + cuts[k + 1]) / 2;
    ValuationProfile at = v.with_value(agent, mid);
    sum += allocate(rule, at)[agent] * (cuts[k + 1] - cuts[k]);
  }
  return sum;
}

}  // namespace

TEST_CASE("allocation integral on a generic profile") {
  ValuationProfile v = profile({"8", "4", "2", "1"});
  CHECK(allocation_integral(gl_rule(4), v, 0) == R("7/2"));
}

TEST_CASE("zero own value gives a zero-length integral") {
  ValuationProfile v = profile({"8", "4", "0", "1"});
  CHECK(allocation_integral(gl_rule(4), v, 2) == 0);
}

TEST_CASE("allocation integral under equal share") {
  ValuationProfile v = profile({"6", "5", "1"});
  CHECK(allocation_integral(equal_share_rule(3), v, 1) == R("5/3"));
}

TEST_CASE("allocation integral equals midpoint quadrature") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 3 + rng.below(4);
    std::vector<Rational> values(n);
    for (auto& x : values) x = Rational(Int(rng.below(9)), 1 + rng.below(4));
    ValuationProfile v{values};
    RankingRule r = trial % 2 == 0 ? gl_rule(n) : equal_share_rule(n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(allocation_integral(r, v, i) == quadrature_integral(r, v, i));
    }
  }
}

TEST_CASE("total revenue on the worked four-agent profile") {
  ValuationProfile v = profile({"8", "4", "2", "1"});
  RevenueView view = revenue_view(gl_rule(4), v);
  CHECK(view.total == 3);
  Rational sum = 0;
  for (const auto& r : view.per_agent) sum += r;
  CHECK(sum == view.total);
  CHECK(total_revenue(gl_rule(4), v) == 3);
}

TEST_CASE("per-agent revenue is nonnegative") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng.below(6);
    std::vector<Rational> values(n);
    for (auto& x : values) x = Rational(Int(rng.below(7)), 1 + rng.below(5));
    ValuationProfile v{values};
    RevenueView view = revenue_view(gl_rule(n), v);
    for (const auto& r : view.per_agent) CHECK(r >= 0);
  }
}

TEST_CASE("revenue vanishes with at most one positive value") {
  CHECK(total_revenue(gl_rule(3), profile({"0", "0", "0"})) == 0);
  CHECK(total_revenue(gl_rule(3), profile({"7", "0", "0"})) == 0);
}

TEST_CASE("closed form matches the integral form off ties") {
  ValuationProfile v = profile({"8", "4", "2", "1"});
  CHECK(revenue_closed_form_0generic(gl_rule(4), v) == 3);
  SplitMix64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng.below(9);
    std::vector<Rational> values(n);
    bool retry = false;
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = Rational(Int(rng.below(200)), 1 + rng.below(7));
      for (std::size_t j = 0; j < i; ++j) {
        if (values[j] == values[i] && values[i] != 0) retry = true;
      }
    }
    if (retry) continue;
    ValuationProfile v2{values};
    RankingRule r = trial % 2 == 0 ? gl_rule(n) : equal_share_rule(n);
    CHECK(revenue_closed_form_0generic(r, v2) == total_revenue(r, v2));
  }
}

TEST_CASE("closed form rejects profiles with positive ties") {
  CHECK_THROWS_AS(revenue_closed_form_0generic(gl_rule(3), profile({"2", "2", "1"})),
                  std::invalid_argument);
}

TEST_CASE("two-step revenue depends only on the second and ell+1-th values") {
  // for a two-step rule, R = (pi1 - pi2) v_(2) + ell pi2 v_(ell+1)
  TwoStepRule ts = two_step_rule(R("36/39"), 4, 9);
  ValuationProfile v = profile({"9", "8", "7", "6", "5", "4", "3", "2", "1"});
  Rational expected = (ts.pi1 - ts.pi2) * 8 + Rational(4) * ts.pi2 * 5;
  CHECK(total_revenue(ts.to_ranking_rule(), v) == expected);
}

TEST_CASE("the efficient rule prices like a second-price auction") {
  RankingRule efficient({Rational(1), 0, 0, 0});
  ValuationProfile v = profile({"8", "4", "2", "1"});
  RevenueView view = revenue_view(efficient, v);
  CHECK(view.per_agent[0] == 4);  // winner pays the runner-up value
  CHECK(view.per_agent[1] == 0);
  CHECK(view.per_agent[2] == 0);
  CHECK(view.per_agent[3] == 0);
}

TEST_CASE("revenue is continuous at tie profiles") {
  RankingRule r = gl_rule(4);
  ValuationProfile tied = profile({"3", "3", "2", "1"});
  Rational at_tie = total_revenue(r, tied);
  Rational max_v = 3;
  for (const char* d : {"1/10", "1/100", "1/1000"}) {
    Rational delta = R(d);
    ValuationProfile near = tied.with_value(1, Rational(3) - delta);
    Rational gap = total_revenue(r, near) - at_tie;
    if (gap < 0) gap = -gap;
    CHECK(gap <= delta * 4 * max_v);
  }
}
