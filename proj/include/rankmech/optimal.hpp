#pragma once

#include <optional>
#include <vector>

#include "rankmech/rules.hpp"
#include "rankmech/simplex.hpp"

namespace rankmech {

/// The r-optimal two-step rule for n agents: which ell won the argmin,
/// whether it was unique (it is for every n except 8), and the rule.
struct OptimalRuleReport {
  std::size_t ell = 0;
  std::vector<std::size_t> ell_argmin_set;
  RankingRule pi_star;
  Rational pi1_star;
  bool unique = false;
};

struct EllSelection {
  std::size_t ell = 0;
  std::vector<std::size_t> argmin_set;
};

/// Brute-force exact minimization of (i-1)/(C(n-2,i-1)+i) over even i
/// in [2, n-1]. Returns the full argmin set; ell is its smallest member.
EllSelection select_ell(std::size_t n);

/// Closed form for n >= 9: the largest even integer <= (n+1)/2, minus 2
/// when n = 3 (mod 4). Cross-check only; select_ell is authoritative.
std::size_t closed_form_ell(std::size_t n);

/// Builds the r-optimal two-step rule. `ell_override` picks a specific
/// argmin member (only meaningful at n = 8, where both 2 and 4 win).
OptimalRuleReport r_optimal_rule(std::size_t n,
                                 std::optional<std::size_t> ell_override = std::nullopt);

/// Worst-case efficiency of a ranking mechanism equals pi_1.
Rational worst_case_efficiency(const RankingRule& rule);

/// Welfare ratio f_1(v) + (1/v_1) sum_{i != 1} v_i f_i(v) at one
/// profile, with 0/0 read as 1 (the all-zero profile).
Rational welfare_ratio(const RankingRule& rule, const ValuationProfile& v);

/// The primal LP: maximize pi_1 + eps . pi subject to monotonicity,
/// the implementability equality, sum pi = 1, pi >= 0.
LinearProgram build_lp_rank(std::size_t n, const std::vector<Rational>& epsilon);

/// Dual certificate for the primal at eps = 0. Constructed in closed
/// form; dual feasibility plus objective match with the primal optimum
/// is a strong-duality proof of r-optimality.
struct DualCertificate {
  Rational y;
  Rational z;
  std::vector<Rational> theta;  // theta_1..theta_{n-1}
  bool feasible = false;        // all dual constraints verified exactly
};

DualCertificate dual_certificate(std::size_t n,
                                 std::optional<std::size_t> ell_override = std::nullopt);

struct DominationResult {
  bool dominated = false;
  std::optional<RankingRule> witness;
};

/// FOSD reduction of r-Pareto optimality: one LP maximizing the sum of
/// prefix sums over implementable rules with unit mass whose prefixes
/// weakly dominate the given rule.
DominationResult is_dominated_fosd(const RankingRule& rule);

/// Top-probability bounds every undominated rule must satisfy:
/// 1 - 1/n <= pi_1 <= pi_1*.
bool r_pareto_bounds_check(const RankingRule& rule);

}  // namespace rankmech
