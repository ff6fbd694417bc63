#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rankmech/rational.hpp"

namespace rankmech {

/// One tie group of a valuation profile: the common value and the
/// (0-based) indices of the agents holding it. Groups are ordered by
/// strictly decreasing value.
struct TieGroup {
  Rational value;
  std::vector<std::size_t> members;
};

/// A profile of nonnegative valuations for n >= 2 agents. The rank
/// structure (tie groups, cumulative counts, zero set) is derived at
/// construction and cached; the object is immutable afterwards.
class ValuationProfile {
 public:
  explicit ValuationProfile(std::vector<Rational> values);

  std::size_t n() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(std::size_t agent) const { return values_[agent]; }

  const std::vector<TieGroup>& groups() const { return groups_; }

  /// L_j = number of agents in groups 1..j (1-based j; L_0 = 0).
  std::size_t cumulative_count(std::size_t group_index_1based) const;

  /// Group value by group index (1-based); 0 for indices past the last
  /// group (empty groups).
  Rational group_value(std::size_t group_index_1based) const;

  /// 1-based index of the tie group containing the agent.
  std::size_t group_of(std::size_t agent) const { return group_of_[agent]; }

  /// Agents with zero valuation.
  const std::vector<std::size_t>& zero_agents() const { return zero_agents_; }

  /// All positive values distinct (ties only at zero).
  bool is_zero_generic() const;

  /// Copy with the given agents' values replaced by zero.
  ValuationProfile zeroed(const std::vector<std::size_t>& agents) const;

  /// Copy with one agent's value replaced.
  ValuationProfile with_value(std::size_t agent, Rational value) const;

 private:
  std::vector<Rational> values_;
  std::vector<TieGroup> groups_;
  std::vector<std::size_t> group_of_;
  std::vector<std::size_t> zero_agents_;
};

/// A ranking allocation rule: probabilities by rank, nonincreasing,
/// each in [0,1], summing to at most 1. Ties share their groups'
/// combined probability equally.
class RankingRule {
 public:
  explicit RankingRule(std::vector<Rational> pi);

  std::size_t n() const { return pi_.size(); }
  const std::vector<Rational>& pi() const { return pi_; }
  const Rational& pi(std::size_t rank_1based) const { return pi_[rank_1based - 1]; }
  Rational total_mass() const;

 private:
  std::vector<Rational> pi_;
};

/// Two-step rule (pi1, ell): top rank gets pi1, ranks 2..ell each get
/// pi2 = (1 - pi1)/(ell - 1), the rest get 0; pi1 > pi2 > 0.
struct TwoStepRule {
  Rational pi1;
  std::size_t ell = 0;
  Rational pi2;
  std::size_t n = 0;

  RankingRule to_ranking_rule() const;
};

RankingRule gl_rule(std::size_t n);
RankingRule equal_share_rule(std::size_t n);
TwoStepRule two_step_rule(const Rational& pi1, std::size_t ell, std::size_t n);

/// Detects the two-step shape (pi1 > pi2 = ... = pi_ell > 0 = ...) in a
/// ranking rule; returns ell = 0 in the result when the shape does not
/// match.
TwoStepRule as_two_step(const RankingRule& rule);

/// Per-agent allocation probabilities f_i(v): agents in tie group j
/// share pi_{L_{j-1}+1} + ... + pi_{L_j} equally.
std::vector<Rational> allocate(const RankingRule& rule, const ValuationProfile& v);

struct ImplementabilityResult {
  bool implementable = false;
  Rational residual;  // sum_k (-1)^k C(n-1,k-1) pi_k
};

/// Single-equation implementability test for ranking rules.
ImplementabilityResult is_implementable(const RankingRule& rule);

/// Every prefix sum of `a` weakly exceeds that of `b`, strictly somewhere.
bool fosd_dominates(const RankingRule& a, const RankingRule& b);

/// Nonincreasing check on a raw probability vector.
bool is_monotone_ranking(const std::vector<Rational>& pi);

}  // namespace rankmech
