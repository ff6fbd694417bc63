#include "rankmech/rules.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rankmech {

ValuationProfile::ValuationProfile(std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("profile needs at least two agents");
  }
  for (const auto& v : values_) {
    if (v < 0) throw std::invalid_argument("negative valuation");
  }
  // group agents by value, descending
  std::map<Rational, std::vector<std::size_t>, std::greater<>> by_value;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    by_value[values_[i]].push_back(i);
  }
  group_of_.resize(values_.size());
  for (auto& [value, members] : by_value) {
    groups_.push_back(TieGroup{value, members});
    for (std::size_t agent : members) group_of_[agent] = groups_.size();
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 0) zero_agents_.push_back(i);
  }
}

std::size_t ValuationProfile::cumulative_count(std::size_t j) const {
  std::size_t count = 0;
  for (std::size_t g = 0; g < j && g < groups_.size(); ++g) {
    count += groups_[g].members.size();
  }
  return count;
}

Rational ValuationProfile::group_value(std::size_t j) const {
  if (j == 0 || j > groups_.size()) return 0;
  return groups_[j - 1].value;
}

bool ValuationProfile::is_zero_generic() const {
  for (const auto& group : groups_) {
    if (group.value != 0 && group.members.size() > 1) return false;
  }
  return true;
}

ValuationProfile ValuationProfile::zeroed(const std::vector<std::size_t>& agents) const {
  std::vector<Rational> values = values_;
  for (std::size_t agent : agents) values[agent] = 0;
  return ValuationProfile(std::move(values));
}

ValuationProfile ValuationProfile::with_value(std::size_t agent, Rational value) const {
  std::vector<Rational> values = values_;
  values[agent] = std::move(value);
  return ValuationProfile(std::move(values));
}

RankingRule::RankingRule(std::vector<Rational> pi) : pi_(std::move(pi)) {
  if (pi_.size() < 2) throw std::invalid_argument("rule needs at least two ranks");
  Rational sum = 0;
  for (std::size_t i = 0; i < pi_.size(); ++i) {
    if (pi_[i] < 0 || pi_[i] > 1) throw std::invalid_argument("pi_i outside [0,1]");
    if (i > 0 && pi_[i] > pi_[i - 1]) {
      throw std::invalid_argument("pi must be nonincreasing");
    }
    sum += pi_[i];
  }
  if (sum > 1) throw std::invalid_argument("pi sums to more than 1");
}

Rational RankingRule::total_mass() const {
  Rational sum = 0;
  for (const auto& p : pi_) sum += p;
  return sum;
}

RankingRule TwoStepRule::to_ranking_rule() const {
  std::vector<Rational> pi(n, Rational(0));
  pi[0] = pi1;
  for (std::size_t i = 1; i < ell; ++i) pi[i] = pi2;
  return RankingRule(std::move(pi));
}

RankingRule gl_rule(std::size_t n) {
  if (n < 2) throw std::invalid_argument("gl_rule: n >= 2 required");
  std::vector<Rational> pi(n, Rational(0));
  pi[0] = Rational(Int(n) - 1, Int(n));
  pi[1] = Rational(1, Int(n));
  return RankingRule(std::move(pi));
}

RankingRule equal_share_rule(std::size_t n) {
  if (n < 2) throw std::invalid_argument("equal_share_rule: n >= 2 required");
  std::vector<Rational> pi(n, Rational(1, Int(n)));
  return RankingRule(std::move(pi));
}

TwoStepRule two_step_rule(const Rational& pi1, std::size_t ell, std::size_t n) {
  if (n < 3 || ell < 2 || ell > n - 1) {
    throw std::invalid_argument("two_step_rule: need n >= 3 and 2 <= ell <= n-1");
  }
  Rational pi2 = (1 - pi1) / Rational(Int(ell) - 1);
  if (!(pi1 > pi2 && pi2 > 0)) {
    throw std::invalid_argument("two_step_rule: need pi1 > pi2 > 0");
  }
  return TwoStepRule{pi1, ell, pi2, n};
}

TwoStepRule as_two_step(const RankingRule& rule) {
  const auto& pi = rule.pi();
  std::size_t ell = 0;
  while (ell < pi.size() && pi[ell] > 0) ++ell;
  for (std::size_t i = ell; i < pi.size(); ++i) {
    if (pi[i] != 0) return TwoStepRule{};
  }
  if (ell < 2 || ell > pi.size() - 1) return TwoStepRule{};
  for (std::size_t i = 2; i < ell; ++i) {
    if (pi[i] != pi[1]) return TwoStepRule{};
  }
  if (!(pi[0] > pi[1])) return TwoStepRule{};
  Rational mass = rule.total_mass();
  if (mass != 1) return TwoStepRule{};
  return TwoStepRule{pi[0], ell, pi[1], pi.size()};
}

std::vector<Rational> allocate(const RankingRule& rule, const ValuationProfile& v) {
  if (rule.n() != v.n()) throw std::invalid_argument("allocate: dimension mismatch");
  std::vector<Rational> f(v.n());
  std::size_t rank = 0;  // agents placed so far
  for (const auto& group : v.groups()) {
    Rational block = 0;
    for (std::size_t r = rank + 1; r <= rank + group.members.size(); ++r) {
      block += rule.pi(r);
    }
    Rational share = block / Rational(Int(group.members.size()));
    for (std::size_t agent : group.members) f[agent] = share;
    rank += group.members.size();
  }
  return f;
}

ImplementabilityResult is_implementable(const RankingRule& rule) {
  const std::size_t n = rule.n();
  Rational residual = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational term = Rational(binomial(static_cast<unsigned>(n - 1),
                                      static_cast<unsigned>(k - 1))) *
                    rule.pi(k);
    residual += (k % 2 == 0) ? term : -term;
  }
  return ImplementabilityResult{residual == 0, residual};
}

bool fosd_dominates(const RankingRule& a, const RankingRule& b) {
  if (a.n() != b.n()) throw std::invalid_argument("fosd: dimension mismatch");
  Rational prefix_a = 0, prefix_b = 0;
  bool strict = false;
  for (std::size_t k = 1; k <= a.n(); ++k) {
    prefix_a += a.pi(k);
    prefix_b += b.pi(k);
    if (prefix_a < prefix_b) return false;
    if (prefix_a > prefix_b) strict = true;
  }
  return strict;
}

bool is_monotone_ranking(const std::vector<Rational>& pi) {
  for (std::size_t i = 1; i < pi.size(); ++i) {
    if (pi[i] > pi[i - 1]) return false;
  }
  return true;
}

}  // namespace rankmech
