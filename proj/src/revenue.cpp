#include "rankmech/revenue.hpp"

#include <stdexcept>

namespace rankmech {

Rational allocation_integral(const RankingRule& rule, const ValuationProfile& v,
                             std::size_t agent) {
  if (rule.n() != v.n()) throw std::invalid_argument("allocation_integral: dimension mismatch");
  const auto& groups = v.groups();
  const std::size_t j = v.group_of(agent);
  Rational integral = 0;
  std::size_t cumulative = v.cumulative_count(j);
  for (std::size_t h = j; h <= groups.size(); ++h) {
    Rational next = h < groups.size() ? groups[h].value : Rational(0);
    integral += rule.pi(cumulative) * (groups[h - 1].value - next);
    if (h < groups.size()) cumulative += groups[h].members.size();
  }
  return integral;
}

Rational elementary_payment(const RankingRule& rule, const ValuationProfile& v,
                            std::size_t agent) {
  std::vector<Rational> f = allocate(rule, v);
  return v.value(agent) * f[agent] - allocation_integral(rule, v, agent);
}

RevenueView revenue_view(const RankingRule& rule, const ValuationProfile& v) {
  std::vector<Rational> f = allocate(rule, v);
  RevenueView view;
  view.per_agent.resize(v.n());
  view.total = 0;
  for (std::size_t i = 0; i < v.n(); ++i) {
    view.per_agent[i] = v.value(i) * f[i] - allocation_integral(rule, v, i);
    view.total += view.per_agent[i];
  }
  return view;
}

Rational total_revenue(const RankingRule& rule, const ValuationProfile& v) {
  // sum_i v_i f_i - sum_h L_h pi_{L_h} (v_(h) - v_(h+1)), grouping the
  // per-agent integrals by tie group.
  const auto& groups = v.groups();
  Rational welfare = 0;
  Rational integrals = 0;
  std::size_t cumulative = 0;
  for (std::size_t h = 1; h <= groups.size(); ++h) {
    const auto& group = groups[h - 1];
    Rational block = 0;
    for (std::size_t r = cumulative + 1; r <= cumulative + group.members.size(); ++r) {
      block += rule.pi(r);
    }
    welfare += group.value * block;
    cumulative += group.members.size();
    Rational next = h < groups.size() ? groups[h].value : Rational(0);
    integrals += Rational(Int(cumulative)) * rule.pi(cumulative) * (group.value - next);
  }
  return welfare - integrals;
}

Rational revenue_closed_form_0generic(const RankingRule& rule,
                                      const ValuationProfile& v) {
  if (rule.n() != v.n()) throw std::invalid_argument("revenue closed form: dimension mismatch");
  if (!v.is_zero_generic()) {
    throw std::invalid_argument("revenue closed form requires a 0-generic profile");
  }
  const std::size_t n = v.n();
  Rational total = 0;
  for (std::size_t j = 1; j <= n - 1; ++j) {
    total += Rational(Int(j)) * v.group_value(j + 1) * (rule.pi(j) - rule.pi(j + 1));
  }
  return total;
}

}  // namespace rankmech
