#pragma once

#include <vector>

#include "rankmech/rules.hpp"

namespace rankmech {

/// Per-agent and total revenue of the elementary mechanism
/// R^f_i(v) = v_i f_i(v) - integral_0^{v_i} f_i(x_i, v_{-i}) dx_i.
struct RevenueView {
  std::vector<Rational> per_agent;
  Rational total;
};

/// integral_0^{v_i} f_i(x_i, v_{-i}) dx_i. The allocation is piecewise
/// constant in the agent's own value, so the integral is the finite sum
/// sum_{h >= j} pi_{L_h} (v_(h) - v_(h+1)) over tie groups, where j is
/// the agent's group and v beyond the last group is 0.
Rational allocation_integral(const RankingRule& rule, const ValuationProfile& v,
                             std::size_t agent);

/// R^f_i(v).
Rational elementary_payment(const RankingRule& rule, const ValuationProfile& v,
                            std::size_t agent);

RevenueView revenue_view(const RankingRule& rule, const ValuationProfile& v);

/// Total revenue of the elementary mechanism, computed without the
/// per-agent breakdown.
Rational total_revenue(const RankingRule& rule, const ValuationProfile& v);

/// Closed form for 0-generic profiles:
/// R^f(v) = sum_{j=1}^{n-1} j v_(j+1) (pi_j - pi_{j+1}).
/// Throws std::invalid_argument on profiles with positive ties.
Rational revenue_closed_form_0generic(const RankingRule& rule,
                                      const ValuationProfile& v);

}  // namespace rankmech
