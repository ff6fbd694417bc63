#pragma once

#include <vector>

#include "rankmech/revenue.hpp"
#include "rankmech/rules.hpp"

namespace rankmech {

/// Full mechanism result at one profile. Payments sum to exactly zero
/// and agents with equal values get equal allocation and payment.
struct Outcome {
  std::vector<Rational> allocation;
  std::vector<Rational> payments;
  std::vector<Rational> utilities;  // U_i = v_i f_i - p_i
};

/// The unique satisfactory payment rule, as the alternating subset sum
/// over R^f(0_T, v_{-T}). Exponential in n; refuses n > 20.
/// Throws std::invalid_argument for rules failing the implementability
/// equation (no satisfactory payment exists for those).
std::vector<Rational> payments_subset_formula(const RankingRule& rule,
                                              const ValuationProfile& v);

/// Closed-form payments for a two-step rule at profiles with strictly
/// decreasing positive values. Profiles with ties or zeros are rejected;
/// route those through payments_subset_formula.
std::vector<Rational> payments_two_step(const TwoStepRule& rule,
                                        const ValuationProfile& v);

/// Independent oracle: recursion on the zero set via revenue equivalence
/// p_i(v) = p_i(0, v_{-i}) + R^f_i(v), with symmetry splitting the
/// budget across zero-valued agents at each step.
std::vector<Rational> payments_recursive(const RankingRule& rule,
                                         const ValuationProfile& v);

/// Allocation, payments and utilities at one profile. Uses the two-step
/// closed form when it applies, the subset formula otherwise.
Outcome run_mechanism(const RankingRule& rule, const ValuationProfile& v);

}  // namespace rankmech
