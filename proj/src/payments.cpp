#include "rankmech/payments.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace rankmech {

namespace {

void require_implementable(const RankingRule& rule) {
  if (!is_implementable(rule).implementable) {
    throw std::invalid_argument(
        "rule is not satisfactorily implementable; no balanced payment rule exists");
  }
}

bool strictly_decreasing_positive(const ValuationProfile& v) {
  if (!v.zero_agents().empty()) return false;
  for (const auto& group : v.groups()) {
    if (group.members.size() > 1) return false;
  }
  return true;
}

}  // namespace

std::vector<Rational> payments_subset_formula(const RankingRule& rule,
                                              const ValuationProfile& v) {
  require_implementable(rule);
  const std::size_t n = v.n();
  if (n > 20) {
    throw std::invalid_argument(
        "payments_subset_formula enumerates 2^n subsets; refusing n > 20");
  }
  const std::vector<std::size_t>& zero = v.zero_agents();
  const std::size_t z = zero.size();
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < n; ++i) {
    if (v.value(i) != 0) positive.push_back(i);
  }
  const std::size_t m = positive.size();

  // R^f(0_T, v_{-T}) for every T = zero set plus a subset of the
  // positive agents, keyed by the subset mask.
  std::vector<Rational> revenue_of(std::size_t(1) << m);
  std::vector<std::size_t> to_zero = zero;
  for (std::size_t mask = 0; mask < revenue_of.size(); ++mask) {
    to_zero.resize(z);
    for (std::size_t b = 0; b < m; ++b) {
      if (mask & (std::size_t(1) << b)) to_zero.push_back(positive[b]);
    }
    revenue_of[mask] = total_revenue(rule, v.zeroed(to_zero));
  }

  std::vector<Rational> p(n, Rational(0));

  if (z > 0) {
    Rational sum = 0;
    for (std::size_t mask = 0; mask < revenue_of.size(); ++mask) {
      const unsigned extra = static_cast<unsigned>(std::popcount(mask));
      Rational term = revenue_of[mask] /
                      Rational(binomial(static_cast<unsigned>(z + extra),
                                        static_cast<unsigned>(z)));
      sum += (extra % 2 == 0) ? term : -term;
    }
    Rational shared = -sum / Rational(Int(z));
    for (std::size_t agent : zero) p[agent] = shared;
  }

  RevenueView base = revenue_view(rule, v);
  for (std::size_t b = 0; b < m; ++b) {
    const std::size_t agent = positive[b];
    Rational sum = 0;
    for (std::size_t mask = 0; mask < revenue_of.size(); ++mask) {
      if (!(mask & (std::size_t(1) << b))) continue;
      const unsigned extra = static_cast<unsigned>(std::popcount(mask));
      Rational term = revenue_of[mask] /
                      Rational(binomial(static_cast<unsigned>(z + extra),
                                        static_cast<unsigned>(z + 1)));
      // sign is (-1)^{|T \ Z| - 1} = (-1)^{extra - 1}
      sum += (extra % 2 == 1) ? term : -term;
    }
    p[agent] = base.per_agent[agent] - sum / Rational(Int(z) + 1);
  }
  return p;
}

std::vector<Rational> payments_two_step(const TwoStepRule& rule,
                                        const ValuationProfile& v) {
  const std::size_t n = rule.n;
  const std::size_t ell = rule.ell;
  if (v.n() != n) throw std::invalid_argument("payments_two_step: dimension mismatch");
  if (ell % 2 != 0 ||
      rule.pi1 != Rational(binomial(static_cast<unsigned>(n - 2),
                                    static_cast<unsigned>(ell - 1)) + 1,
                           binomial(static_cast<unsigned>(n - 2),
                                    static_cast<unsigned>(ell - 1)) + Int(ell))) {
    throw std::invalid_argument("payments_two_step: rule is not implementable");
  }
  if (!strictly_decreasing_positive(v)) {
    throw std::invalid_argument(
        "payments_two_step needs strictly decreasing positive values; "
        "use payments_subset_formula for profiles with ties or zeros");
  }

  // values by rank, plus the rank -> agent map
  std::vector<std::size_t> agent_at_rank;
  std::vector<Rational> w;  // w[k-1] = k-th highest value
  for (const auto& group : v.groups()) {
    agent_at_rank.push_back(group.members.front());
    w.push_back(group.value);
  }

  const long nl = static_cast<long>(n);
  const long el = static_cast<long>(ell);
  const Rational factor = -rule.pi2 / Rational(psi(1, el - 1));  // -pi2/(ell-1)!
  auto signed_term = [&](long k, const Rational& value) {
    Rational t = Rational(psi(1, k - 1)) * Rational(psi(nl - el, nl - k - 1)) * value;
    return (k % 2 == 0) ? t : -t;
  };

  std::vector<Rational> p(n);
  for (std::size_t rank = 1; rank <= n; ++rank) {
    Rational bracket = 0;
    if (rank == 1) {
      for (long k = 1; k <= el - 1; ++k) bracket += signed_term(k, w[k]);
    } else if (rank <= ell) {
      for (long k = 2; k <= static_cast<long>(rank) - 1; ++k) {
        bracket += signed_term(k, w[k - 1]);
      }
      for (long k = static_cast<long>(rank); k <= el - 1; ++k) {
        bracket += signed_term(k, w[k]);
      }
    } else {
      for (long k = 2; k <= el - 1; ++k) bracket += signed_term(k, w[k - 1]);
      Rational last = Rational(psi(1, el - 1)) * w[ell - 1];
      bracket += (el % 2 == 0) ? last : -last;
    }
    p[agent_at_rank[rank - 1]] = factor * bracket;
  }
  return p;
}

std::vector<Rational> payments_recursive(const RankingRule& rule,
                                         const ValuationProfile& v) {
  require_implementable(rule);
  const std::size_t n = v.n();
  const std::vector<std::size_t>& zero = v.zero_agents();
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < n; ++i) {
    if (v.value(i) != 0) positive.push_back(i);
  }
  const std::size_t m = positive.size();
  if (m > 20) {
    throw std::invalid_argument(
        "payments_recursive unrolls 2^m marginal profiles; refusing m > 20");
  }

  // Unroll the recursion p_i(v) = p_i(0_i, v_{-i}) + R^f_i(v) bottom-up over
  // the zero patterns of the positive agents, from all-zero to none.
  std::vector<std::vector<Rational>> memo(std::size_t(1) << m);
  std::vector<std::size_t> to_zero;
  for (std::size_t mask = memo.size(); mask-- > 0;) {
    std::vector<Rational>& p = memo[mask];
    p.assign(n, Rational(0));
    if (mask + 1 == memo.size() && zero.empty()) continue;  // everyone reports zero

    to_zero = zero;
    for (std::size_t b = 0; b < m; ++b) {
      if (mask & (std::size_t(1) << b)) to_zero.push_back(positive[b]);
    }
    RevenueView view = revenue_view(rule, v.zeroed(to_zero));

    Rational positive_sum = 0;
    for (std::size_t b = 0; b < m; ++b) {
      if (mask & (std::size_t(1) << b)) continue;
      const std::size_t agent = positive[b];
      p[agent] = memo[mask | (std::size_t(1) << b)][agent] + view.per_agent[agent];
      positive_sum += p[agent];
    }
    const std::size_t sharers = zero.size() + std::popcount(mask);
    if (sharers > 0) {
      Rational shared = -positive_sum / Rational(Int(sharers));
      for (std::size_t agent : zero) p[agent] = shared;
      for (std::size_t b = 0; b < m; ++b) {
        if (mask & (std::size_t(1) << b)) p[positive[b]] = shared;
      }
    }
  }
  return memo[0];
}

Outcome run_mechanism(const RankingRule& rule, const ValuationProfile& v) {
  require_implementable(rule);
  Outcome outcome;
  outcome.allocation = allocate(rule, v);
  TwoStepRule two_step = as_two_step(rule);
  bool fast_path = two_step.ell != 0 && strictly_decreasing_positive(v) &&
                   two_step.ell % 2 == 0 &&
                   is_implementable(rule).implementable;
  if (fast_path) {
    outcome.payments = payments_two_step(two_step, v);
  } else {
    outcome.payments = payments_subset_formula(rule, v);
  }
  outcome.utilities.resize(v.n());
  for (std::size_t i = 0; i < v.n(); ++i) {
    outcome.utilities[i] = v.value(i) * outcome.allocation[i] - outcome.payments[i];
  }
  return outcome;
}

}  // namespace rankmech
