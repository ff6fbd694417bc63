#include "rankmech/optimal.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankmech {

namespace {

Rational ell_objective(std::size_t n, std::size_t i) {
  return Rational(Int(i) - 1,
                  binomial(static_cast<unsigned>(n - 2), static_cast<unsigned>(i - 1)) +
                      Int(i));
}

Rational pi1_for_ell(std::size_t n, std::size_t ell) {
  Int c = binomial(static_cast<unsigned>(n - 2), static_cast<unsigned>(ell - 1));
  return Rational(c + 1, c + Int(ell));
}

}  // namespace

EllSelection select_ell(std::size_t n) {
  if (n < 3) throw std::invalid_argument("select_ell: n >= 3 required");
  EllSelection selection;
  Rational best;
  for (std::size_t i = 2; i <= n - 1; i += 2) {
    Rational value = ell_objective(n, i);
    if (selection.argmin_set.empty() || value < best) {
      best = value;
      selection.argmin_set = {i};
    } else if (value == best) {
      selection.argmin_set.push_back(i);
    }
  }
  selection.ell = selection.argmin_set.front();
  return selection;
}

std::size_t closed_form_ell(std::size_t n) {
  if (n < 9) throw std::invalid_argument("closed_form_ell: n >= 9 required");
  // largest even integer <= (n+1)/2, stepped down by 2 when n = 3 (mod 4):
  // there the even candidate at the binomial peak loses the ratio
  // (i-1)/(C(n-2,i-1)+i) to the next smaller even i, e.g. 3/88 < 5/132
  // at n = 11. select_ell's brute force is authoritative; this formula
  // tracks it for every n >= 9.
  std::size_t half = (n + 1) / 2;
  std::size_t ell = half % 2 == 0 ? half : half - 1;
  if (n % 4 == 3) ell -= 2;
  return ell;
}

OptimalRuleReport r_optimal_rule(std::size_t n, std::optional<std::size_t> ell_override) {
  EllSelection selection = select_ell(n);
  std::size_t ell = selection.ell;
  if (ell_override) {
    if (std::find(selection.argmin_set.begin(), selection.argmin_set.end(),
                  *ell_override) == selection.argmin_set.end()) {
      throw std::invalid_argument("ell override is not in the argmin set");
    }
    ell = *ell_override;
  }
  Rational pi1 = pi1_for_ell(n, ell);
  TwoStepRule two_step = two_step_rule(pi1, ell, n);
  return OptimalRuleReport{ell, selection.argmin_set, two_step.to_ranking_rule(), pi1,
                           selection.argmin_set.size() == 1};
}

Rational worst_case_efficiency(const RankingRule& rule) {
  return rule.pi(1);
}

Rational welfare_ratio(const RankingRule& rule, const ValuationProfile& v) {
  Rational top = v.group_value(1);
  if (top == 0) return 1;  // 0/0 convention
  std::vector<Rational> f = allocate(rule, v);
  Rational welfare = 0;
  for (std::size_t i = 0; i < v.n(); ++i) welfare += v.value(i) * f[i];
  return welfare / top;
}

LinearProgram build_lp_rank(std::size_t n, const std::vector<Rational>& epsilon) {
  if (epsilon.size() != n) throw std::invalid_argument("build_lp_rank: epsilon length != n");
  LinearProgram lp;
  lp.objective = epsilon;
  lp.objective[0] += 1;

  std::vector<Rational> implementability(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Rational c(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(i - 1)));
    implementability[i - 1] = (i % 2 == 0) ? c : -c;
  }
  lp.eq_lhs.push_back(std::move(implementability));
  lp.eq_rhs.push_back(0);
  lp.eq_lhs.push_back(std::vector<Rational>(n, Rational(1)));
  lp.eq_rhs.push_back(1);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<Rational> row(n, Rational(0));
    row[i] = -1;
    row[i + 1] = 1;
    lp.ub_lhs.push_back(std::move(row));
    lp.ub_rhs.push_back(0);
  }
  return lp;
}

DualCertificate dual_certificate(std::size_t n, std::optional<std::size_t> ell_override) {
  if (n < 3) throw std::invalid_argument("dual_certificate: n >= 3 required");
  EllSelection selection = select_ell(n);
  std::size_t ell = selection.ell;
  if (ell_override) {
    if (std::find(selection.argmin_set.begin(), selection.argmin_set.end(),
                  *ell_override) == selection.argmin_set.end()) {
      throw std::invalid_argument("ell override is not in the argmin set");
    }
    ell = *ell_override;
  }

  DualCertificate cert;
  cert.z = pi1_for_ell(n, ell);
  cert.y = cert.z - 1;
  cert.theta.assign(n - 1, Rational(0));
  for (std::size_t i = 2; i <= n - 1; ++i) {
    Int c = binomial(static_cast<unsigned>(n - 2), static_cast<unsigned>(i - 1));
    Rational h = (i % 2 == 1) ? Rational(c) : Rational(-c);
    cert.theta[i - 1] = (h - 1) - cert.z * (h - Rational(Int(i)));
  }

  // verify every dual constraint exactly
  bool ok = -cert.theta[0] - cert.y + cert.z >= 1;
  for (std::size_t i = 2; i <= n - 1 && ok; ++i) {
    Rational c(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(i - 1)));
    Rational signed_c = (i % 2 == 0) ? c : -c;
    ok = cert.theta[i - 2] - cert.theta[i - 1] + signed_c * cert.y + cert.z >= 0;
  }
  if (ok) {
    Rational last = (n % 2 == 0) ? cert.y : -cert.y;
    ok = cert.theta[n - 2] + last + cert.z >= 0;
  }
  for (std::size_t i = 0; i < cert.theta.size() && ok; ++i) ok = cert.theta[i] >= 0;
  cert.feasible = ok;
  return cert;
}

DominationResult is_dominated_fosd(const RankingRule& rule) {
  if (!is_implementable(rule).implementable) {
    throw std::invalid_argument("is_dominated_fosd: rule must be implementable");
  }
  if (rule.total_mass() != 1) {
    throw std::invalid_argument("is_dominated_fosd: rule must have unit mass");
  }
  const std::size_t n = rule.n();

  LinearProgram lp = build_lp_rank(n, std::vector<Rational>(n, Rational(0)));
  // objective: sum of all prefix sums = sum_i (n - i + 1) pi_i
  for (std::size_t i = 0; i < n; ++i) lp.objective[i] = Rational(Int(n - i));
  // prefix_j(pi') >= prefix_j(rule)
  Rational rule_prefix = 0;
  Rational base = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    rule_prefix += rule.pi(j);
    base += rule_prefix;
    std::vector<Rational> row(n, Rational(0));
    for (std::size_t i = 0; i < j; ++i) row[i] = -1;
    lp.ub_lhs.push_back(std::move(row));
    lp.ub_rhs.push_back(-rule_prefix);
  }

  LpResult lpr = solve_lp(lp);
  if (lpr.status != LpStatus::Optimal) {
    throw std::runtime_error("is_dominated_fosd: domination LP did not solve");
  }
  DominationResult result;
  result.dominated = lpr.value > base;
  if (result.dominated) result.witness = RankingRule(lpr.solution);
  return result;
}

bool r_pareto_bounds_check(const RankingRule& rule) {
  const std::size_t n = rule.n();
  Rational lower = Rational(Int(n) - 1, Int(n));
  Rational upper = r_optimal_rule(n).pi1_star;
  return rule.pi(1) >= lower && rule.pi(1) <= upper;
}

}  // namespace rankmech
