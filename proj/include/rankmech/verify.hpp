#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankmech/payments.hpp"
#include "rankmech/rules.hpp"

namespace rankmech {

/// One verified property. A failed check always carries the offending
/// profile and the exact violated quantity.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::optional<std::vector<Rational>> counterexample;
  std::optional<Rational> residual;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::string grid_spec;

  bool all_passed() const;
};

/// Profile set for sweeps: either the full grid values^n or `count`
/// seeded random profiles with denominators bounded by `denominator_bound`.
struct GridSpec {
  std::vector<Rational> values;  // exhaustive grid when non-empty
  std::size_t random_count = 0;
  std::uint64_t seed = 0;
  std::uint64_t denominator_bound = 64;

  std::string describe() const;
};

std::vector<ValuationProfile> make_profiles(std::size_t n, const GridSpec& grid);

/// The alternating subset sum sum_{T subseteq N} (-1)^{|T|} R^f(0_T, v_{-T}).
/// Zero iff the rule is residually balanced at v. Defined only for
/// zero-free profiles; n <= 20.
Rational check_residual_balance(const RankingRule& rule, const ValuationProfile& v);

/// Full satisfactory-property sweep: monotonicity of pi, residual
/// balance at zero-free profiles, exact budget balance, payment
/// symmetry at ties, the DSIC deviation sweep, revenue equivalence, and
/// the zero-report utility identity.
VerificationReport check_satisfactory(const RankingRule& rule, const GridSpec& grid);

/// Ex-post IR sweep: p_i(0, v_{-i}) <= 0 at every grid profile. For
/// two-step rules the report also states whether 2*ell <= n+1 holds;
/// beyond that bound the sweep is a counterexample search and the
/// outcome is reported without a verdict.
VerificationReport check_expost_ir(const RankingRule& rule, const GridSpec& grid);

}  // namespace rankmech
