#include "rankmech/harness.hpp"

#include <stdexcept>

#include "rankmech/optimal.hpp"

namespace rankmech {

std::vector<ConvergenceRow> convergence_table(std::size_t n_from, std::size_t n_to) {
  if (n_from < 3 || n_from > n_to) {
    throw std::invalid_argument("convergence_table: need 3 <= from <= to");
  }
  std::vector<ConvergenceRow> rows;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    ConvergenceRow row;
    row.n = n;
    row.ell = select_ell(n).ell;
    row.top_binomial = binomial(static_cast<unsigned>(n - 2),
                                static_cast<unsigned>(row.ell - 1));
    row.pi1 = Rational(row.top_binomial + 1, row.top_binomial + Int(row.ell));
    row.pi1_percent = render_decimal(row.pi1 * 100, 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t gl_convergence_threshold(const Rational& target) {
  if (!(target > 0 && target < 1)) {
    throw std::invalid_argument("gl_convergence_threshold: target must be in (0,1)");
  }
  // 1 - 1/n >= target  <=>  n >= 1/(1 - target)
  Rational bound = 1 / (1 - target);
  Int n = numerator(bound) / denominator(bound);
  if (Rational(n) < bound) n += 1;
  if (n < 2) n = 2;
  return static_cast<std::size_t>(n);
}

std::vector<ValuationProfile> random_profiles(std::size_t n, std::size_t count,
                                              std::uint64_t seed,
                                              std::uint64_t denominator_bound) {
  if (count < 1 || denominator_bound < 1) {
    throw std::invalid_argument("random_profiles: count and denominator bound must be >= 1");
  }
  SplitMix64 rng(seed);
  std::vector<ValuationProfile> profiles;
  profiles.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Rational> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t den = 1 + rng.below(denominator_bound);
      std::uint64_t num = rng.below(den + 1);
      values.emplace_back(Int(num), Int(den));
    }
    profiles.emplace_back(std::move(values));
  }
  return profiles;
}

std::optional<std::size_t> sample_lottery(const std::vector<Rational>& allocation,
                                          std::uint64_t seed) {
  SplitMix64 rng(seed);
  // u uniform on [0,1) with 64 bits of resolution, compared exactly
  Rational u(Int(rng.next()), Int(1) << 64);
  Rational cumulative = 0;
  for (std::size_t i = 0; i < allocation.size(); ++i) {
    cumulative += allocation[i];
    if (u < cumulative) return i;
  }
  return std::nullopt;
}

}  // namespace rankmech
