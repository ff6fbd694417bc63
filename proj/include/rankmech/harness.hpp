#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankmech/payments.hpp"
#include "rankmech/rules.hpp"

namespace rankmech {

/// SplitMix64: the counter-based generator used for every seeded sweep
/// in the engine. Documented so experiment output is reproducible from
/// the seed alone.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

/// One row of the convergence table: pi1 = (C(n-2,ell-1)+1)/(C(n-2,ell-1)+ell).
struct ConvergenceRow {
  std::size_t n = 0;
  std::size_t ell = 0;
  Int top_binomial;          // C(n-2, ell-1)
  Rational pi1;
  std::string pi1_percent;   // one decimal place, round half up
};

std::vector<ConvergenceRow> convergence_table(std::size_t n_from, std::size_t n_to);

/// Smallest n with 1 - 1/n >= target, for 0 < target < 1.
std::size_t gl_convergence_threshold(const Rational& target);

/// `count` seeded profiles with values in [0,1]: denominator uniform in
/// [1, denominator_bound], numerator uniform in [0, denominator].
std::vector<ValuationProfile> random_profiles(std::size_t n, std::size_t count,
                                              std::uint64_t seed,
                                              std::uint64_t denominator_bound);

/// Draws a winner from the allocation lottery; the unallocated mass
/// 1 - sum f_i maps to "none". Demonstration-only; the exact
/// probabilities are the engine's contract.
std::optional<std::size_t> sample_lottery(const std::vector<Rational>& allocation,
                                          std::uint64_t seed);

}  // namespace rankmech
