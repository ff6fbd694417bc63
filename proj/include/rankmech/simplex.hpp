#pragma once

#include <optional>
#include <vector>

#include "rankmech/rational.hpp"

namespace rankmech {

/// Dense exact-rational linear program:
///   maximize objective . x
///   subject to eq_lhs x = eq_rhs, ub_lhs x <= ub_rhs, x >= 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> eq_lhs;
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> ub_lhs;
  std::vector<Rational> ub_rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> solution;
};

/// Two-phase primal simplex over exact rationals with Bland's pivot
/// rule (anti-cycling). Intended for the small dense instances this
/// engine produces, not as a general-purpose solver.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace rankmech
