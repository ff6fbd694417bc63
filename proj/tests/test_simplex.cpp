#include "rankmech/simplex.hpp"

#include "doctest.h"
#include "rankmech/optimal.hpp"

using namespace rankmech;

TEST_CASE("one-variable box constraint") {
  LinearProgram lp;
  lp.objective = {Rational(1)};
  lp.ub_lhs = {{Rational(1)}};
  lp.ub_rhs = {Rational(1, 2)};
  LpResult res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.value == Rational(1, 2));
  CHECK(res.solution == std::vector<Rational>{Rational(1, 2)});
}

TEST_CASE("equality constraints are honored") {
  // max x + y with x + y = 1, x <= 1/4
  LinearProgram lp;
  lp.objective = {Rational(1), Rational(1)};
  lp.eq_lhs = {{Rational(1), Rational(1)}};
  lp.eq_rhs = {Rational(1)};
  lp.ub_lhs = {{Rational(1), Rational(0)}};
  lp.ub_rhs = {Rational(1, 4)};
  LpResult res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.value == 1);
  CHECK(res.solution[0] + res.solution[1] == 1);
  CHECK(res.solution[0] <= Rational(1, 4));
}

TEST_CASE("infeasibility is detected") {
  // x = 2 with x <= 1
  LinearProgram lp;
  lp.objective = {Rational(1)};
  lp.eq_lhs = {{Rational(1)}};
  lp.eq_rhs = {Rational(2)};
  lp.ub_lhs = {{Rational(1)}};
  lp.ub_rhs = {Rational(1)};
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unboundedness is detected") {
  LinearProgram lp;
  lp.objective = {Rational(1)};
  LpResult res = solve_lp(lp);
  CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("negative right-hand sides are handled") {
  // max -x with -x <= -3, i.e. x >= 3
  LinearProgram lp;
  lp.objective = {Rational(-1)};
  lp.ub_lhs = {{Rational(-1)}};
  lp.ub_rhs = {Rational(-3)};
  LpResult res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.value == -3);
  CHECK(res.solution[0] == 3);
}

TEST_CASE("rank LP optimum for six agents") {
  LpResult res = solve_lp(build_lp_rank(6, std::vector<Rational>(6, Rational(0))));
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.value == Rational(5, 6));
  CHECK(res.solution[0] == Rational(5, 6));
  CHECK(res.solution[1] == Rational(1, 6));
}

TEST_CASE("rank LP optimum at the degenerate eight-agent instance") {
  LpResult res = solve_lp(build_lp_rank(8, std::vector<Rational>(8, Rational(0))));
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.value == Rational(7, 8));
  // two distinct two-step vertices attain the optimum
  LinearProgram lp = build_lp_rank(8, std::vector<Rational>(8, Rational(0)));
  for (std::size_t ell : {2, 4}) {
    std::vector<Rational> pi =
        two_step_rule(Rational(7, 8), ell, 8).to_ranking_rule().pi();
    CHECK(pi[0] == res.value);
    for (std::size_t row = 0; row < lp.eq_lhs.size(); ++row) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < 8; ++j) lhs += lp.eq_lhs[row][j] * pi[j];
      CHECK(lhs == lp.eq_rhs[row]);
    }
    for (std::size_t row = 0; row < lp.ub_lhs.size(); ++row) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < 8; ++j) lhs += lp.ub_lhs[row][j] * pi[j];
      CHECK(lhs <= lp.ub_rhs[row]);
    }
  }
}

TEST_CASE("the narrow rule is feasible for the rank LP at every n") {
  for (std::size_t n = 3; n <= 12; ++n) {
    LinearProgram lp = build_lp_rank(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> pi = gl_rule(n).pi();
    for (std::size_t row = 0; row < lp.eq_lhs.size(); ++row) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += lp.eq_lhs[row][j] * pi[j];
      CHECK(lhs == lp.eq_rhs[row]);
    }
    for (std::size_t row = 0; row < lp.ub_lhs.size(); ++row) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += lp.ub_lhs[row][j] * pi[j];
      CHECK(lhs <= lp.ub_rhs[row]);
    }
  }
}
