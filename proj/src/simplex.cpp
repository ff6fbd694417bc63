#include "rankmech/simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace rankmech {

namespace {

struct Tableau {
  // rows[i] has num_cols entries followed by the rhs
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;
  std::size_t num_cols = 0;

  void pivot(std::size_t r, std::size_t j) {
    Rational inv = rows[r][j];
    for (auto& entry : rows[r]) entry /= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][j] == 0) continue;
      Rational factor = rows[i][j];
      for (std::size_t k = 0; k <= num_cols; ++k) {
        rows[i][k] -= factor * rows[r][k];
      }
    }
    basis[r] = j;
  }
};

// Maximizes c.x over the tableau with Bland's rule. `active` limits the
// columns allowed to enter. Returns false when unbounded.
bool run_simplex(Tableau& tab, const std::vector<Rational>& c, std::size_t active) {
  for (;;) {
    // reduced costs from scratch; instances are small
    std::size_t entering = active;
    for (std::size_t j = 0; j < active; ++j) {
      Rational reduced = c[j];
      for (std::size_t i = 0; i < tab.rows.size(); ++i) {
        if (c[tab.basis[i]] != 0) reduced -= c[tab.basis[i]] * tab.rows[i][j];
      }
      if (reduced > 0) {
        entering = j;
        break;  // Bland: smallest improving index
      }
    }
    if (entering == active) return true;

    std::size_t leaving = tab.rows.size();
    Rational best_ratio;
    for (std::size_t i = 0; i < tab.rows.size(); ++i) {
      if (tab.rows[i][entering] <= 0) continue;
      Rational ratio = tab.rows[i][tab.num_cols] / tab.rows[i][entering];
      if (leaving == tab.rows.size() || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[i] < tab.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == tab.rows.size()) return false;
    tab.pivot(leaving, entering);
  }
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t nv = lp.objective.size();
  const std::size_t n_eq = lp.eq_lhs.size();
  const std::size_t n_ub = lp.ub_lhs.size();
  const std::size_t m = n_eq + n_ub;
  const std::size_t n_real = nv + n_ub;        // structural + slack
  const std::size_t n_total = n_real + m;      // + artificials

  Tableau tab;
  tab.num_cols = n_total;
  tab.rows.assign(m, std::vector<Rational>(n_total + 1, Rational(0)));
  tab.basis.resize(m);

  for (std::size_t i = 0; i < m; ++i) {
    const std::vector<Rational>& src = i < n_eq ? lp.eq_lhs[i] : lp.ub_lhs[i - n_eq];
    if (src.size() != nv) throw std::invalid_argument("solve_lp: ragged constraint row");
    Rational rhs = i < n_eq ? lp.eq_rhs[i] : lp.ub_rhs[i - n_eq];
    bool flip = rhs < 0;
    for (std::size_t j = 0; j < nv; ++j) tab.rows[i][j] = flip ? -src[j] : src[j];
    if (i >= n_eq) tab.rows[i][nv + (i - n_eq)] = flip ? Rational(-1) : Rational(1);
    tab.rows[i][n_real + i] = 1;
    tab.rows[i][n_total] = flip ? -rhs : rhs;
    tab.basis[i] = n_real + i;
  }

  // Phase 1: drive the artificial variables to zero.
  std::vector<Rational> phase1(n_total, Rational(0));
  for (std::size_t j = n_real; j < n_total; ++j) phase1[j] = -1;
  run_simplex(tab, phase1, n_total);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] >= n_real) infeasibility += tab.rows[i][n_total];
  }
  if (infeasibility != 0) return LpResult{LpStatus::Infeasible, {}, {}};

  // Pivot leftover degenerate artificials out of the basis.
  for (std::size_t i = 0; i < tab.rows.size();) {
    if (tab.basis[i] < n_real) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < n_real && tab.rows[i][j] == 0) ++j;
    if (j < n_real) {
      tab.pivot(i, j);
      ++i;
    } else {
      tab.rows.erase(tab.rows.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 on the real objective; artificial columns are barred.
  std::vector<Rational> phase2(n_total, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) phase2[j] = lp.objective[j];
  if (!run_simplex(tab, phase2, n_real)) {
    return LpResult{LpStatus::Unbounded, {}, {}};
  }

  LpResult result;
  result.status = LpStatus::Optimal;
  result.solution.assign(nv, Rational(0));
  result.value = 0;
  for (std::size_t i = 0; i < tab.rows.size(); ++i) {
    if (tab.basis[i] < nv) result.solution[tab.basis[i]] = tab.rows[i][tab.num_cols];
  }
  for (std::size_t j = 0; j < nv; ++j) {
    result.value += lp.objective[j] * result.solution[j];
  }
  return result;
}

}  // namespace rankmech
