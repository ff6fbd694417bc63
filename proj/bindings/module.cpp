// Python bindings. Rationals cross the boundary as canonical strings so
// exactness survives the trip; callers can hand them to fractions.Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rankmech/harness.hpp"
#include "rankmech/optimal.hpp"
#include "rankmech/payments.hpp"
#include "rankmech/verify.hpp"

namespace py = pybind11;
using namespace rankmech;

namespace {

std::vector<Rational> parse_all(const std::vector<std::string>& strings) {
  std::vector<Rational> out;
  out.reserve(strings.size());
  for (const auto& s : strings) out.push_back(parse_rational(s));
  return out;
}

std::vector<std::string> render_all(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(render_rational(v));
  return out;
}

RankingRule rule_from(const std::vector<std::string>& pi) {
  return RankingRule(parse_all(pi));
}

ValuationProfile profile_from(const std::vector<std::string>& values) {
  return ValuationProfile(parse_all(values));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact engine for budget-balanced truthful single-object mechanisms";

  m.def("gl_rule", [](std::size_t n) { return render_all(gl_rule(n).pi()); },
        py::arg("n"));
  m.def("equal_share_rule",
        [](std::size_t n) { return render_all(equal_share_rule(n).pi()); },
        py::arg("n"));
  m.def(
      "two_step_rule",
      [](const std::string& pi1, std::size_t ell, std::size_t n) {
        return render_all(two_step_rule(parse_rational(pi1), ell, n)
                              .to_ranking_rule()
                              .pi());
      },
      py::arg("pi1"), py::arg("ell"), py::arg("n"));

  m.def(
      "allocate",
      [](const std::vector<std::string>& pi, const std::vector<std::string>& values) {
        return render_all(allocate(rule_from(pi), profile_from(values)));
      },
      py::arg("pi"), py::arg("values"));

  m.def(
      "is_implementable",
      [](const std::vector<std::string>& pi) {
        ImplementabilityResult res = is_implementable(rule_from(pi));
        return py::make_tuple(res.implementable, render_rational(res.residual));
      },
      py::arg("pi"), "returns (implementable, residual)");

  m.def(
      "run_mechanism",
      [](const std::vector<std::string>& pi, const std::vector<std::string>& values) {
        Outcome out = run_mechanism(rule_from(pi), profile_from(values));
        py::dict d;
        d["allocation"] = render_all(out.allocation);
        d["payments"] = render_all(out.payments);
        d["utilities"] = render_all(out.utilities);
        return d;
      },
      py::arg("pi"), py::arg("values"));

  m.def(
      "payments",
      [](const std::vector<std::string>& pi, const std::vector<std::string>& values,
         const std::string& method) {
        RankingRule rule = rule_from(pi);
        ValuationProfile v = profile_from(values);
        if (method == "subset") return render_all(payments_subset_formula(rule, v));
        if (method == "recursive") return render_all(payments_recursive(rule, v));
        if (method == "two-step") {
          TwoStepRule ts = as_two_step(rule);
          if (ts.ell == 0) throw std::invalid_argument("rule is not two-step");
          return render_all(payments_two_step(ts, v));
        }
        throw std::invalid_argument("unknown method '" + method + "'");
      },
      py::arg("pi"), py::arg("values"), py::arg("method") = "subset");

  m.def(
      "total_revenue",
      [](const std::vector<std::string>& pi, const std::vector<std::string>& values) {
        return render_rational(total_revenue(rule_from(pi), profile_from(values)));
      },
      py::arg("pi"), py::arg("values"));

  m.def(
      "r_optimal_rule",
      [](std::size_t n, std::optional<std::size_t> ell_override) {
        OptimalRuleReport report = r_optimal_rule(n, ell_override);
        py::dict d;
        d["ell"] = report.ell;
        d["ell_argmin_set"] = report.ell_argmin_set;
        d["pi"] = render_all(report.pi_star.pi());
        d["pi1"] = render_rational(report.pi1_star);
        d["unique"] = report.unique;
        return d;
      },
      py::arg("n"), py::arg("ell_override") = std::nullopt);

  m.def("select_ell",
        [](std::size_t n) {
          EllSelection sel = select_ell(n);
          return py::make_tuple(sel.ell, sel.argmin_set);
        },
        py::arg("n"));

  m.def(
      "dual_certificate",
      [](std::size_t n) {
        DualCertificate cert = dual_certificate(n);
        py::dict d;
        d["y"] = render_rational(cert.y);
        d["z"] = render_rational(cert.z);
        d["theta"] = render_all(cert.theta);
        d["feasible"] = cert.feasible;
        return d;
      },
      py::arg("n"));

  m.def(
      "check_residual_balance",
      [](const std::vector<std::string>& pi, const std::vector<std::string>& values) {
        return render_rational(
            check_residual_balance(rule_from(pi), profile_from(values)));
      },
      py::arg("pi"), py::arg("values"));

  m.def(
      "check_satisfactory",
      [](const std::vector<std::string>& pi, std::size_t random_count,
         std::uint64_t seed) {
        GridSpec grid;
        if (random_count == 0) {
          grid.values = {Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)};
        } else {
          grid.random_count = random_count;
          grid.seed = seed;
        }
        VerificationReport report = check_satisfactory(rule_from(pi), grid);
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["name"] = c.name;
          d["passed"] = c.passed;
          if (c.counterexample) d["counterexample"] = render_all(*c.counterexample);
          if (c.residual) d["residual"] = render_rational(*c.residual);
          checks.append(d);
        }
        py::dict out;
        out["grid"] = report.grid_spec;
        out["checks"] = checks;
        out["all_passed"] = report.all_passed();
        return out;
      },
      py::arg("pi"), py::arg("random_count") = 0, py::arg("seed") = 0);

  m.def("convergence_table",
        [](std::size_t n_from, std::size_t n_to) {
          py::list rows;
          for (const auto& row : convergence_table(n_from, n_to)) {
            py::dict d;
            d["n"] = row.n;
            d["ell"] = row.ell;
            d["binomial"] = row.top_binomial.str();
            d["pi1"] = render_rational(row.pi1);
            d["pi1_percent"] = row.pi1_percent;
            rows.append(d);
          }
          return rows;
        },
        py::arg("n_from"), py::arg("n_to"));
}
