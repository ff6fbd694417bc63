#include "rankmech/serialize.hpp"

#include <nlohmann/json.hpp>

namespace rankmech {

namespace {

json rationals_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(render_rational(v));
  return arr;
}

std::vector<Rational> rationals_from_json(const json& arr) {
  std::vector<Rational> values;
  for (const auto& entry : arr) {
    values.push_back(parse_rational(entry.get<std::string>()));
  }
  return values;
}

}  // namespace

json rule_to_json(const RankingRule& rule) {
  return json{{"n", rule.n()}, {"pi", rationals_to_json(rule.pi())}};
}

RankingRule rule_from_json(const json& j) {
  RankingRule rule(rationals_from_json(j.at("pi")));
  if (j.contains("n") && j.at("n").get<std::size_t>() != rule.n()) {
    throw std::invalid_argument("rule JSON: n does not match pi length");
  }
  return rule;
}

json profile_to_json(const ValuationProfile& v) {
  return json{{"values", rationals_to_json(v.values())}};
}

ValuationProfile profile_from_json(const json& j) {
  return ValuationProfile(rationals_from_json(j.at("values")));
}

json outcome_to_json(const Outcome& outcome) {
  return json{{"allocation", rationals_to_json(outcome.allocation)},
              {"payments", rationals_to_json(outcome.payments)},
              {"utilities", rationals_to_json(outcome.utilities)}};
}

json optimal_report_to_json(std::size_t n, const OptimalRuleReport& report) {
  return json{{"n", n},
              {"ell", report.ell},
              {"ell_argmin_set", report.ell_argmin_set},
              {"pi", rationals_to_json(report.pi_star.pi())},
              {"pi1", render_rational(report.pi1_star)},
              {"pi1_decimal", render_decimal(report.pi1_star, 6)},
              {"unique", report.unique}};
}

json dual_certificate_to_json(std::size_t n, const DualCertificate& cert) {
  return json{{"n", n},
              {"y", render_rational(cert.y)},
              {"z", render_rational(cert.z)},
              {"theta", rationals_to_json(cert.theta)},
              {"dual_feasible", cert.feasible}};
}

json verification_report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& check : report.checks) {
    json entry{{"name", check.name}, {"passed", check.passed}};
    if (check.counterexample) {
      entry["counterexample"] = rationals_to_json(*check.counterexample);
    }
    if (check.residual) entry["residual"] = render_rational(*check.residual);
    if (!check.detail.empty()) entry["detail"] = check.detail;
    checks.push_back(std::move(entry));
  }
  return json{{"grid", report.grid_spec},
              {"checks", std::move(checks)},
              {"all_passed", report.all_passed()}};
}

}  // namespace rankmech
