// rankmech: construct, price, verify and certify ranking mechanisms.
// Machine output goes to stdout, diagnostics to stderr.
// Exit codes: 0 pass, 1 property failure, 2 usage or input error.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "rankmech/harness.hpp"
#include "rankmech/optimal.hpp"
#include "rankmech/payments.hpp"
#include "rankmech/serialize.hpp"
#include "rankmech/verify.hpp"

using namespace rankmech;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  return j;
}

RankingRule load_rule(const std::string& path) {
  try {
    return rule_from_json(load_json(path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

ValuationProfile load_profile(const std::string& path) {
  try {
    return profile_from_json(load_json(path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<Rational> parse_rational_csv(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw UsageError("empty rational list");
  return out;
}

// grid mini-language: `values=0,1/3,2/3,1;exhaustive` or `random=500;denom=64`
GridSpec parse_grid_spec(const std::string& text, std::uint64_t seed) {
  GridSpec grid;
  grid.seed = seed;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ';')) {
    auto eq = part.find('=');
    std::string key = part.substr(0, eq);
    std::string value = eq == std::string::npos ? "" : part.substr(eq + 1);
    if (key == "values") {
      grid.values = parse_rational_csv(value);
    } else if (key == "exhaustive") {
      // implied by values=...
    } else if (key == "random") {
      grid.random_count = std::stoul(value);
    } else if (key == "denom") {
      grid.denominator_bound = std::stoul(value);
    } else if (key == "seed") {
      grid.seed = std::stoull(value);
    } else {
      throw UsageError("unknown grid key '" + key + "'");
    }
  }
  if (grid.values.empty() && grid.random_count == 0) {
    throw UsageError("grid spec selects no profiles");
  }
  return grid;
}

void emit(const json& j, const std::string& format, const std::string& human) {
  if (format == "human") {
    std::cout << human;
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int cmd_optimal(std::size_t n, std::optional<std::size_t> ell_tie,
                const std::string& format) {
  OptimalRuleReport report = r_optimal_rule(n, ell_tie);
  std::ostringstream human;
  human << "n = " << n << "\nell = " << report.ell
        << (report.unique ? " (unique)" : " (tied argmin)") << "\npi1 = "
        << render_rational(report.pi1_star) << " = "
        << render_decimal(report.pi1_star, 6) << "\npi = [";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) human << ", ";
    human << render_rational(report.pi_star.pi()[i]);
  }
  human << "]\n";
  emit(optimal_report_to_json(n, report), format, human.str());
  return kExitPass;
}

int cmd_price(const std::string& rule_path, const std::string& profile_path,
              const std::string& method, const std::string& format) {
  RankingRule rule = load_rule(rule_path);
  ValuationProfile v = load_profile(profile_path);
  if (!is_implementable(rule).implementable) {
    throw UsageError("rule fails the balance equation; no satisfactory payments exist");
  }
  TwoStepRule two_step = as_two_step(rule);
  bool two_step_applicable =
      two_step.ell != 0 && v.zero_agents().empty() && v.is_zero_generic();

  std::vector<Rational> payments;
  if (method == "subset") {
    payments = payments_subset_formula(rule, v);
  } else if (method == "recursive") {
    payments = payments_recursive(rule, v);
  } else if (method == "two-step") {
    if (!two_step_applicable) {
      throw UsageError(
          "two-step closed form needs a two-step rule and distinct positive values");
    }
    payments = payments_two_step(two_step, v);
  } else {  // all
    payments = payments_subset_formula(rule, v);
    std::vector<std::string> used{"subset", "recursive"};
    bool agree = payments_recursive(rule, v) == payments;
    if (two_step_applicable) {
      used.push_back("two-step");
      agree = agree && payments_two_step(two_step, v) == payments;
    }
    std::cerr << "methods:";
    for (const auto& m : used) std::cerr << " " << m;
    std::cerr << (agree ? " (agree)" : " (DISAGREE)") << "\n";
    if (!agree) {
      std::cerr << "payment methods disagree; this is an engine bug\n";
      return kExitPropertyFailure;
    }
  }

  std::vector<Rational> allocation = allocate(rule, v);
  Outcome out;
  out.allocation = allocation;
  out.payments = payments;
  out.utilities.resize(v.n());
  for (std::size_t i = 0; i < v.n(); ++i) {
    out.utilities[i] = v.value(i) * allocation[i] - payments[i];
  }

  std::ostringstream human;
  human << "agent  value  allocation  payment  utility\n";
  for (std::size_t i = 0; i < v.n(); ++i) {
    human << (i + 1) << "  " << render_rational(v.value(i)) << "  "
          << render_rational(out.allocation[i]) << "  "
          << render_rational(out.payments[i]) << "  "
          << render_rational(out.utilities[i]) << "\n";
  }
  emit(outcome_to_json(out), format, human.str());
  return kExitPass;
}

int cmd_verify(const std::string& rule_path, const std::string& grid_spec,
               std::size_t random_count, std::uint64_t seed,
               const std::string& format) {
  RankingRule rule = load_rule(rule_path);
  GridSpec grid;
  if (!grid_spec.empty()) {
    grid = parse_grid_spec(grid_spec, seed);
  } else if (random_count > 0) {
    grid.random_count = random_count;
    grid.seed = seed;
  } else {
    grid.values = {Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)};
  }
  VerificationReport report = check_satisfactory(rule, grid);
  std::ostringstream human;
  human << "grid: " << report.grid_spec << "\n";
  for (const auto& c : report.checks) {
    human << (c.passed ? "pass" : "FAIL") << "  " << c.name;
    if (c.residual) human << "  residual=" << render_rational(*c.residual);
    human << "\n";
  }
  emit(verification_report_to_json(report), format, human.str());
  return report.all_passed() ? kExitPass : kExitPropertyFailure;
}

int cmd_table(std::size_t from, std::size_t to, const std::string& format) {
  std::vector<ConvergenceRow> rows = convergence_table(from, to);
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      arr.push_back({{"n", row.n},
                     {"ell", row.ell},
                     {"binomial", row.top_binomial.str()},
                     {"pi1_exact", render_rational(row.pi1)},
                     {"pi1_percent", row.pi1_percent}});
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << "n,ell,binomial,pi1_exact,pi1_percent\n";
    for (const auto& row : rows) {
      std::cout << row.n << "," << row.ell << "," << row.top_binomial.str() << ","
                << render_rational(row.pi1) << "," << row.pi1_percent << "\n";
    }
  }
  return kExitPass;
}

int cmd_check(const std::string& pi_csv, const std::string& format) {
  RankingRule rule = [&] {
    try {
      return RankingRule(parse_rational_csv(pi_csv));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  ImplementabilityResult res = is_implementable(rule);
  json j{{"n", rule.n()},
         {"implementable", res.implementable},
         {"residual", render_rational(res.residual)}};
  std::ostringstream human;
  human << (res.implementable ? "implementable" : "not implementable")
        << "  residual=" << render_rational(res.residual) << "\n";
  emit(j, format, human.str());
  return res.implementable ? kExitPass : kExitPropertyFailure;
}

int cmd_certify(std::size_t n, const std::string& format) {
  OptimalRuleReport report = r_optimal_rule(n);
  DualCertificate cert = dual_certificate(n);
  bool strong_duality = cert.feasible && cert.z == report.pi1_star;
  json j = dual_certificate_to_json(n, cert);
  j["pi1_star"] = render_rational(report.pi1_star);
  j["strong_duality"] = strong_duality;
  std::ostringstream human;
  human << "n = " << n << "\nz* = " << render_rational(cert.z)
        << "\ny = " << render_rational(cert.y) << "\ntheta = [";
  for (std::size_t i = 0; i < cert.theta.size(); ++i) {
    if (i) human << ", ";
    human << render_rational(cert.theta[i]);
  }
  human << "]\ndual feasible: " << (cert.feasible ? "yes" : "no")
        << "\nstrong duality (z* equals the primal optimum): "
        << (strong_duality ? "yes" : "no") << "\n";
  emit(j, format, human.str());
  return strong_duality ? kExitPass : kExitPropertyFailure;
}

int cmd_pareto(const std::string& rule_path, const std::string& format) {
  RankingRule rule = load_rule(rule_path);
  if (!is_implementable(rule).implementable || rule.total_mass() != 1) {
    throw UsageError("domination check needs an implementable unit-mass rule");
  }
  DominationResult res = is_dominated_fosd(rule);
  json j{{"dominated", res.dominated}};
  std::ostringstream human;
  if (res.dominated) {
    j["witness"] = rule_to_json(*res.witness);
    human << "dominated by [";
    for (std::size_t i = 0; i < res.witness->n(); ++i) {
      if (i) human << ", ";
      human << render_rational(res.witness->pi()[i]);
    }
    human << "]\n";
  } else {
    j["bounds_ok"] = r_pareto_bounds_check(rule);
    human << "not dominated\n";
  }
  emit(j, format, human.str());
  return res.dominated ? kExitPropertyFailure : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for budget-balanced truthful single-object mechanisms"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();

  auto* optimal = app.add_subcommand("optimal", "construct the optimal ranking rule");
  std::size_t opt_n = 0;
  std::optional<std::size_t> ell_tie;
  optimal->add_option("--n", opt_n, "number of agents")->required();
  optimal->add_option("--ell-tie", ell_tie, "argmin member to pick at n = 8");

  auto* price = app.add_subcommand("price", "allocation, payments and utilities");
  std::string rule_path, profile_path, method = "subset";
  price->add_option("--rule", rule_path, "rule JSON file")->required();
  price->add_option("--profile", profile_path, "profile JSON file")->required();
  price->add_option("--method", method, "payment path")
      ->check(CLI::IsMember({"subset", "two-step", "recursive", "all"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "property sweep over a profile grid");
  std::string verify_rule_path, grid_spec;
  std::size_t random_count = 0;
  std::uint64_t seed = 0;
  verify->add_option("--rule", verify_rule_path, "rule JSON file")->required();
  verify->add_option("--grid", grid_spec, "grid spec, e.g. values=0,1/3,2/3,1;exhaustive");
  verify->add_option("--random", random_count, "random profile count");
  verify->add_option("--seed", seed, "random seed");

  auto* table = app.add_subcommand("table", "top-probability convergence table");
  std::size_t from = 3, to = 17;
  table->add_option("--from", from, "first n")->required();
  table->add_option("--to", to, "last n")->required();

  auto* check = app.add_subcommand("check", "balance-equation test for a pi vector");
  std::string pi_csv;
  check->add_option("--pi", pi_csv, "comma-separated probabilities")->required();

  auto* certify = app.add_subcommand("certify", "duality certificate of optimality");
  std::size_t certify_n = 0;
  certify->add_option("--n", certify_n, "number of agents")->required();

  auto* pareto = app.add_subcommand("pareto", "prefix-dominance check");
  std::string pareto_rule_path;
  pareto->add_option("--rule", pareto_rule_path, "rule JSON file")->required();

  // let app-level options like --format appear after the subcommand name
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(optimal)) return cmd_optimal(opt_n, ell_tie, format);
    if (app.got_subcommand(price))
      return cmd_price(rule_path, profile_path, method, format);
    if (app.got_subcommand(verify))
      return cmd_verify(verify_rule_path, grid_spec, random_count, seed, format);
    if (app.got_subcommand(table)) {
      return cmd_table(from, to, format == "json" ? "json" : "csv");
    }
    if (app.got_subcommand(check)) return cmd_check(pi_csv, format);
    if (app.got_subcommand(certify)) return cmd_certify(certify_n, format);
    if (app.got_subcommand(pareto)) return cmd_pareto(pareto_rule_path, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitUsage;
}
