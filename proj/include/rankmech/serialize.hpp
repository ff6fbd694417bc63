#pragma once

#include <nlohmann/json_fwd.hpp>

#include "rankmech/optimal.hpp"
#include "rankmech/payments.hpp"
#include "rankmech/verify.hpp"

namespace rankmech {

using nlohmann::json;

json rule_to_json(const RankingRule& rule);
RankingRule rule_from_json(const json& j);

json profile_to_json(const ValuationProfile& v);
ValuationProfile profile_from_json(const json& j);

json outcome_to_json(const Outcome& outcome);
json optimal_report_to_json(std::size_t n, const OptimalRuleReport& report);
json dual_certificate_to_json(std::size_t n, const DualCertificate& cert);
json verification_report_to_json(const VerificationReport& report);

}  // namespace rankmech
