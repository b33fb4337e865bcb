#pragma once

#include <json.hpp>

#include "decide.hpp"

namespace asymcert {

using Json = nlohmann::ordered_json;

Json system_to_json(const LinearSystem& sys);
LinearSystem system_from_json(const Json& j);

// Certificate data for a concrete scalar set: numerator, B coefficients,
// gamma and the triviality verdict.
Json certify_report(const std::vector<Rat>& scalars);

// The full reduction chain for the order-n coefficient matrix, with the
// terminal value and the determinant cross-check.
Json omega_report(int n);

// Feasibility of the strict-to-nonstrict image of the system, with witness,
// threshold and a fixed-K oracle sample.
Json solve_asym_report(const LinearSystem& sys, long pivot_limit);

Json decision_report(const LinearSystem& sys, const SubsetQuery& subset,
                     const AsymDecision& decision);
Json audit_report_json(const AuditReport& report);

}  // namespace asymcert
