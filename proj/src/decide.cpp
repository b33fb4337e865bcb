#include "decide.hpp"

#include <set>
#include <stdexcept>

namespace asymcert {

namespace {

void validate_subset(const LinearSystem& sys, const SubsetQuery& subset) {
  if (subset.names.empty()) throw std::invalid_argument("subset query must be non-empty");
  std::set<std::string> seen;
  for (const auto& name : subset.names) {
    if (!sys.has_variable(name))
      throw std::invalid_argument("unknown variable in subset: '" + name + "'");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate variable in subset: '" + name + "'");
  }
}

OracleSample cross_check(const AsymSystem& sys, const FeasibilityVerdict& verdict,
                         const std::string& stage, long pivot_limit) {
  Rat k0 = verdict.threshold + 1;
  bool oracle = feasible_at(sys, k0, pivot_limit).feasible;
  return OracleSample{k0, stage, oracle == verdict.feasible};
}

}  // namespace

AsymDecision decide_plinear(const LinearSystem& sys, const SubsetQuery& subset,
                            long pivot_limit) {
  validate_subset(sys, subset);
  LinearSystem normalized = normalize(sys);

  AsymDecision decision;
  decision.part1_system = strict_to_nonstrict(normalized);
  decision.part1 = asym_feasible(decision.part1_system, pivot_limit);
  decision.part1_feasible = decision.part1.feasible;
  decision.oracle_samples.push_back(
      cross_check(decision.part1_system, decision.part1, "part1", pivot_limit));
  if (!decision.part1_feasible) return decision;

  decision.positive_system = scale_certificate_vars(
      add_certificate_constraint(normalized, subset.names, CertSign::positive));
  decision.branch_positive = asym_feasible(decision.positive_system, pivot_limit);
  decision.oracle_samples.push_back(
      cross_check(decision.positive_system, decision.branch_positive, "branch+", pivot_limit));

  decision.negative_system = scale_certificate_vars(
      add_certificate_constraint(normalized, subset.names, CertSign::negative));
  decision.branch_negative = asym_feasible(decision.negative_system, pivot_limit);
  decision.oracle_samples.push_back(
      cross_check(decision.negative_system, decision.branch_negative, "branch-", pivot_limit));

  decision.part2_nontrivial =
      decision.branch_positive.feasible || decision.branch_negative.feasible;
  return decision;
}

namespace {

void finding(AuditReport& report, const std::string& stage, const std::string& detail) {
  report.passed = false;
  report.findings.push_back(AuditFinding{stage, detail});
}

void audit_against_oracle(AuditReport& report, const AsymSystem& system, bool claimed,
                          const std::string& stage, const Rat& threshold, long pivot_limit) {
  for (const Rat& k0 : {Rat(threshold + 1), Rat(threshold * 10 + 10)}) {
    bool oracle = feasible_at(system, k0, pivot_limit).feasible;
    if (oracle != claimed)
      finding(report, stage,
              "oracle at K=" + to_string(k0) + " says " + (oracle ? "feasible" : "infeasible") +
                  ", decision claims the opposite");
  }
}

}  // namespace

AuditReport verify_decision(const LinearSystem& sys, const SubsetQuery& subset,
                            const AsymDecision& decision, long pivot_limit) {
  validate_subset(sys, subset);
  AuditReport report;

  // (a) part 1 against the fixed-K oracle at two large k0.
  LinearSystem normalized = normalize(sys);
  AsymSystem part1_system = strict_to_nonstrict(normalized);
  Rat t1 = steady_state_threshold(part1_system, pivot_limit);
  audit_against_oracle(report, part1_system, decision.part1_feasible, "part1", t1, pivot_limit);

  if (decision.part2_nontrivial.has_value() != decision.part1_feasible) {
    finding(report, "part2", "part-2 verdict presence disagrees with part-1 feasibility");
    return report;
  }
  if (!decision.part1_feasible) return report;

  bool expected_part2 = decision.branch_positive.feasible || decision.branch_negative.feasible;
  if (*decision.part2_nontrivial != expected_part2)
    finding(report, "part2", "part-2 verdict is not the disjunction of the branch verdicts");

  if (*decision.part2_nontrivial) {
    // (b) pull the feasible branch's witness back to the source variables.
    const bool use_positive = decision.branch_positive.feasible;
    const AsymSystem& branch_sys =
        use_positive ? decision.positive_system : decision.negative_system;
    const FeasibilityVerdict& branch =
        use_positive ? decision.branch_positive : decision.branch_negative;
    const std::string stage = use_positive ? "branch+" : "branch-";
    Rat k0 = branch.threshold + 1;
    std::map<std::string, Rat> point;
    try {
      for (const auto& [name, value] : branch.witness) point[name] = value.eval_at(k0);
    } catch (const std::domain_error& e) {
      finding(report, stage, std::string("witness specialization failed: ") + e.what());
      return report;
    }
    std::map<std::string, Rat> source_point = pull_back(branch_sys, point, k0);
    if (!satisfies(sys, source_point))
      finding(report, stage, "pulled-back witness violates the source system at K=" + to_string(k0));
    bool any_nonzero = false;
    for (const auto& name : subset.names) {
      auto it = source_point.find(name);
      if (it != source_point.end() && sgn(it->second) != 0) any_nonzero = true;
    }
    if (!any_nonzero)
      finding(report, stage, "pulled-back witness has the whole subset at zero");
  } else {
    // (c) both branches must stay infeasible under the oracle.
    for (CertSign sign : {CertSign::positive, CertSign::negative}) {
      AsymSystem branch_sys =
          scale_certificate_vars(add_certificate_constraint(normalized, subset.names, sign));
      Rat t = steady_state_threshold(branch_sys, pivot_limit);
      audit_against_oracle(report, branch_sys, false,
                           sign == CertSign::positive ? "branch+" : "branch-", t, pivot_limit);
    }
  }
  return report;
}

}  // namespace asymcert
