#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asymlp.hpp"
#include "linsys.hpp"
#include "transform.hpp"

namespace asymcert {

struct SubsetQuery {
  std::vector<std::string> names;  // non-empty, no duplicates, all in the system
};

struct OracleSample {
  Rat k0;
  std::string stage;  // "part1", "branch+", "branch-"
  bool agree = false;
};

// Verdict for the two-part question: is the system feasible, and if so may
// the queried subset be simultaneously non-trivial (at least one nonzero).
struct AsymDecision {
  bool part1_feasible = false;
  std::optional<bool> part2_nontrivial;  // present iff part1_feasible
  FeasibilityVerdict part1;
  FeasibilityVerdict branch_positive;
  FeasibilityVerdict branch_negative;
  std::vector<OracleSample> oracle_samples;

  // Transformed systems kept for audit and reporting.
  AsymSystem part1_system;
  AsymSystem positive_system;
  AsymSystem negative_system;
};

struct AuditFinding {
  std::string stage;
  std::string detail;
};

struct AuditReport {
  bool passed = true;
  std::vector<AuditFinding> findings;
};

// Feasibility first; when feasible, both certificate sign branches, with the
// subset verdict their disjunction. Every solve is cross-checked against the
// fixed-K oracle just past its recorded threshold.
AsymDecision decide_plinear(const LinearSystem& sys, const SubsetQuery& subset,
                            long pivot_limit = 0);

// Independent audit of a decision: re-derives part 1 from the oracle at two
// large k0, pulls a part-2 YES witness back to the source variables and
// checks it exactly, and re-confirms a part-2 NO on both branches.
AuditReport verify_decision(const LinearSystem& sys, const SubsetQuery& subset,
                            const AsymDecision& decision, long pivot_limit = 0);

}  // namespace asymcert
