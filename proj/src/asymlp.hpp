#pragma once

#include <map>
#include <optional>
#include <string>

#include "ratfunc.hpp"
#include "transform.hpp"

namespace asymcert {

inline constexpr long kDefaultPivotLimitScale = 10;  // ceiling = scale*(rows+cols)^2

struct FeasibilityVerdict {
  bool feasible = false;
  long pivots = 0;
  std::map<std::string, RatFunc> witness;  // present when feasible

  // Every sign decision of the solve stays constant for K > threshold, so the
  // fixed-K run follows the same pivot path beyond it. Conservative.
  Rat threshold = 1;
};

struct FixedKVerdict {
  bool feasible = false;
  long pivots = 0;
  std::map<std::string, Rat> witness;
};

// Feasibility of the system read over the ordered field of rational functions
// in K; equals feasibility for all sufficiently large real K.
// pivot_limit <= 0 picks the default ceiling.
FeasibilityVerdict asym_feasible(const AsymSystem& sys, long pivot_limit = 0);

// Independent oracle: specialize every coefficient at K = k0 and run the same
// simplex over plain rationals.
FixedKVerdict feasible_at(const AsymSystem& sys, const Rat& k0, long pivot_limit = 0);

// The recorded sign-constancy threshold k* of a fresh asymptotic solve.
Rat steady_state_threshold(const AsymSystem& sys, long pivot_limit = 0);

// Exact slack check of a rational-function witness against every row.
bool witness_satisfies(const AsymSystem& sys, const std::map<std::string, RatFunc>& witness);

}  // namespace asymcert
