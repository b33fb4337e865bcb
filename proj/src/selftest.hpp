#pragma once

#include "report.hpp"

namespace asymcert {

// Randomized property suites over the arithmetic layer, the certificate and
// the solver, reported as one JSON object per suite with pass/fail counts.
// Deterministic for a fixed seed.
Json run_selftest(unsigned long long seed, int trials = 50);

}  // namespace asymcert
