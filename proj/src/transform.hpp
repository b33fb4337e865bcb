#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linsys.hpp"
#include "poly.hpp"

namespace asymcert {

enum class CertSign { positive, negative };

// A non-strict row with coefficients that are polynomials in K:
// sum coeffs[v] * v <= rhs.
struct AsymConstraint {
  std::map<std::string, Poly> coeffs;
  Poly rhs;
};

struct Substitution {
  std::string source;  // original y variable
  long offset;         // y = (K + offset) * z
};

// System over K-polynomial coefficients, non-strict rows only.
struct AsymSystem {
  std::vector<std::string> variables;
  std::vector<AsymConstraint> constraints;
  std::map<std::string, Substitution> substitutions;  // keyed by z name
  std::optional<std::string> slack_name;              // the shared e, if present

  // The source system with every coefficient evaluated at K = k0; variables
  // keep their transformed names.
  LinearSystem specialize(const Rat& k0) const;
};

// Source system plus the strict weighted-average side constraint
// sum_m subset[m] / (K+m) > 0 (or < 0). Kept symbolic: the subset order
// determines the offsets 1..|subset|.
struct CertSystem {
  LinearSystem base;  // normalized, LE/LT rows only
  std::vector<std::string> subset;
  CertSign sign = CertSign::positive;
};

// Rewrites every strict row `lhs < d` as `d - lhs >= e` with one shared
// slack e and the single extra row K*e >= 1; e appears only when at least
// one strict row exists. All rows come out as LE with Poly coefficients.
AsymSystem strict_to_nonstrict(const LinearSystem& sys);

// Appends the certificate side constraint for the chosen subset. Throws
// std::invalid_argument on an empty subset, duplicates, or unknown names.
CertSystem add_certificate_constraint(const LinearSystem& sys,
                                      const std::vector<std::string>& subset, CertSign sign);

// Substitute y_j = (K+k) z_j for every subset
// variable (offset k = its position), which turns the certificate row into
// sum z_j > 0 (or < 0), then apply the strict gadget to everything.
AsymSystem scale_certificate_vars(const CertSystem& cert);

std::string print_system(const AsymSystem& sys);

// Maps a point for the transformed variables back to the source variables:
// z values are multiplied by (k0 + offset), e is dropped.
std::map<std::string, Rat> pull_back(const AsymSystem& sys,
                                     const std::map<std::string, Rat>& point, const Rat& k0);

}  // namespace asymcert
