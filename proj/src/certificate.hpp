#pragma once

#include <vector>

#include "ratfunc.hpp"

namespace asymcert {

// The weighted average sum_i x_i/(K+i) written over the common denominator
// prod_i (K+i). numerator coefficient of K^i equals b_coeffs[i].
struct CertificatePoly {
  Poly numerator;
  Poly denominator;
  std::vector<Rat> b_coeffs;  // B_0 .. B_{N-1}

  RatFunc value() const { return RatFunc(numerator, denominator); }
};

// Square matrix of exact rationals from the homogeneous system B_i = 0.
// level j is 1-based; the level-j matrix has dimension n - j + 1.
struct OmegaMatrix {
  std::vector<std::vector<Rat>> entries;
  int n = 0;      // the N the chain started from
  int level = 1;

  int dim() const { return static_cast<int>(entries.size()); }
};

struct OmegaChain {
  std::vector<OmegaMatrix> levels;  // level 1 .. N
  Rat terminal;                     // sole entry of the final 1x1 matrix
};

// e_m(s): sum over all m-element subsets of s of the product of elements;
// e_0 = 1. Throws std::domain_error when m > |s| or m < 0.
Rat elementary_symmetric(const std::vector<long>& s, int m);

// Builds the certificate two independent ways (direct expansion of
// sum x_i * prod_{j != i}(K+j), and the closed-form coefficient formulas via
// elementary symmetric sums) and verifies they agree.
CertificatePoly build_certificate(const std::vector<Rat>& x);

// Level-1 coefficient matrix: first row all 1, row r >= 2 column c holds
// e_{r-1}({1..n} \ {c}). Throws std::domain_error for n < 2.
OmegaMatrix build_omega(int n);

// Iteratively divides by the common first-row value, differences adjacent
// columns and drops the first row and last column until a single entry
// remains. Each level is checked against its closed form (consecutive-window
// complements); a mismatch throws std::logic_error. Terminal value is n - 1.
OmegaChain reduce_omega_chain(const OmegaMatrix& omega1);

// Independent check of the same conclusion: exact fraction-free (Bareiss)
// elimination, determinant != 0.
bool omega_det_nonzero(const OmegaMatrix& omega1);
Int omega_det(const OmegaMatrix& omega1);

// Upper bound on all real roots of p: 1 + max_{i<deg} |c_i| / |c_deg|.
// Throws std::domain_error for degree < 1.
Rat root_upper_bound(const Poly& p);

// A positive gamma such that for all K > gamma the certificate numerator
// vanishes only if it is identically zero. 1 for constant numerators.
Rat certificate_gamma(const std::vector<Rat>& x);

// The certificate as a decision procedure: evaluates it at
// gamma + 1 and reports whether the value is zero.
bool is_trivial_via_certificate(const std::vector<Rat>& x);

}  // namespace asymcert
