#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "rational.hpp"

namespace asymcert {

// Univariate polynomial in the parameter K with rational coefficients.
// coeffs_[i] is the coefficient of K^i; the leading stored coefficient is
// nonzero, so the zero polynomial has an empty coefficient vector and
// degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& constant);
  explicit Poly(std::vector<Rat> coeffs);  // trims leading zeros
  Poly(std::initializer_list<Rat> coeffs);

  static Poly k();                     // the monomial K
  static Poly k_plus(long offset);     // K + offset
  static Poly monomial(const Rat& c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rat& coeff(int power) const;   // 0 outside the stored range
  const Rat& leading() const;          // throws on the zero polynomial
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(const Rat& k0) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& b) const { return coeffs_ == b.coeffs_; }

  // Exact division; throws std::domain_error if b is zero or does not divide.
  friend Poly div_exact(const Poly& a, const Poly& b);

  // Quotient/remainder over the rationals.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  std::string str(const std::string& var = "K") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// Primitive integer gcd via the subresultant polynomial remainder sequence;
// fraction-free, so no rational blow-up mid-computation. The result has a
// positive leading coefficient; gcd of two zero polynomials is zero.
Poly poly_gcd(const Poly& a, const Poly& b);

// Scales p by the lcm of its coefficient denominators over the gcd of its
// numerators, keeping the leading coefficient positive: the unique primitive
// integer polynomial with p = content * primitive_part(p).
Poly primitive_part(const Poly& p);

}  // namespace asymcert
