#pragma once

#include <string>

#include "poly.hpp"

namespace asymcert {

// Element of the ordered field of rational functions in K. Canonical form:
// num/den coprime, den a primitive integer polynomial with positive leading
// coefficient. The order is the eventual order as K -> +infinity, exposed
// only through sign_at_infinity / compare.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rat(1)) {}
  RatFunc(const Rat& constant) : num_(constant), den_(Rat(1)) {}
  RatFunc(Poly num, Poly den);  // throws std::domain_error on zero den

  static RatFunc from_poly(Poly p) { return RatFunc(std::move(p), Poly(Rat(1))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // throws on b == 0
  bool operator==(const RatFunc& b) const { return num_ == b.num_ && den_ == b.den_; }

  // Sign of f(K) for all sufficiently large K. With den normalized to a
  // positive leading coefficient this is the sign of num's leading coefficient.
  int sign_at_infinity() const;

  // Exact value at K = k0; throws std::domain_error at a pole.
  Rat eval_at(const Rat& k0) const;

  std::string str(const std::string& var = "K") const;

 private:
  void normalize();
  Poly num_, den_;
};

// Total order induced by sign_at_infinity(a - b): -1, 0 or +1.
int compare(const RatFunc& a, const RatFunc& b);

}  // namespace asymcert
