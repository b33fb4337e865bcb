#include "ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace asymcert {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  // Scale so den is the primitive positive-leading integer polynomial.
  Poly den_prim = primitive_part(den_);
  Rat content = den_.leading() / den_prim.leading();
  den_ = std::move(den_prim);
  num_ = num_ * (Rat(1) / content);
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

int RatFunc::sign_at_infinity() const {
  if (num_.is_zero()) return 0;
  return sgn(num_.leading());
}

Rat RatFunc::eval_at(const Rat& k0) const {
  Rat d = den_.eval(k0);
  if (sgn(d) == 0) throw std::domain_error("pole at K = " + to_string(k0));
  return num_.eval(k0) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (den_ == Poly(Rat(1))) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

int compare(const RatFunc& a, const RatFunc& b) { return (a - b).sign_at_infinity(); }

}  // namespace asymcert
