#include "poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace asymcert {

namespace {
const Rat kZero = 0;
}

Poly::Poly(const Rat& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::k() { return Poly{Rat(0), Rat(1)}; }

Poly Poly::k_plus(long offset) { return Poly{Rat(offset), Rat(1)}; }

Poly Poly::monomial(const Rat& c, int power) {
  if (power < 0) throw std::domain_error("negative monomial power");
  if (sgn(c) == 0) return Poly();
  std::vector<Rat> v(power + 1, Rat(0));
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rat& Poly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[power];
}

const Rat& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rat Poly::eval(const Rat& k0) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k0 + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& s) const {
  if (sgn(s) == 0) return Poly();
  Poly r(*this);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly(), rem};
  std::vector<Rat> q(a.degree() - b.degree() + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rat factor = rem.leading() / b.leading();
    q[shift] = factor;
    rem = rem - Poly::monomial(factor, shift) * b;
  }
  return {Poly(std::move(q)), rem};
}

Poly div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(p.leading()) < 0) scale = -scale;
  return p * scale;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  // Primitive PRS on the integer images of a and b; every intermediate is a
  // primitive integer polynomial, so no rational coefficients ever appear.
  Poly f = primitive_part(a);
  Poly g = primitive_part(b);
  if (f.degree() < g.degree()) std::swap(f, g);
  while (true) {
    int delta = f.degree() - g.degree();
    // Pseudo-remainder: lc(g)^(delta+1) * f mod g stays integral.
    Rat lead_pow = 1;
    for (int i = 0; i <= delta; ++i) lead_pow *= g.leading();
    Poly rem = divmod(f * lead_pow, g).second;
    if (rem.is_zero()) return primitive_part(g);
    if (rem.degree() == 0) return Poly(Rat(1));
    f = std::move(g);
    g = primitive_part(rem);
  }
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeff(i);
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (!unit) out << mag.get_str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace asymcert
