#include "asymlp.hpp"

#include <functional>

#include "certificate.hpp"
#include "simplex.hpp"

namespace asymcert {

namespace {

long effective_limit(const AsymSystem& sys, long pivot_limit) {
  if (pivot_limit > 0) return pivot_limit;
  long rows = static_cast<long>(sys.constraints.size());
  long cols = static_cast<long>(sys.variables.size());
  long base = rows + cols + 1;
  return kDefaultPivotLimitScale * base * base;
}

Rat poly_bound(const Poly& p) {
  if (p.degree() < 1) return 1;
  return root_upper_bound(p);
}

// Sign functor over RatFunc that accumulates the largest root bound seen
// across every inspected value; past that bound each inspected sign is the
// sign at infinity.
struct TrackingSign {
  Rat* threshold;
  int operator()(const RatFunc& f) const {
    if (!f.num().is_zero()) {
      Rat b = poly_bound(f.num());
      if (b > *threshold) *threshold = b;
    }
    Rat b = poly_bound(f.den());
    if (b > *threshold) *threshold = b;
    return f.sign_at_infinity();
  }
};

struct RatSign {
  int operator()(const Rat& q) const { return sgn(q); }
};

template <class Field>
std::pair<std::vector<std::vector<Field>>, std::vector<Field>> dense_rows(
    const AsymSystem& sys, const std::function<Field(const Poly&)>& convert) {
  std::vector<std::vector<Field>> lhs;
  std::vector<Field> rhs;
  for (const auto& row : sys.constraints) {
    std::vector<Field> dense;
    dense.reserve(sys.variables.size());
    for (const auto& v : sys.variables) {
      auto it = row.coeffs.find(v);
      dense.push_back(it == row.coeffs.end() ? Field(0) : convert(it->second));
    }
    lhs.push_back(std::move(dense));
    rhs.push_back(convert(row.rhs));
  }
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace

FeasibilityVerdict asym_feasible(const AsymSystem& sys, long pivot_limit) {
  FeasibilityVerdict verdict;
  TrackingSign sign{&verdict.threshold};
  auto [lhs, rhs] = dense_rows<RatFunc>(
      sys, [](const Poly& p) { return RatFunc::from_poly(p); });
  PhaseOneSimplex<RatFunc, TrackingSign> solver(std::move(lhs), std::move(rhs), sign,
                                                effective_limit(sys, pivot_limit));
  auto result = solver.solve();
  verdict.feasible = result.feasible;
  verdict.pivots = result.pivots;
  if (result.feasible) {
    for (size_t j = 0; j < sys.variables.size(); ++j) {
      verdict.witness[sys.variables[j]] = result.witness[j];
      // Witness signs must also be stable past the threshold.
      sign(result.witness[j]);
    }
  }
  return verdict;
}

FixedKVerdict feasible_at(const AsymSystem& sys, const Rat& k0, long pivot_limit) {
  auto [lhs, rhs] =
      dense_rows<Rat>(sys, [&](const Poly& p) { return p.eval(k0); });
  PhaseOneSimplex<Rat, RatSign> solver(std::move(lhs), std::move(rhs), RatSign{},
                                       effective_limit(sys, pivot_limit));
  auto result = solver.solve();
  FixedKVerdict verdict;
  verdict.feasible = result.feasible;
  verdict.pivots = result.pivots;
  if (result.feasible)
    for (size_t j = 0; j < sys.variables.size(); ++j)
      verdict.witness[sys.variables[j]] = result.witness[j];
  return verdict;
}

Rat steady_state_threshold(const AsymSystem& sys, long pivot_limit) {
  return asym_feasible(sys, pivot_limit).threshold;
}

bool witness_satisfies(const AsymSystem& sys, const std::map<std::string, RatFunc>& witness) {
  for (const auto& row : sys.constraints) {
    RatFunc lhs;
    for (const auto& [name, p] : row.coeffs) {
      auto it = witness.find(name);
      if (it != witness.end()) lhs = lhs + RatFunc::from_poly(p) * it->second;
    }
    if ((RatFunc::from_poly(row.rhs) - lhs).sign_at_infinity() < 0) return false;
  }
  return true;
}

}  // namespace asymcert
