#include <doctest.h>

#include <random>

#include "asymlp.hpp"
#include "simplex.hpp"

using namespace asymcert;

namespace {

AsymConstraint row(std::map<std::string, Poly> coeffs, Poly rhs) {
  return AsymConstraint{std::move(coeffs), std::move(rhs)};
}

// {K*e >= 1, e <= 1} as LE rows.
AsymSystem gadget_system() {
  AsymSystem sys;
  sys.variables = {"e"};
  sys.slack_name = "e";
  sys.constraints.push_back(row({{"e", -Poly::k()}}, Poly(Rat(-1))));
  sys.constraints.push_back(row({{"e", Poly(Rat(1))}}, Poly(Rat(1))));
  return sys;
}

// {y <= 0, y >= K-5}.
AsymSystem late_conflict() {
  AsymSystem sys;
  sys.variables = {"y"};
  sys.constraints.push_back(row({{"y", Poly(Rat(1))}}, Poly()));
  sys.constraints.push_back(row({{"y", Poly(Rat(-1))}}, -Poly{Rat(-5), Rat(1)}));
  return sys;
}

std::mt19937_64 rng(5150);

AsymSystem random_system() {
  std::uniform_int_distribution<int> nvar_dist(1, 6), nrow_dist(1, 10), coeff(-3, 3);
  AsymSystem sys;
  int nvar = nvar_dist(rng);
  for (int j = 0; j < nvar; ++j) sys.variables.push_back("v" + std::to_string(j));
  int nrow = nrow_dist(rng);
  for (int i = 0; i < nrow; ++i) {
    AsymConstraint r;
    for (const auto& v : sys.variables) {
      Poly p{Rat(coeff(rng)), Rat(coeff(rng))};
      if (!p.is_zero()) r.coeffs[v] = p;
    }
    r.rhs = Poly{Rat(coeff(rng)), Rat(coeff(rng))};
    sys.constraints.push_back(std::move(r));
  }
  return sys;
}

}  // namespace

TEST_CASE("slack gadget is eventually feasible") {
  AsymSystem sys = gadget_system();
  FeasibilityVerdict v = asym_feasible(sys);
  CHECK(v.feasible);
  CHECK(witness_satisfies(sys, v.witness));
  // The oracle confirms at a concrete large K: e = 1/100 works at K=100.
  FixedKVerdict fixed = feasible_at(sys, Rat(100));
  CHECK(fixed.feasible);
}

TEST_CASE("plainly contradictory rows") {
  AsymSystem sys;
  sys.variables = {"y"};
  sys.constraints.push_back(row({{"y", Poly(Rat(1))}}, Poly(Rat(1))));    // y <= 1
  sys.constraints.push_back(row({{"y", Poly(Rat(-1))}}, Poly(Rat(-2))));  // y >= 2
  CHECK_FALSE(asym_feasible(sys).feasible);
  CHECK_FALSE(feasible_at(sys, Rat(7)).feasible);
}

TEST_CASE("pre-asymptotic disagreement at small K") {
  AsymSystem sys = late_conflict();
  FeasibilityVerdict v = asym_feasible(sys);
  CHECK_FALSE(v.feasible);                     // y <= 0 and y >= K-5 conflict for large K
  CHECK(feasible_at(sys, Rat(3)).feasible);    // but K=3 allows y in [-2, 0]
  CHECK_FALSE(feasible_at(sys, Rat(10)).feasible);
  CHECK_FALSE(feasible_at(sys, Rat(100)).feasible);
  CHECK(v.threshold >= Rat(5));
  CHECK(feasible_at(sys, Rat(v.threshold + 1)).feasible == v.feasible);
}

TEST_CASE("degenerate constant rows") {
  AsymSystem sys;
  sys.variables = {"y"};
  sys.constraints.push_back(row({{"y", Poly()}}, Poly(Rat(-1))));  // 0 <= -1
  CHECK_FALSE(asym_feasible(sys).feasible);
  sys.constraints.clear();
  sys.constraints.push_back(row({{"y", Poly()}}, Poly{Rat(0), Rat(1)}));  // 0 <= K
  CHECK(asym_feasible(sys).feasible);
}

TEST_CASE("steady-state threshold") {
  CHECK(steady_state_threshold(gadget_system()) >= Rat(1));
  // Constant-coefficient system: nothing depends on K.
  AsymSystem sys;
  sys.variables = {"y"};
  sys.constraints.push_back(row({{"y", Poly(Rat(1))}}, Poly(Rat(3))));
  CHECK(steady_state_threshold(sys) == Rat(1));
  CHECK(steady_state_threshold(late_conflict()) >= Rat(5));
}

TEST_CASE("oracle agreement on random systems") {
  for (int trial = 0; trial < 200; ++trial) {
    AsymSystem sys = random_system();
    FeasibilityVerdict v = asym_feasible(sys);
    Rat kstar = v.threshold;
    for (const Rat& k0 : {Rat(kstar + 1), Rat(kstar * 10), Rat(kstar * 1000)}) {
      CHECK(feasible_at(sys, k0).feasible == v.feasible);
    }
    if (v.feasible) {
      CHECK(witness_satisfies(sys, v.witness));
      // Specializing the witness past the threshold satisfies the
      // specialized system.
      LinearSystem fixed = sys.specialize(Rat(kstar + 1));
      std::map<std::string, Rat> point;
      for (const auto& [name, f] : v.witness) point[name] = f.eval_at(Rat(kstar + 1));
      CHECK(satisfies(fixed, point));
    }
  }
}

TEST_CASE("scale invariance of the verdict") {
  for (int trial = 0; trial < 50; ++trial) {
    AsymSystem sys = random_system();
    bool verdict = asym_feasible(sys).feasible;
    AsymSystem scaled = sys;
    std::uniform_int_distribution<int> factor(1, 5);
    for (auto& r : scaled.constraints) {
      Rat s(factor(rng));
      for (auto& [name, p] : r.coeffs) p = p * s;
      r.rhs = r.rhs * s;
    }
    CHECK(asym_feasible(scaled).feasible == verdict);
  }
}

TEST_CASE("pivot ceiling throws instead of looping") {
  AsymSystem sys;
  sys.variables = {"a", "b"};
  sys.constraints.push_back(row({{"a", Poly(Rat(-1))}, {"b", Poly(Rat(-1))}}, Poly(Rat(-4))));
  sys.constraints.push_back(row({{"a", Poly(Rat(1))}, {"b", Poly(Rat(-1))}}, Poly(Rat(-2))));
  CHECK(asym_feasible(sys).feasible);
  CHECK_THROWS_AS(asym_feasible(sys, 1), PivotLimitError);
}
