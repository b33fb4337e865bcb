#include "selftest.hpp"

#include <random>

#include "certificate.hpp"

namespace asymcert {

namespace {

using Rng = std::mt19937_64;

Rat random_rat(Rng& rng, int span) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 9);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Poly random_poly(Rng& rng, int max_deg, int span) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  std::vector<Rat> c(d + 1);
  for (auto& q : c) q = random_rat(rng, span);
  return Poly(std::move(c));
}

RatFunc random_ratfunc(Rng& rng) {
  Poly den = random_poly(rng, 2, 4);
  while (den.is_zero()) den = random_poly(rng, 2, 4);
  return RatFunc(random_poly(rng, 2, 4), den);
}

AsymSystem random_asym_system(Rng& rng) {
  std::uniform_int_distribution<int> nvar_dist(1, 3), nrow_dist(1, 5), coeff(-3, 3);
  AsymSystem sys;
  int nvar = nvar_dist(rng);
  for (int j = 0; j < nvar; ++j) sys.variables.push_back("v" + std::to_string(j));
  int nrow = nrow_dist(rng);
  for (int i = 0; i < nrow; ++i) {
    AsymConstraint row;
    for (const auto& v : sys.variables) {
      Poly p{Rat(coeff(rng)), Rat(coeff(rng))};
      if (!p.is_zero()) row.coeffs[v] = p;
    }
    row.rhs = Poly{Rat(coeff(rng)), Rat(coeff(rng))};
    sys.constraints.push_back(std::move(row));
  }
  return sys;
}

struct Suite {
  int passed = 0;
  int failed = 0;
  void check(bool ok) { ok ? ++passed : ++failed; }
  Json json(const std::string& name) const {
    return Json{{"suite", name}, {"passed", passed}, {"failed", failed}};
  }
};

}  // namespace

Json run_selftest(unsigned long long seed, int trials) {
  Rng rng(seed);
  Json suites = Json::array();

  {
    Suite s;
    RatFunc zero;
    for (int t = 0; t < trials; ++t) {
      RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng), h = random_ratfunc(rng);
      s.check((f + g) + h == f + (g + h));
      s.check(f * g == g * f);
      s.check(f * (g + h) == f * g + f * h);
      s.check(compare(f, g) == -compare(g, f));
      s.check(compare(f, g) == compare(f + h, g + h));
      if (compare(h, zero) > 0) s.check(compare(f * h, g * h) == compare(f, g));
      if (!g.is_zero()) s.check((f / g) * g == f);
      // Sign at infinity matches concrete evaluation past every root.
      if (!f.is_zero()) {
        Rat bound = 1;
        if (f.num().degree() >= 1) bound = std::max(bound, root_upper_bound(f.num()));
        if (f.den().degree() >= 1) bound = std::max(bound, root_upper_bound(f.den()));
        s.check(sgn(f.eval_at(Rat(bound + 1))) == f.sign_at_infinity());
      }
    }
    suites.push_back(s.json("ordered_field"));
  }

  {
    Suite s;
    std::uniform_int_distribution<int> n_dist(1, 8), zero_dist(0, 4);
    for (int t = 0; t < trials; ++t) {
      int n = n_dist(rng);
      std::vector<Rat> x(n);
      bool force_zero = zero_dist(rng) == 0;
      bool all_zero = true;
      for (auto& q : x) {
        q = force_zero ? Rat(0) : random_rat(rng, 100);
        if (sgn(q) != 0) all_zero = false;
      }
      s.check(is_trivial_via_certificate(x) == all_zero);
    }
    suites.push_back(s.json("certificate_trivial"));
  }

  {
    Suite s;
    for (int n = 2; n <= 10; ++n) {
      OmegaMatrix omega = build_omega(n);
      s.check(reduce_omega_chain(omega).terminal == Rat(n - 1));
      s.check(omega_det_nonzero(omega));
    }
    suites.push_back(s.json("omega_chain"));
  }

  {
    Suite s;
    for (int t = 0; t < trials; ++t) {
      AsymSystem sys = random_asym_system(rng);
      FeasibilityVerdict verdict = asym_feasible(sys);
      for (const Rat& k0 : {Rat(verdict.threshold + 1), Rat(verdict.threshold * 10)}) {
        s.check(feasible_at(sys, k0).feasible == verdict.feasible);
      }
      if (verdict.feasible) s.check(witness_satisfies(sys, verdict.witness));
    }
    suites.push_back(s.json("asymlp_oracle"));
  }

  int failed = 0;
  for (const auto& s : suites) failed += s.at("failed").get<int>();
  return Json{{"seed", seed}, {"trials", trials}, {"suites", suites}, {"passed", failed == 0}};
}

}  // namespace asymcert
