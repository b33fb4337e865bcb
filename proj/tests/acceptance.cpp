// Acceptance suite: eight independently timed criteria, one line each.
// Exit status 0 only when every criterion passes within its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "decide.hpp"

using namespace asymcert;

namespace {

struct Checker {
  bool ok = true;
  std::vector<std::string> notes;
  void operator()(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 5) notes.push_back(what);
    }
  }
};

bool run_criterion(int idx, const char* label, double budget_s,
                   const std::function<void(Checker&)>& body) {
  Checker check;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check(false, std::string("exception: ") + e.what());
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  check(elapsed <= budget_s, "over time budget");
  std::printf("criterion %d: %-34s %s  (%.2fs / %.0fs)\n", idx, label,
              check.ok ? "PASS" : "FAIL", elapsed, budget_s);
  for (const auto& n : check.notes) std::printf("    - %s\n", n.c_str());
  std::fflush(stdout);
  return check.ok;
}

Rat rand_rat(std::mt19937_64& rng, int span) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 9);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// The full worked n=5 chain, written out literally.
const std::vector<std::vector<std::vector<Rat>>> kChain5 = {
    {{1, 1, 1, 1, 1},
     {14, 13, 12, 11, 10},
     {71, 59, 49, 41, 35},
     {154, 107, 78, 61, 50},
     {120, 60, 40, 30, 24}},
    {{1, 1, 1, 1}, {12, 10, 8, 6}, {47, 29, 17, 11}, {60, 20, 10, 6}},
    {{2, 2, 2}, {18, 12, 6}, {40, 10, 4}},
    {{3, 3}, {15, 3}},
    {{4}},
};

void crit1_chain(Checker& check) {
  for (int n = 2; n <= 12; ++n) {
    OmegaChain chain = reduce_omega_chain(build_omega(n));
    check(chain.terminal == Rat(n - 1), "terminal != n-1 at n=" + std::to_string(n));
  }
  OmegaChain chain5 = reduce_omega_chain(build_omega(5));
  check(chain5.levels.size() == 5, "n=5 chain has wrong depth");
  for (size_t lvl = 0; lvl < kChain5.size(); ++lvl)
    check(chain5.levels[lvl].entries == kChain5[lvl],
          "n=5 level " + std::to_string(lvl + 1) + " differs from the worked matrices");
}

void crit2_determinant(Checker& check) {
  for (int n = 2; n <= 10; ++n)
    check(omega_det_nonzero(build_omega(n)), "singular omega at n=" + std::to_string(n));
}

void crit3_certificate(Checker& check) {
  std::mt19937_64 rng(20260824);
  std::uniform_int_distribution<int> n_dist(1, 8), zero_dist(0, 4);
  for (int trial = 0; trial < 500; ++trial) {
    int n = n_dist(rng);
    std::vector<Rat> x(n, Rat(0));
    if (zero_dist(rng) != 0)
      for (auto& q : x) q = rand_rat(rng, 100);
    bool all_zero = true;
    for (const auto& q : x)
      if (sgn(q) != 0) all_zero = false;
    check(is_trivial_via_certificate(x) == all_zero,
          "verdict mismatch at trial " + std::to_string(trial));
    CertificatePoly c = build_certificate(x);
    Rat gamma = certificate_gamma(x);
    for (const Rat& k0 : {Rat(gamma + 1), Rat(gamma + 2), Rat(gamma + 100)})
      check((sgn(c.value().eval_at(k0)) == 0) == all_zero,
            "sample-point mismatch at trial " + std::to_string(trial));
  }
}

void crit4_dual_construction(Checker& check) {
  std::mt19937_64 rng(7771);
  std::uniform_int_distribution<int> n_dist(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    int n = n_dist(rng);
    std::vector<Rat> x(n);
    for (auto& q : x) q = rand_rat(rng, 100);
    // build_certificate cross-checks the expansion against the coefficient
    // formulas internally and throws on any drift.
    CertificatePoly c = build_certificate(x);
    for (int i = 0; i < n; ++i)
      check(c.numerator.coeff(i) == c.b_coeffs[i], "coefficient drift");
  }
  // n=5 pattern: top coefficient is the plain sum, constant row is
  // 120 x1 + 60 x2 + 40 x3 + 30 x4 + 24 x5.
  std::vector<Rat> x(5);
  for (auto& q : x) q = rand_rat(rng, 50);
  CertificatePoly c = build_certificate(x);
  check(c.b_coeffs[4] == x[0] + x[1] + x[2] + x[3] + x[4], "K^4 row is not the plain sum");
  check(c.b_coeffs[0] == Rat(120) * x[0] + Rat(60) * x[1] + Rat(40) * x[2] + Rat(30) * x[3] +
                             Rat(24) * x[4],
        "K^0 row mismatch");
}

void crit5_transform(Checker& check) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    int a[2][3], b[2][3], c[2], d[2];
    for (int i = 0; i < 2; ++i) {
      c[i] = val(rng);
      d[i] = val(rng);
      for (int j = 0; j < 3; ++j) {
        a[i][j] = val(rng);
        b[i][j] = val(rng);
        if (a[i][j] == 0) a[i][j] = 1;
        if (b[i][j] == 0) b[i][j] = 1;
      }
    }
    LinearSystem sys;
    sys.variables = {"y1", "y2", "y3"};
    for (int i = 0; i < 2; ++i) {
      Constraint row;
      for (int j = 0; j < 3; ++j) row.coeffs[sys.variables[j]] = a[i][j];
      row.relation = Relation::LE;
      row.rhs = c[i];
      sys.constraints.push_back(row);
    }
    for (int i = 0; i < 2; ++i) {
      Constraint row;
      for (int j = 0; j < 3; ++j) row.coeffs[sys.variables[j]] = b[i][j];
      row.relation = Relation::LT;
      row.rhs = d[i];
      sys.constraints.push_back(row);
    }

    for (CertSign sign : {CertSign::positive, CertSign::negative}) {
      CertSystem cert = add_certificate_constraint(normalize(sys), {"y2", "y3"}, sign);
      AsymSystem out = scale_certificate_vars(cert);
      check(out.slack_name.has_value(), "missing slack");
      const std::string& e = *out.slack_name;
      check(out.constraints.size() == 6, "expected six rows");
      std::string z2, z3;
      for (const auto& [z, sub] : out.substitutions) {
        if (sub.source == "y2") {
          z2 = z;
          check(sub.offset == 1, "y2 offset");
        }
        if (sub.source == "y3") {
          z3 = z;
          check(sub.offset == 2, "y3 offset");
        }
      }
      check(!z2.empty() && !z3.empty(), "substitutions incomplete");
      if (z2.empty() || z3.empty()) return;
      // Scaled coefficients on every source row.
      for (int i = 0; i < 4; ++i) {
        const AsymConstraint& row = out.constraints[i];
        const auto& src = i < 2 ? a[i] : b[i - 2];
        check(row.coeffs.at("y1") == Poly(Rat(src[0])), "y1 coefficient row " + std::to_string(i));
        check(row.coeffs.at(z2) == Poly::k_plus(1) * Rat(src[1]),
              "(K+1) scaling row " + std::to_string(i));
        check(row.coeffs.at(z3) == Poly::k_plus(2) * Rat(src[2]),
              "(K+2) scaling row " + std::to_string(i));
      }
      check(out.constraints[2].coeffs.at(e) == Poly(Rat(1)), "strict row lost its margin");
      check(out.constraints[3].coeffs.at(e) == Poly(Rat(1)), "strict row lost its margin");
      const AsymConstraint& cert_row = out.constraints[4];
      Rat s = sign == CertSign::positive ? Rat(-1) : Rat(1);
      check(cert_row.coeffs.at(z2) == Poly(s) && cert_row.coeffs.at(z3) == Poly(s) &&
                cert_row.coeffs.at(e) == Poly(Rat(1)) && cert_row.rhs.is_zero(),
            "certificate row shape");
      const AsymConstraint& gadget = out.constraints[5];
      check(gadget.coeffs.at(e) == -Poly::k() && gadget.rhs == Poly(Rat(-1)), "gadget row shape");
    }
  }
}

void crit6_oracle_agreement(Checker& check) {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> nvar_dist(1, 6), nrow_dist(1, 10), coeff(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
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
    FeasibilityVerdict v = asym_feasible(sys);
    Rat kstar = v.threshold;
    for (const Rat& k0 : {Rat(kstar + 1), Rat(kstar * 10), Rat(kstar * 1000)})
      check(feasible_at(sys, k0).feasible == v.feasible,
            "oracle disagreement at trial " + std::to_string(trial));
    if (v.feasible) check(witness_satisfies(sys, v.witness), "invalid witness");
  }
}

void crit7_end_to_end(Checker& check) {
  struct Example {
    const char* text;
    std::vector<std::string> subset;
    bool part1;
    std::optional<bool> part2;
  };
  const Example examples[] = {
      {"y1 + y2 <= 0\n-y1 - y2 <= 0", {"y1", "y2"}, true, true},
      {"y1 <= 0\n-y1 <= 0", {"y1"}, true, false},
      {"y1 <= -1\n-y1 <= 0", {"y1"}, false, std::nullopt},
  };
  for (const Example& ex : examples) {
    LinearSystem sys = parse_system(ex.text);
    SubsetQuery subset{ex.subset};
    AsymDecision d = decide_plinear(sys, subset);
    check(d.part1_feasible == ex.part1, "part-1 verdict");
    check(d.part2_nontrivial == ex.part2, "part-2 verdict");
    AuditReport audit = verify_decision(sys, subset, d);
    check(audit.passed,
          "audit failed: " + (audit.findings.empty() ? std::string("?")
                                                     : audit.findings.front().detail));
  }
}

void crit8_metamorphic(Checker& check) {
  std::mt19937_64 rng(31337);
  LinearSystem sys = parse_system(
      "y1 + y2 + y3 <= 2\n"
      "-y1 + y3 <= 0\n"
      "y2 - y3 < 1\n"
      "y1 >= 0");
  std::vector<std::string> names{"y1", "y2", "y3"};
  AsymDecision base = decide_plinear(sys, SubsetQuery{names});
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(names.begin(), names.end(), rng);
    AsymDecision d = decide_plinear(sys, SubsetQuery{names});
    check(d.part1_feasible == base.part1_feasible && d.part2_nontrivial == base.part2_nontrivial,
          "subset-order variance at trial " + std::to_string(trial));
  }

  std::uniform_int_distribution<int> coeff(-3, 3), nrow_dist(1, 4), rel(0, 2);
  std::vector<std::string> all{"y1", "y2", "y3"};
  for (int trial = 0; trial < 30; ++trial) {
    LinearSystem rand_sys;
    rand_sys.variables = all;
    int nr = nrow_dist(rng);
    for (int i = 0; i < nr; ++i) {
      Constraint row;
      for (const auto& v : all) {
        int c = coeff(rng);
        if (c != 0) row.coeffs[v] = c;
      }
      if (row.coeffs.empty()) row.coeffs["y1"] = 1;
      int r = rel(rng);
      row.relation = r == 0 ? Relation::LT : (r == 1 ? Relation::GE : Relation::LE);
      row.rhs = coeff(rng);
      rand_sys.constraints.push_back(row);
    }
    AsymDecision small = decide_plinear(rand_sys, SubsetQuery{{"y1"}});
    if (!small.part1_feasible) continue;
    AsymDecision mid = decide_plinear(rand_sys, SubsetQuery{{"y1", "y2"}});
    AsymDecision large = decide_plinear(rand_sys, SubsetQuery{{"y1", "y2", "y3"}});
    if (*small.part2_nontrivial)
      check(*mid.part2_nontrivial, "monotonicity break at trial " + std::to_string(trial));
    if (*mid.part2_nontrivial)
      check(*large.part2_nontrivial, "monotonicity break at trial " + std::to_string(trial));
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "omega reduction chain", 1, crit1_chain);
  ok &= run_criterion(2, "determinant oracle", 5, crit2_determinant);
  ok &= run_criterion(3, "certificate property suite", 30, crit3_certificate);
  ok &= run_criterion(4, "dual-construction identity", 10, crit4_dual_construction);
  ok &= run_criterion(5, "transform fidelity", 1, crit5_transform);
  ok &= run_criterion(6, "asymptotic/oracle agreement", 60, crit6_oracle_agreement);
  ok &= run_criterion(7, "end-to-end decisions", 5, crit7_end_to_end);
  ok &= run_criterion(8, "metamorphic suite", 30, crit8_metamorphic);
  std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}
