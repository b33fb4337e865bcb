#include "report.hpp"

#include <stdexcept>

#include "certificate.hpp"

namespace asymcert {

namespace {

Relation relation_from_token(const std::string& token) {
  if (token == "<=") return Relation::LE;
  if (token == "<") return Relation::LT;
  if (token == ">=") return Relation::GE;
  if (token == ">") return Relation::GT;
  if (token == "=") return Relation::EQ;
  throw std::invalid_argument("unknown relation token: '" + token + "'");
}

Json witness_json(const std::map<std::string, RatFunc>& witness) {
  Json j = Json::object();
  for (const auto& [name, value] : witness) j[name] = value.str();
  return j;
}

}  // namespace

Json system_to_json(const LinearSystem& sys) {
  Json j;
  j["variables"] = sys.variables;
  j["constraints"] = Json::array();
  for (const auto& row : sys.constraints) {
    Json r;
    r["coeffs"] = Json::object();
    for (const auto& v : sys.variables) {
      auto it = row.coeffs.find(v);
      if (it != row.coeffs.end() && sgn(it->second) != 0) r["coeffs"][v] = to_string(it->second);
    }
    r["relation"] = relation_token(row.relation);
    r["rhs"] = to_string(row.rhs);
    j["constraints"].push_back(std::move(r));
  }
  return j;
}

LinearSystem system_from_json(const Json& j) {
  LinearSystem sys;
  for (const auto& v : j.at("variables")) {
    std::string name = v.get<std::string>();
    if (name.empty() || sys.has_variable(name))
      throw std::invalid_argument("bad variable list in JSON system");
    sys.variables.push_back(name);
  }
  for (const auto& r : j.at("constraints")) {
    Constraint row;
    for (const auto& [name, value] : r.at("coeffs").items()) {
      if (!sys.has_variable(name))
        throw std::invalid_argument("coefficient for unknown variable '" + name + "'");
      row.coeffs[name] = rat_from_string(value.get<std::string>());
    }
    if (row.coeffs.empty()) throw std::invalid_argument("constraint with no variables");
    row.relation = relation_from_token(r.at("relation").get<std::string>());
    row.rhs = rat_from_string(r.at("rhs").get<std::string>());
    sys.constraints.push_back(std::move(row));
  }
  return sys;
}

Json certify_report(const std::vector<Rat>& scalars) {
  CertificatePoly cert = build_certificate(scalars);
  Rat gamma = certificate_gamma(scalars);
  bool trivial = is_trivial_via_certificate(scalars);

  Json j;
  j["n"] = scalars.size();
  j["scalars"] = Json::array();
  for (const auto& x : scalars) j["scalars"].push_back(to_string(x));
  j["numerator"] = cert.numerator.str();
  j["denominator"] = cert.denominator.str();
  j["b_coeffs"] = Json::array();
  for (const auto& b : cert.b_coeffs) j["b_coeffs"].push_back(to_string(b));
  j["gamma"] = to_string(gamma);
  j["sample_k"] = to_string(Rat(gamma + 1));
  j["trivial"] = trivial;
  return j;
}

Json omega_report(int n) {
  OmegaMatrix omega = build_omega(n);
  OmegaChain chain = reduce_omega_chain(omega);
  Json j;
  j["n"] = n;
  j["levels"] = Json::array();
  for (const auto& level : chain.levels) {
    Json rows = Json::array();
    for (const auto& row : level.entries) {
      Json cells = Json::array();
      for (const auto& cell : row) cells.push_back(to_string(cell));
      rows.push_back(std::move(cells));
    }
    j["levels"].push_back(Json{{"level", level.level}, {"dim", level.dim()}, {"entries", rows}});
  }
  j["terminal"] = to_string(chain.terminal);
  j["determinant"] = omega_det(omega).get_str();
  j["determinant_nonzero"] = omega_det_nonzero(omega);
  return j;
}

Json solve_asym_report(const LinearSystem& sys, long pivot_limit) {
  AsymSystem asym = strict_to_nonstrict(normalize(sys));
  FeasibilityVerdict verdict = asym_feasible(asym, pivot_limit);
  Rat sample_k = verdict.threshold + 1;
  FixedKVerdict oracle = feasible_at(asym, sample_k, pivot_limit);

  Json j;
  j["variables"] = asym.variables;
  j["feasible"] = verdict.feasible;
  j["pivots"] = verdict.pivots;
  j["threshold"] = to_string(verdict.threshold);
  if (verdict.feasible) j["witness"] = witness_json(verdict.witness);
  j["oracle"] = Json{{"k0", to_string(sample_k)},
                     {"feasible", oracle.feasible},
                     {"agree", oracle.feasible == verdict.feasible}};
  return j;
}

Json decision_report(const LinearSystem& sys, const SubsetQuery& subset,
                     const AsymDecision& decision) {
  Json j;
  j["subset"] = subset.names;
  j["part1_feasible"] = decision.part1_feasible;
  if (decision.part2_nontrivial.has_value())
    j["part2_nontrivial"] = *decision.part2_nontrivial;
  else
    j["part2_nontrivial"] = nullptr;

  auto branch_json = [](const FeasibilityVerdict& v) {
    Json b;
    b["feasible"] = v.feasible;
    b["pivots"] = v.pivots;
    b["threshold"] = to_string(v.threshold);
    if (v.feasible) b["witness"] = witness_json(v.witness);
    return b;
  };
  j["part1"] = branch_json(decision.part1);
  if (decision.part1_feasible) {
    j["branch_positive"] = branch_json(decision.branch_positive);
    j["branch_negative"] = branch_json(decision.branch_negative);
  }
  j["oracle_samples"] = Json::array();
  for (const auto& s : decision.oracle_samples)
    j["oracle_samples"].push_back(
        Json{{"k0", to_string(s.k0)}, {"stage", s.stage}, {"agree", s.agree}});
  return j;
}

Json audit_report_json(const AuditReport& report) {
  Json j;
  j["passed"] = report.passed;
  j["findings"] = Json::array();
  for (const auto& f : report.findings)
    j["findings"].push_back(Json{{"stage", f.stage}, {"detail", f.detail}});
  return j;
}

}  // namespace asymcert
