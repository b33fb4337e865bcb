#include "transform.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace asymcert {

LinearSystem AsymSystem::specialize(const Rat& k0) const {
  LinearSystem out;
  out.variables = variables;
  for (const auto& row : constraints) {
    Constraint c;
    c.relation = Relation::LE;
    c.rhs = row.rhs.eval(k0);
    for (const auto& [name, p] : row.coeffs) {
      Rat v = p.eval(k0);
      if (sgn(v) != 0) c.coeffs[name] = v;
    }
    if (c.coeffs.empty()) {
      // Row degenerated to 0 <= rhs; keep it on a dummy of the first variable
      // so the specialized system still rejects an infeasible constant row.
      if (sgn(c.rhs) < 0 && !variables.empty()) c.coeffs[variables.front()] = 0;
      if (c.coeffs.empty()) continue;
    }
    out.constraints.push_back(c);
  }
  return out;
}

namespace {

std::string fresh_name(const std::vector<std::string>& taken, std::string candidate) {
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) candidate += "_";
  return candidate;
}

AsymConstraint lift(const Constraint& row) {
  AsymConstraint out;
  out.rhs = Poly(row.rhs);
  for (const auto& [name, c] : row.coeffs)
    if (sgn(c) != 0) out.coeffs[name] = Poly(c);
  return out;
}

}  // namespace

AsymSystem strict_to_nonstrict(const LinearSystem& sys) {
  for (const auto& row : sys.constraints)
    if (row.relation != Relation::LE && row.relation != Relation::LT)
      throw std::invalid_argument("system must be normalized to LE/LT rows first");

  AsymSystem out;
  out.variables = sys.variables;
  bool any_strict = std::any_of(sys.constraints.begin(), sys.constraints.end(),
                                [](const Constraint& r) { return r.relation == Relation::LT; });
  std::string e_name;
  if (any_strict) {
    e_name = fresh_name(out.variables, "e");
    out.variables.push_back(e_name);
    out.slack_name = e_name;
  }
  for (const auto& row : sys.constraints) {
    AsymConstraint lifted = lift(row);
    if (row.relation == Relation::LT) lifted.coeffs[e_name] = Poly(Rat(1));  // lhs + e <= d
    out.constraints.push_back(std::move(lifted));
  }
  if (any_strict) {
    // K*e >= 1, stored as -K*e <= -1.
    AsymConstraint gadget;
    gadget.coeffs[e_name] = -Poly::k();
    gadget.rhs = Poly(Rat(-1));
    out.constraints.push_back(std::move(gadget));
  }
  return out;
}

CertSystem add_certificate_constraint(const LinearSystem& sys,
                                      const std::vector<std::string>& subset, CertSign sign) {
  if (subset.empty()) throw std::invalid_argument("subset must be non-empty");
  std::set<std::string> seen;
  for (const auto& name : subset) {
    if (!sys.has_variable(name))
      throw std::invalid_argument("unknown variable in subset: '" + name + "'");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate variable in subset: '" + name + "'");
  }
  return CertSystem{sys, subset, sign};
}

AsymSystem scale_certificate_vars(const CertSystem& cert) {
  const LinearSystem& base = cert.base;
  // Offset for each subset variable: position 1..|subset|.
  std::map<std::string, long> offsets;
  for (size_t m = 0; m < cert.subset.size(); ++m)
    offsets[cert.subset[m]] = static_cast<long>(m) + 1;

  // Rename scaled variables y -> z_y and substitute y = (K+k) z everywhere.
  LinearSystem renamed;
  std::map<std::string, Substitution> subs;
  std::map<std::string, std::string> z_of;
  for (const auto& v : base.variables) {
    auto it = offsets.find(v);
    if (it == offsets.end()) {
      renamed.variables.push_back(v);
      continue;
    }
    std::vector<std::string> taken = base.variables;
    taken.insert(taken.end(), renamed.variables.begin(), renamed.variables.end());
    std::string z = fresh_name(taken, "z_" + v);
    renamed.variables.push_back(z);
    z_of[v] = z;
    subs[z] = Substitution{v, it->second};
  }

  AsymSystem out;
  out.variables = renamed.variables;
  out.substitutions = std::move(subs);

  // Certificate row: after substitution, sum z_j > 0 (or < 0) -> strict LT form.
  Constraint cert_row;
  cert_row.relation = Relation::LT;
  cert_row.rhs = 0;
  for (const auto& y : cert.subset)
    cert_row.coeffs[z_of[y]] = (cert.sign == CertSign::positive) ? Rat(-1) : Rat(1);

  // The certificate row itself is strict, so the shared e always appears here.
  std::string e_name = fresh_name(renamed.variables, "e");
  out.variables.push_back(e_name);
  out.slack_name = e_name;

  auto lift_substituted = [&](const Constraint& row) {
    AsymConstraint lifted;
    lifted.rhs = Poly(row.rhs);
    for (const auto& [name, c] : row.coeffs) {
      if (sgn(c) == 0) continue;
      auto it = offsets.find(name);
      if (it == offsets.end())
        lifted.coeffs[name] = Poly(c);
      else
        lifted.coeffs[z_of[name]] = Poly::k_plus(it->second) * c;
    }
    return lifted;
  };

  for (const auto& row : base.constraints) {
    AsymConstraint lifted = lift_substituted(row);
    if (row.relation == Relation::LT) lifted.coeffs[e_name] = Poly(Rat(1));
    out.constraints.push_back(std::move(lifted));
  }
  // Certificate row is already in z variables; apply the same gadget.
  {
    AsymConstraint lifted = lift(cert_row);
    lifted.coeffs[e_name] = Poly(Rat(1));
    out.constraints.push_back(std::move(lifted));
  }
  {
    AsymConstraint gadget;
    gadget.coeffs[e_name] = -Poly::k();
    gadget.rhs = Poly(Rat(-1));
    out.constraints.push_back(std::move(gadget));
  }
  return out;
}

std::string print_system(const AsymSystem& sys) {
  std::ostringstream out;
  out << "vars:";
  for (const auto& v : sys.variables) out << " " << v;
  out << "\n";
  for (const auto& row : sys.constraints) {
    bool first = true;
    for (const auto& v : sys.variables) {
      auto it = row.coeffs.find(v);
      if (it == row.coeffs.end() || it->second.is_zero()) continue;
      if (!first) out << " + ";
      out << "(" << it->second.str() << ")*" << v;
      first = false;
    }
    if (first) out << "0";
    out << " <= " << row.rhs.str() << "\n";
  }
  return out.str();
}

std::map<std::string, Rat> pull_back(const AsymSystem& sys,
                                     const std::map<std::string, Rat>& point, const Rat& k0) {
  std::map<std::string, Rat> out;
  for (const auto& [name, value] : point) {
    if (sys.slack_name && name == *sys.slack_name) continue;
    auto it = sys.substitutions.find(name);
    if (it == sys.substitutions.end())
      out[name] = value;
    else
      out[it->second.source] = value * (k0 + it->second.offset);
  }
  return out;
}

}  // namespace asymcert
