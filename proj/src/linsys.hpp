#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace asymcert {

enum class Relation { LE, LT, GE, GT, EQ };

std::string relation_token(Relation r);

struct Constraint {
  std::map<std::string, Rat> coeffs;
  Relation relation = Relation::LE;
  Rat rhs;
};

// The source system: named real variables under {<=, <, >=, >, =} rows.
// Variable order is first-appearance order unless fixed by a vars: header.
struct LinearSystem {
  std::vector<std::string> variables;
  std::vector<Constraint> constraints;

  bool has_variable(const std::string& name) const;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column);
  int line;
  int column;
};

// One constraint per line: `<term> (+|- <term>)* <rel> <rational>`; a term is
// an optional rational coefficient (with optional `*`) followed by a variable
// name. `#` starts a comment; an optional first line `vars: y1 y2 ...` fixes
// the variable order.
LinearSystem parse_system(const std::string& text);

// Inverse of parse_system on normalized systems.
std::string print_system(const LinearSystem& sys);

// Rewrites every row to LE or LT: GE/GT are negated, EQ becomes an
// {LE, GE} pair before negation. The feasible set is unchanged.
LinearSystem normalize(const LinearSystem& sys);

// Exact check of a candidate point against every row.
bool satisfies(const LinearSystem& sys, const std::map<std::string, Rat>& point);

}  // namespace asymcert
