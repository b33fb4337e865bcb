#include "linsys.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace asymcert {

std::string relation_token(Relation r) {
  switch (r) {
    case Relation::LE: return "<=";
    case Relation::LT: return "<";
    case Relation::GE: return ">=";
    case Relation::GT: return ">";
    case Relation::EQ: return "=";
  }
  return "?";
}

bool LinearSystem::has_variable(const std::string& name) const {
  return std::find(variables.begin(), variables.end(), name) != variables.end();
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                         ": " + msg),
      line(line),
      column(column) {}

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  int col() const { return static_cast<int>(pos) + 1; }
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_name(Cursor& cur) {
  size_t start = cur.pos;
  while (!cur.done() && is_name_char(cur.text[cur.pos])) ++cur.pos;
  return cur.text.substr(start, cur.pos - start);
}

// digits [/ digits]; sign is handled by the caller.
Rat read_rational(Cursor& cur) {
  size_t start = cur.pos;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
  if (cur.pos == start) throw ParseError("expected a number", cur.line, cur.col());
  if (cur.peek() == '/') {
    ++cur.pos;
    size_t den_start = cur.pos;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
    if (cur.pos == den_start) throw ParseError("expected a denominator", cur.line, cur.col());
  }
  return rat_from_string(cur.text.substr(start, cur.pos - start));
}

Relation read_relation(Cursor& cur) {
  char c = cur.peek();
  if (c == '<') {
    ++cur.pos;
    if (cur.peek() == '=') { ++cur.pos; return Relation::LE; }
    return Relation::LT;
  }
  if (c == '>') {
    ++cur.pos;
    if (cur.peek() == '=') { ++cur.pos; return Relation::GE; }
    return Relation::GT;
  }
  if (c == '=') { ++cur.pos; return Relation::EQ; }
  throw ParseError("expected a relation (<=, <, >=, >, =)", cur.line, cur.col());
}

void note_variable(LinearSystem& sys, const std::string& name, bool vars_fixed, Cursor& cur) {
  if (sys.has_variable(name)) return;
  if (vars_fixed)
    throw ParseError("variable '" + name + "' not in the vars: header", cur.line, cur.col());
  sys.variables.push_back(name);
}

Constraint parse_constraint(const std::string& line_text, int line_no, LinearSystem& sys,
                            bool vars_fixed) {
  Cursor cur{line_text, 0, line_no};
  Constraint row;
  bool seen_relation = false;
  bool expect_term = true;
  int pending_sign = 1;
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    char c = cur.peek();
    if (!seen_relation && (c == '<' || c == '>' || c == '=')) {
      if (expect_term) throw ParseError("expected a term before the relation", cur.line, cur.col());
      row.relation = read_relation(cur);
      cur.skip_ws();
      int rhs_sign = 1;
      if (cur.peek() == '-') { rhs_sign = -1; ++cur.pos; cur.skip_ws(); }
      else if (cur.peek() == '+') { ++cur.pos; cur.skip_ws(); }
      if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
        throw ParseError("expected a rational right-hand side", cur.line, cur.col());
      row.rhs = read_rational(cur) * rhs_sign;
      seen_relation = true;
      cur.skip_ws();
      if (!cur.done()) throw ParseError("trailing text after right-hand side", cur.line, cur.col());
      break;
    }
    if (c == '+' || c == '-') {
      if (expect_term && !row.coeffs.empty())
        throw ParseError("unexpected sign", cur.line, cur.col());
      if (expect_term && pending_sign != 1)
        throw ParseError("doubled sign", cur.line, cur.col());
      pending_sign = (c == '-') ? -1 : 1;
      ++cur.pos;
      expect_term = true;
      continue;
    }
    // A term: [rational ['*']] name, or a bare name.
    Rat coeff(1);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = read_rational(cur);
      cur.skip_ws();
      if (cur.peek() == '*') { ++cur.pos; cur.skip_ws(); }
    }
    if (!is_name_start(cur.peek()))
      throw ParseError("expected a variable name", cur.line, cur.col());
    std::string name = read_name(cur);
    note_variable(sys, name, vars_fixed, cur);
    row.coeffs[name] += coeff * pending_sign;
    pending_sign = 1;
    expect_term = false;
  }
  if (!seen_relation) throw ParseError("constraint has no relation", line_no, cur.col());
  if (row.coeffs.empty()) throw ParseError("constraint has no variables", line_no, 1);
  return row;
}

}  // namespace

LinearSystem parse_system(const std::string& text) {
  LinearSystem sys;
  bool vars_fixed = false;
  std::istringstream in(text);
  std::string line_text;
  int line_no = 0;
  while (std::getline(in, line_text)) {
    ++line_no;
    if (auto hash = line_text.find('#'); hash != std::string::npos) line_text.erase(hash);
    std::string stripped = line_text;
    stripped.erase(0, stripped.find_first_not_of(" \t\r"));
    stripped.erase(stripped.find_last_not_of(" \t\r") + 1);
    if (stripped.empty()) continue;
    if (stripped.rfind("vars:", 0) == 0) {
      if (vars_fixed || !sys.constraints.empty() || !sys.variables.empty())
        throw ParseError("vars: header must come first", line_no, 1);
      Cursor cur{stripped, 5, line_no};
      while (true) {
        cur.skip_ws();
        if (cur.done()) break;
        if (!is_name_start(cur.peek()))
          throw ParseError("expected a variable name", line_no, cur.col());
        std::string name = read_name(cur);
        if (sys.has_variable(name))
          throw ParseError("duplicate variable '" + name + "'", line_no, cur.col());
        sys.variables.push_back(name);
      }
      if (sys.variables.empty()) throw ParseError("empty vars: header", line_no, 1);
      vars_fixed = true;
      continue;
    }
    sys.constraints.push_back(parse_constraint(stripped, line_no, sys, vars_fixed));
  }
  return sys;
}

std::string print_system(const LinearSystem& sys) {
  std::ostringstream out;
  out << "vars:";
  for (const auto& v : sys.variables) out << " " << v;
  out << "\n";
  for (const auto& row : sys.constraints) {
    bool first = true;
    for (const auto& v : sys.variables) {
      auto it = row.coeffs.find(v);
      if (it == row.coeffs.end() || sgn(it->second) == 0) continue;
      Rat mag = abs(it->second);
      if (first) {
        if (sgn(it->second) < 0) out << "-";
        first = false;
      } else {
        out << (sgn(it->second) < 0 ? " - " : " + ");
      }
      if (mag != 1) out << mag.get_str() << " ";
      out << v;
    }
    out << " " << relation_token(row.relation) << " " << row.rhs.get_str() << "\n";
  }
  return out.str();
}

LinearSystem normalize(const LinearSystem& sys) {
  LinearSystem out;
  out.variables = sys.variables;
  auto negated = [](const Constraint& row, Relation rel) {
    Constraint flipped;
    flipped.relation = rel;
    flipped.rhs = -row.rhs;
    for (const auto& [name, c] : row.coeffs) flipped.coeffs[name] = -c;
    return flipped;
  };
  for (const auto& row : sys.constraints) {
    switch (row.relation) {
      case Relation::LE:
      case Relation::LT:
        out.constraints.push_back(row);
        break;
      case Relation::GE:
        out.constraints.push_back(negated(row, Relation::LE));
        break;
      case Relation::GT:
        out.constraints.push_back(negated(row, Relation::LT));
        break;
      case Relation::EQ: {
        Constraint le = row;
        le.relation = Relation::LE;
        out.constraints.push_back(le);
        out.constraints.push_back(negated(row, Relation::LE));
        break;
      }
    }
  }
  return out;
}

bool satisfies(const LinearSystem& sys, const std::map<std::string, Rat>& point) {
  for (const auto& row : sys.constraints) {
    Rat lhs = 0;
    for (const auto& [name, c] : row.coeffs) {
      auto it = point.find(name);
      if (it != point.end()) lhs += c * it->second;
    }
    bool ok = false;
    switch (row.relation) {
      case Relation::LE: ok = lhs <= row.rhs; break;
      case Relation::LT: ok = lhs < row.rhs; break;
      case Relation::GE: ok = lhs >= row.rhs; break;
      case Relation::GT: ok = lhs > row.rhs; break;
      case Relation::EQ: ok = lhs == row.rhs; break;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace asymcert
