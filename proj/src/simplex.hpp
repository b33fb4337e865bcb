#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace asymcert {

struct PivotLimitError : std::runtime_error {
  explicit PivotLimitError(long limit)
      : std::runtime_error("simplex pivot ceiling of " + std::to_string(limit) + " exceeded") {}
};

// Phase-1 simplex over any ordered field: decides feasibility of A x <= b
// with free variables. Field needs +, -, *, /, default construction to zero
// and construction from int; every order decision goes through the supplied
// sign functor, so running the same input over two fields whose sign
// functions agree reproduces the same pivot path (Bland's rule is
// deterministic given signs).
template <class Field, class SignFn>
class PhaseOneSimplex {
 public:
  struct Result {
    bool feasible = false;
    long pivots = 0;
    std::vector<Field> witness;  // one value per original variable, if feasible
  };

  PhaseOneSimplex(std::vector<std::vector<Field>> lhs, std::vector<Field> rhs, SignFn sign,
                  long pivot_limit)
      : lhs_(std::move(lhs)), rhs_(std::move(rhs)), sign_(std::move(sign)),
        pivot_limit_(pivot_limit) {}

  Result solve() {
    const int nvar = lhs_.empty() ? 0 : static_cast<int>(lhs_[0].size());
    Result result;

    // Constant rows 0 <= b never enter the tableau.
    std::vector<int> live;
    for (size_t i = 0; i < lhs_.size(); ++i) {
      bool all_zero = true;
      for (const Field& a : lhs_[i])
        if (sign_(a) != 0) { all_zero = false; break; }
      if (all_zero) {
        if (sign_(rhs_[i]) < 0) return result;  // 0 <= negative: infeasible
      } else {
        live.push_back(static_cast<int>(i));
      }
    }
    const int m = static_cast<int>(live.size());
    if (m == 0) {
      result.feasible = true;
      result.witness.assign(nvar, Field(0));
      return result;
    }

    // Free variables split as x = p - n; slack per row; artificial on rows
    // whose rhs had to be flipped negative-to-positive.
    const int split = 2 * nvar;
    std::vector<bool> flipped(m, false);
    int n_art = 0;
    for (int i = 0; i < m; ++i) {
      flipped[i] = sign_(rhs_[live[i]]) < 0;
      if (flipped[i]) ++n_art;
    }
    const int ncols = split + m + n_art;
    tab_.assign(m, std::vector<Field>(ncols + 1, Field(0)));
    basis_.assign(m, -1);
    int art_col = split + m;
    for (int i = 0; i < m; ++i) {
      const auto& row = lhs_[live[i]];
      for (int j = 0; j < nvar; ++j) {
        Field a = flipped[i] ? Field(0) - row[j] : row[j];
        tab_[i][2 * j] = a;
        tab_[i][2 * j + 1] = Field(0) - a;
      }
      tab_[i][split + i] = flipped[i] ? Field(-1) : Field(1);
      if (flipped[i]) {
        tab_[i][art_col] = Field(1);
        basis_[i] = art_col++;
      } else {
        basis_[i] = split + i;
      }
      tab_[i][ncols] = flipped[i] ? Field(0) - rhs_[live[i]] : rhs_[live[i]];
    }

    // Reduced-cost row for minimizing the artificial sum, priced out over the
    // artificial basic rows: obj[j] = sum of those rows minus the cost.
    std::vector<Field> obj(ncols + 1, Field(0));
    for (int i = 0; i < m; ++i)
      if (basis_[i] >= split + m)
        for (int j = 0; j <= ncols; ++j) obj[j] = obj[j] + tab_[i][j];
    for (int j = split + m; j < ncols; ++j) obj[j] = obj[j] - Field(1);

    while (true) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j)
        if (sign_(obj[j]) > 0) { enter = j; break; }
      if (enter < 0) break;

      int leave = -1;
      for (int i = 0; i < m; ++i) {
        if (sign_(tab_[i][enter]) <= 0) continue;
        if (leave < 0) { leave = i; continue; }
        // Compare rhs_i/a_i against the incumbent by cross-multiplication
        // (both pivots positive); Bland tie-break on basic variable index.
        Field diff = tab_[i][ncols] * tab_[leave][enter] - tab_[leave][ncols] * tab_[i][enter];
        int s = sign_(diff);
        if (s < 0 || (s == 0 && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave < 0) break;  // unbounded in phase 1 cannot happen; treated as optimal

      pivot(leave, enter, obj, ncols);
      if (++result.pivots > pivot_limit_) throw PivotLimitError(pivot_limit_);
    }

    // Feasible iff the artificial sum is zero: priced-out objective keeps the
    // current value in the rhs slot.
    result.feasible = sign_(obj[ncols]) == 0;
    if (result.feasible) {
      std::vector<Field> col_value(ncols, Field(0));
      for (int i = 0; i < m; ++i) col_value[basis_[i]] = tab_[i][ncols];
      result.witness.reserve(nvar);
      for (int j = 0; j < nvar; ++j)
        result.witness.push_back(col_value[2 * j] - col_value[2 * j + 1]);
    }
    return result;
  }

 private:
  void pivot(int leave, int enter, std::vector<Field>& obj, int ncols) {
    const int m = static_cast<int>(tab_.size());
    Field p = tab_[leave][enter];
    for (int j = 0; j <= ncols; ++j) tab_[leave][j] = tab_[leave][j] / p;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      Field f = tab_[i][enter];
      if (sign_(f) == 0) continue;
      for (int j = 0; j <= ncols; ++j) tab_[i][j] = tab_[i][j] - f * tab_[leave][j];
    }
    Field f = obj[enter];
    if (sign_(f) != 0)
      for (int j = 0; j <= ncols; ++j) obj[j] = obj[j] - f * tab_[leave][j];
    basis_[leave] = enter;
  }

  std::vector<std::vector<Field>> lhs_;
  std::vector<Field> rhs_;
  SignFn sign_;
  long pivot_limit_;
  std::vector<std::vector<Field>> tab_;
  std::vector<int> basis_;
};

}  // namespace asymcert
