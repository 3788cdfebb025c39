// Copyright 2026 the flpgame authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLP_LP_HPP
#define FLP_LP_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "flp/rational.hpp"

namespace flp {

enum class RowSense { LessEq, Equal, GreaterEq };
enum class ObjSense { Maximize, Minimize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct MalformedProgram : FlpError {
  using FlpError::FlpError;
};

/// Simplex did not terminate within the pivot cap (float mode cycling).
struct NumericFailure : FlpError {
  using FlpError::FlpError;
};

/// A linear program over nonnegative variables. Treated as immutable once
/// built; safe to share across concurrent solves.
template <class T>
struct LinearProgram {
  std::size_t num_vars = 0;
  ObjSense sense = ObjSense::Maximize;
  Vec<T> objective;               // length num_vars
  Mat<T> rows;                    // num_constraints x num_vars
  Vec<T> rhs;                     // length num_constraints
  std::vector<RowSense> senses;   // length num_constraints

  std::size_t num_constraints() const { return rows.size(); }
};

template <class T>
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Vec<T>> primal_solution;
  std::optional<T> objective_value;
  std::optional<Vec<T>> dual_solution;  // one multiplier per constraint
};

template <class T>
struct FeasibilityReport {
  bool feasible = false;
  std::vector<std::size_t> violated_rows;
  std::vector<std::size_t> negative_vars;
};

namespace detail {

inline constexpr std::size_t kPivotCap = 10000;

template <class T>
void validate_program(const LinearProgram<T>& lp) {
  if (lp.num_vars == 0) throw MalformedProgram("program has no variables");
  if (lp.objective.size() != lp.num_vars)
    throw MalformedProgram("objective length does not match num_vars");
  if (lp.rhs.size() != lp.rows.size() || lp.senses.size() != lp.rows.size())
    throw MalformedProgram("rhs/senses length does not match row count");
  for (const auto& row : lp.rows)
    if (row.size() != lp.num_vars)
      throw MalformedProgram("row length does not match num_vars");
}

/// Dense two-phase simplex with Bland's rule. Exact when T is rational.
template <class T>
class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram<T>& lp)
      : n_(lp.num_vars), m_(lp.rows.size()), maximize_(lp.sense == ObjSense::Maximize) {
    obj_ = lp.objective;
    if (!maximize_)
      for (auto& c : obj_) c = -c;

    std::vector<RowSense> senses = lp.senses;
    Mat<T> rows = lp.rows;
    b_ = lp.rhs;
    flipped_.assign(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      if (is_negative(b_[i])) {
        for (auto& a : rows[i]) a = -a;
        b_[i] = -b_[i];
        if (senses[i] == RowSense::LessEq)
          senses[i] = RowSense::GreaterEq;
        else if (senses[i] == RowSense::GreaterEq)
          senses[i] = RowSense::LessEq;
        flipped_[i] = true;
      }
    }

    std::size_t slacks = 0, arts = 0;
    for (auto s : senses) {
      if (s != RowSense::Equal) ++slacks;
      if (s != RowSense::LessEq) ++arts;
    }
    ncols_ = n_ + slacks + arts;
    first_art_ = ncols_ - arts;
    tab_.assign(m_, Vec<T>(ncols_, T(0)));
    basis_.assign(m_, 0);
    id_col_.assign(m_, 0);
    artificial_.assign(ncols_, false);

    std::size_t slack_at = n_, art_at = first_art_;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = rows[i][j];
      switch (senses[i]) {
        case RowSense::LessEq:
          tab_[i][slack_at] = T(1);
          basis_[i] = id_col_[i] = slack_at++;
          break;
        case RowSense::GreaterEq:
          tab_[i][slack_at++] = T(-1);
          tab_[i][art_at] = T(1);
          basis_[i] = id_col_[i] = art_at;
          artificial_[art_at++] = true;
          break;
        case RowSense::Equal:
          tab_[i][art_at] = T(1);
          basis_[i] = id_col_[i] = art_at;
          artificial_[art_at++] = true;
          break;
      }
    }
  }

  LpOutcome<T> run() {
    if (first_art_ < ncols_) {
      Vec<T> phase1(ncols_, T(0));
      for (std::size_t j = first_art_; j < ncols_; ++j) phase1[j] = T(-1);
      iterate(phase1, false);
      T infeas(0);
      for (std::size_t i = 0; i < m_; ++i)
        if (artificial_[basis_[i]]) infeas += b_[i];
      if (is_positive(infeas)) return LpOutcome<T>{LpStatus::Infeasible, {}, {}, {}};
      drive_out_artificials();
    }

    Vec<T> phase2(ncols_, T(0));
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = obj_[j];
    if (iterate(phase2, true) == LpStatus::Unbounded)
      return LpOutcome<T>{LpStatus::Unbounded, {}, {}, {}};

    LpOutcome<T> out;
    out.status = LpStatus::Optimal;
    Vec<T> x(n_, T(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = b_[i];
    T value = dot(obj_, x);
    Vec<T> y(m_, T(0));
    for (std::size_t i = 0; i < m_; ++i) {
      T z(0);
      for (std::size_t r = 0; r < m_; ++r)
        if (basis_[r] < n_) z += obj_[basis_[r]] * tab_[r][id_col_[i]];
      if (flipped_[i]) z = -z;
      y[i] = maximize_ ? z : -z;
    }
    out.primal_solution = std::move(x);
    out.objective_value = maximize_ ? value : -value;
    out.dual_solution = std::move(y);
    return out;
  }

 private:
  LpStatus iterate(const Vec<T>& cost, bool block_artificials) {
    while (true) {
      if (++pivots_ > kPivotCap)
        throw NumericFailure("simplex pivot cap exceeded");
      // Bland: lowest-index column with positive reduced cost enters.
      std::size_t enter = ncols_;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (block_artificials && artificial_[j]) continue;
        T red = cost[j];
        for (std::size_t i = 0; i < m_; ++i) red -= cost[basis_[i]] * tab_[i][j];
        if (is_positive(red)) {
          enter = j;
          break;
        }
      }
      if (enter == ncols_) return LpStatus::Optimal;

      std::size_t leave = m_;
      T best(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (!is_positive(tab_[i][enter])) continue;
        T ratio = b_[i] / tab_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!artificial_[basis_[i]]) continue;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (!is_zero(tab_[i][j])) {
          pivot(i, j);
          break;
        }
      }
      // A row with no eligible column is redundant; its artificial stays
      // basic at zero and is blocked from re-entering.
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const T piv = tab_[r][c];
    for (auto& a : tab_[r]) a /= piv;
    b_[r] /= piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || is_zero(tab_[i][c])) continue;
      const T f = tab_[i][c];
      for (std::size_t j = 0; j < ncols_; ++j) tab_[i][j] -= f * tab_[r][j];
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  std::size_t n_, m_, ncols_ = 0, first_art_ = 0, pivots_ = 0;
  bool maximize_;
  Vec<T> obj_, b_;
  Mat<T> tab_;
  std::vector<std::size_t> basis_, id_col_;
  std::vector<bool> flipped_;
  std::vector<bool> artificial_;
};

}  // namespace detail

/// Solves the program; when Optimal the primal is a basic feasible (vertex)
/// solution and the dual comes from the same optimal basis.
template <class T>
LpOutcome<T> solve(const LinearProgram<T>& lp) {
  detail::validate_program(lp);
  detail::SimplexSolver<T> solver(lp);
  return solver.run();
}

template <class T>
FeasibilityReport<T> check_feasible(const LinearProgram<T>& lp, const Vec<T>& point) {
  detail::validate_program(lp);
  if (point.size() != lp.num_vars)
    throw MalformedProgram("point length does not match num_vars");
  FeasibilityReport<T> rep;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const T lhs = dot(lp.rows[i], point);
    const bool ok = lp.senses[i] == RowSense::LessEq ? !detail::is_positive(T(lhs - lp.rhs[i]))
                    : lp.senses[i] == RowSense::GreaterEq
                        ? !detail::is_negative(T(lhs - lp.rhs[i]))
                        : detail::is_zero(T(lhs - lp.rhs[i]));
    if (!ok) rep.violated_rows.push_back(i);
  }
  for (std::size_t j = 0; j < point.size(); ++j)
    if (detail::is_negative(point[j])) rep.negative_vars.push_back(j);
  rep.feasible = rep.violated_rows.empty() && rep.negative_vars.empty();
  return rep;
}

/// Standard LP dual: max-<= programs map to min->= and back, so applying
/// dual_of twice reproduces an equivalent program.
template <class T>
LinearProgram<T> dual_of(const LinearProgram<T>& lp) {
  detail::validate_program(lp);
  const bool primal_max = lp.sense == ObjSense::Maximize;
  const RowSense expected = primal_max ? RowSense::LessEq : RowSense::GreaterEq;
  for (auto s : lp.senses)
    if (s != expected)
      throw MalformedProgram("dual_of expects max-<= or min->= form");

  LinearProgram<T> dual;
  dual.num_vars = lp.rows.size();
  dual.sense = primal_max ? ObjSense::Minimize : ObjSense::Maximize;
  dual.objective = lp.rhs;
  dual.rows.assign(lp.num_vars, Vec<T>(dual.num_vars, T(0)));
  for (std::size_t i = 0; i < lp.rows.size(); ++i)
    for (std::size_t j = 0; j < lp.num_vars; ++j) dual.rows[j][i] = lp.rows[i][j];
  dual.rhs = lp.objective;
  dual.senses.assign(lp.num_vars, primal_max ? RowSense::GreaterEq : RowSense::LessEq);
  return dual;
}

}  // namespace flp

#endif  // FLP_LP_HPP
