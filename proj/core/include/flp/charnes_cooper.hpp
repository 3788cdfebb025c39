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

#ifndef FLP_CHARNES_COOPER_HPP
#define FLP_CHARNES_COOPER_HPP

#include <cstddef>
#include <utility>

#include "flp/lp.hpp"
#include "flp/rational.hpp"

namespace flp {

struct InfeasibleRegion : FlpError {
  using FlpError::FlpError;
};
struct UnboundedRegion : FlpError {
  using FlpError::FlpError;
};
struct DenominatorNotPositive : FlpError {
  using FlpError::FlpError;
};
struct ZeroScale : FlpError {
  using FlpError::FlpError;
};

/// One ratio objective (c x + c0) / (d x + d0).
template <class T>
struct FractionalObjective {
  Vec<T> numerator_coeffs;    // c
  T numerator_const{};        // c0
  Vec<T> denominator_coeffs;  // d
  T denominator_const{};      // d0

  std::size_t dimension() const { return numerator_coeffs.size(); }
  T numerator_at(const Vec<T>& x) const { return dot(numerator_coeffs, x) + numerator_const; }
  T denominator_at(const Vec<T>& x) const {
    return dot(denominator_coeffs, x) + denominator_const;
  }
  T value_at(const Vec<T>& x) const { return numerator_at(x) / denominator_at(x); }
};

/// Maximize a ratio objective over {A x <= b, x >= 0}.
template <class T>
struct FractionalProgram {
  FractionalObjective<T> objective;
  Mat<T> technology;  // A, m x p
  Vec<T> rhs;         // b

  std::size_t dimension() const { return objective.dimension(); }
};

namespace detail {

template <class T>
void validate_fractional(const FractionalProgram<T>& fp) {
  const std::size_t p = fp.objective.dimension();
  if (p == 0) throw MalformedProgram("fractional program has no variables");
  if (fp.objective.denominator_coeffs.size() != p)
    throw MalformedProgram("numerator/denominator dimension mismatch");
  if (fp.rhs.size() != fp.technology.size())
    throw MalformedProgram("rhs length does not match row count");
  for (const auto& row : fp.technology)
    if (row.size() != p) throw MalformedProgram("technology row length mismatch");
}

/// LP over the untransformed region with a caller-supplied objective.
template <class T>
LinearProgram<T> region_program(const FractionalProgram<T>& fp, Vec<T> objective,
                                ObjSense sense) {
  LinearProgram<T> lp;
  lp.num_vars = fp.dimension();
  lp.sense = sense;
  lp.objective = std::move(objective);
  lp.rows = fp.technology;
  lp.rhs = fp.rhs;
  lp.senses.assign(fp.technology.size(), RowSense::LessEq);
  return lp;
}

/// Region status probe: maximizing the coordinate sum over a subset of
/// R+^p is bounded exactly when the region is.
template <class T>
LpOutcome<T> probe_region(const FractionalProgram<T>& fp) {
  return solve(region_program(fp, Vec<T>(fp.dimension(), T(1)), ObjSense::Maximize));
}

}  // namespace detail

/// The substitution y = t x, t = 1/(d x + d0): variables (y_1..y_p, t),
/// row 0 is the denominator row, rows 1..m the homogenized resource rows.
template <class T>
LinearProgram<T> transform(const FractionalProgram<T>& fp) {
  detail::validate_fractional(fp);
  const std::size_t p = fp.dimension();
  LinearProgram<T> lp;
  lp.num_vars = p + 1;
  lp.sense = ObjSense::Maximize;
  lp.objective = fp.objective.numerator_coeffs;
  lp.objective.push_back(fp.objective.numerator_const);

  Vec<T> denom_row = fp.objective.denominator_coeffs;
  denom_row.push_back(fp.objective.denominator_const);
  lp.rows.push_back(std::move(denom_row));
  lp.rhs.push_back(T(1));
  for (std::size_t i = 0; i < fp.technology.size(); ++i) {
    Vec<T> row = fp.technology[i];
    row.push_back(-fp.rhs[i]);
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(T(0));
  }
  lp.senses.assign(lp.rows.size(), RowSense::LessEq);
  return lp;
}

/// Maps a transformed optimum back: x = y / t.
template <class T>
Vec<T> recover(const Vec<T>& y, const T& t) {
  if (!detail::is_positive(t)) throw ZeroScale("scale variable t is not positive");
  Vec<T> x;
  x.reserve(y.size());
  for (const auto& yi : y) x.push_back(yi / t);
  return x;
}

/// True iff min (d x + d0) over the region is strictly positive.
template <class T>
bool validate_denominator(const FractionalProgram<T>& fp) {
  detail::validate_fractional(fp);
  auto out = solve(detail::region_program(fp, fp.objective.denominator_coeffs,
                                          ObjSense::Minimize));
  if (out.status == LpStatus::Infeasible)
    throw InfeasibleRegion("feasible region is empty");
  if (out.status == LpStatus::Unbounded)
    return false;  // denominator decreases without bound
  return detail::is_positive(T(*out.objective_value + fp.objective.denominator_const));
}

template <class T>
struct FractionalSolution {
  T value{};
  Vec<T> argmax;
  T lp_value{};  // equals value (Schaible equivalence)
  /// Whether the N(xi) >= 0 hypothesis of the equivalence theorem holds.
  bool schaible_hypothesis = true;
};

template <class T>
FractionalSolution<T> solve_fractional(const FractionalProgram<T>& fp) {
  detail::validate_fractional(fp);
  auto probe = detail::probe_region(fp);
  if (probe.status == LpStatus::Infeasible)
    throw InfeasibleRegion("feasible region is empty");
  if (probe.status == LpStatus::Unbounded)
    throw UnboundedRegion("feasible region is unbounded");
  if (!validate_denominator(fp))
    throw DenominatorNotPositive("denominator is not positive over the region");

  auto out = solve(transform(fp));
  if (out.status != LpStatus::Optimal)
    throw UnboundedRegion("transformed program unexpectedly not optimal");

  FractionalSolution<T> sol;
  sol.lp_value = *out.objective_value;
  sol.value = sol.lp_value;
  Vec<T> y(out.primal_solution->begin(), out.primal_solution->end() - 1);
  sol.argmax = recover(y, out.primal_solution->back());

  auto sign = solve(detail::region_program(fp, fp.objective.numerator_coeffs,
                                           ObjSense::Maximize));
  sol.schaible_hypothesis =
      sign.status == LpStatus::Optimal &&
      !detail::is_negative(T(*sign.objective_value + fp.objective.numerator_const));
  return sol;
}

}  // namespace flp

#endif  // FLP_CHARNES_COOPER_HPP
