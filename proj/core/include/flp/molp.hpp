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

#ifndef FLP_MOLP_HPP
#define FLP_MOLP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "flp/charnes_cooper.hpp"
#include "flp/coalition.hpp"
#include "flp/lp.hpp"
#include "flp/production_game.hpp"
#include "flp/rational.hpp"

namespace flp {

struct NonpositiveWeight : FlpError {
  using FlpError::FlpError;
};
struct NegativeObjectiveIndex : FlpError {
  using FlpError::FlpError;
};
struct DegenerateDualObjective : FlpError {
  using FlpError::FlpError;
};
struct DimensionMismatch : FlpError {
  using FlpError::FlpError;
};
struct InfeasiblePoint : FlpError {
  using FlpError::FlpError;
};

/// r ratio objectives over a shared technology; the coalition right-hand
/// side is supplied when reducing.
template <class T>
struct MultiFractionalProgram {
  std::vector<FractionalObjective<T>> objectives;
  Mat<T> technology;  // m x p

  std::size_t dimension() const {
    return objectives.empty() ? 0 : objectives[0].dimension();
  }
};

/// Linearized multiobjective program over (y_1..y_p, t): an objective matrix
/// and a shared <=-constraint block (denominator rows first, then the
/// homogenized resource rows).
template <class T>
struct MultiLinearProgram {
  std::size_t num_vars = 0;
  Mat<T> objective_matrix;  // r x num_vars
  Mat<T> rows;
  Vec<T> rhs;

  std::size_t num_objectives() const { return objective_matrix.size(); }
  Vec<T> objectives_at(const Vec<T>& point) const {
    return mat_vec(objective_matrix, point);
  }
};

/// Row-scaled rank-one dual matrix W of the matrix dual problem.
template <class T>
struct MatrixDual {
  Mat<T> w;  // r x num_constraints
};

enum class ValueSetLocation { Outside, InteriorOrDominated, OnMaxFrontier };

namespace detail {

template <class T>
void validate_mlp(const MultiLinearProgram<T>& mlp) {
  if (mlp.num_vars == 0 || mlp.objective_matrix.empty())
    throw MalformedProgram("multiobjective program needs variables and objectives");
  for (const auto& row : mlp.objective_matrix)
    if (row.size() != mlp.num_vars) throw MalformedProgram("objective row mismatch");
  if (mlp.rhs.size() != mlp.rows.size())
    throw MalformedProgram("rhs length does not match row count");
  for (const auto& row : mlp.rows)
    if (row.size() != mlp.num_vars) throw MalformedProgram("constraint row mismatch");
}

template <class T>
LinearProgram<T> feasibility_shell(const MultiLinearProgram<T>& mlp) {
  LinearProgram<T> lp;
  lp.num_vars = mlp.num_vars;
  lp.sense = ObjSense::Maximize;
  lp.objective.assign(mlp.num_vars, T(0));
  lp.rows = mlp.rows;
  lp.rhs = mlp.rhs;
  lp.senses.assign(mlp.rows.size(), RowSense::LessEq);
  return lp;
}

/// Strict-domination probe against target z: nullopt when no feasible point
/// reaches z at all; otherwise the optimum of max sum(s), 0 <= s_k <= 1,
/// C x >= z + s. Zero optimum means z is undominated among reachable values.
template <class T>
std::optional<T> domination_excess(const MultiLinearProgram<T>& mlp, const Vec<T>& z) {
  const std::size_t r = mlp.num_objectives();
  if (z.size() != r) throw DimensionMismatch("target length does not match objectives");
  LinearProgram<T> lp;
  lp.num_vars = mlp.num_vars + r;
  lp.sense = ObjSense::Maximize;
  lp.objective.assign(lp.num_vars, T(0));
  for (std::size_t k = 0; k < r; ++k) lp.objective[mlp.num_vars + k] = T(1);
  for (std::size_t i = 0; i < mlp.rows.size(); ++i) {
    Vec<T> row = mlp.rows[i];
    row.resize(lp.num_vars, T(0));
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(mlp.rhs[i]);
  }
  for (std::size_t k = 0; k < r; ++k) {
    Vec<T> row(lp.num_vars, T(0));
    for (std::size_t j = 0; j < mlp.num_vars; ++j) row[j] = -mlp.objective_matrix[k][j];
    row[mlp.num_vars + k] = T(1);
    lp.rows.push_back(std::move(row));  // s_k - C_k x <= -z_k
    lp.rhs.push_back(-z[k]);
  }
  for (std::size_t k = 0; k < r; ++k) {
    Vec<T> row(lp.num_vars, T(0));
    row[mlp.num_vars + k] = T(1);
    lp.rows.push_back(std::move(row));  // s_k <= 1
    lp.rhs.push_back(T(1));
  }
  lp.senses.assign(lp.rows.size(), RowSense::LessEq);
  auto out = solve(lp);
  if (out.status == LpStatus::Infeasible) return std::nullopt;
  if (out.status == LpStatus::Unbounded)
    throw UnboundedRegion("domination probe unbounded; region is unbounded");
  return *out.objective_value;
}

}  // namespace detail

/// Multiobjective reduction: r denominator rows then the homogenized resource
/// block. Enforces the all-objectives-signable standing assumption by one
/// sign LP per objective over the untransformed region.
template <class T>
MultiLinearProgram<T> reduce_to_molp(const MultiFractionalProgram<T>& mfp,
                                     const Vec<T>& rhs, bool check_signs = true) {
  if (mfp.objectives.empty()) throw MalformedProgram("no objectives");
  const std::size_t p = mfp.dimension();
  for (const auto& obj : mfp.objectives)
    if (obj.dimension() != p || obj.denominator_coeffs.size() != p)
      throw MalformedProgram("objective dimension mismatch");
  if (check_signs) {
    for (std::size_t k = 0; k < mfp.objectives.size(); ++k) {
      FractionalProgram<T> fp{mfp.objectives[k], mfp.technology, rhs};
      auto out = solve(detail::region_program(fp, fp.objective.numerator_coeffs,
                                              ObjSense::Maximize));
      if (out.status == LpStatus::Infeasible)
        throw InfeasibleRegion("coalition region is empty");
      if (out.status == LpStatus::Optimal &&
          detail::is_negative(
              T(*out.objective_value + mfp.objectives[k].numerator_const)))
        throw NegativeObjectiveIndex("objective " + std::to_string(k + 1) +
                                     " is negative over the whole region");
    }
  }

  MultiLinearProgram<T> mlp;
  mlp.num_vars = p + 1;
  for (const auto& obj : mfp.objectives) {
    Vec<T> c = obj.numerator_coeffs;
    c.push_back(obj.numerator_const);
    mlp.objective_matrix.push_back(std::move(c));
    Vec<T> d = obj.denominator_coeffs;
    d.push_back(obj.denominator_const);
    mlp.rows.push_back(std::move(d));
    mlp.rhs.push_back(T(1));
  }
  for (std::size_t i = 0; i < mfp.technology.size(); ++i) {
    Vec<T> row = mfp.technology[i];
    row.push_back(-rhs[i]);
    mlp.rows.push_back(std::move(row));
    mlp.rhs.push_back(T(0));
  }
  return mlp;
}

template <class T>
LinearProgram<T> scalarize(const MultiLinearProgram<T>& mlp, const Vec<T>& weights) {
  detail::validate_mlp(mlp);
  if (weights.size() != mlp.num_objectives())
    throw DimensionMismatch("weight length does not match objective count");
  for (const auto& w : weights)
    if (!detail::is_positive(w)) throw NonpositiveWeight("weights must be positive");
  LinearProgram<T> lp = detail::feasibility_shell(mlp);
  for (std::size_t k = 0; k < weights.size(); ++k)
    for (std::size_t j = 0; j < mlp.num_vars; ++j)
      lp.objective[j] += weights[k] * mlp.objective_matrix[k][j];
  return lp;
}

template <class T>
struct ParetoPoint {
  Vec<T> point;       // (y, t)
  Vec<T> objectives;  // C (y, t)
};

/// Positive weighted-sum scalarization; the maximizer is Pareto optimal.
template <class T>
ParetoPoint<T> solve_pareto(const MultiLinearProgram<T>& mlp, const Vec<T>& weights) {
  auto out = solve(scalarize(mlp, weights));
  if (out.status == LpStatus::Infeasible) throw InfeasibleRegion("region is empty");
  if (out.status == LpStatus::Unbounded) throw UnboundedRegion("region is unbounded");
  ParetoPoint<T> res;
  res.point = *out.primal_solution;
  res.objectives = mlp.objectives_at(res.point);
  return res;
}

template <class T>
bool is_pareto(const MultiLinearProgram<T>& mlp, const Vec<T>& point) {
  detail::validate_mlp(mlp);
  auto shell = detail::feasibility_shell(mlp);
  if (!check_feasible(shell, point).feasible)
    throw InfeasiblePoint("point is not feasible for the program");
  auto excess = detail::domination_excess(mlp, mlp.objectives_at(point));
  return excess && !detail::is_positive(*excess);
}

/// Rank-one dual witness W = z* v^T / (v^T b) from the scalarized LP's
/// optimal dual v: satisfies W b = z* and lambda^T W = v^T.
template <class T>
MatrixDual<T> build_matrix_dual(const MultiLinearProgram<T>& mlp, const Vec<T>& weights) {
  auto lp = scalarize(mlp, weights);
  auto out = solve(lp);
  if (out.status == LpStatus::Infeasible) throw InfeasibleRegion("region is empty");
  if (out.status == LpStatus::Unbounded) throw UnboundedRegion("region is unbounded");
  const Vec<T>& v = *out.dual_solution;
  const T vb = dot(v, mlp.rhs);
  if (detail::is_zero(vb))
    throw DegenerateDualObjective("scalarized dual objective vanishes");
  const Vec<T> zstar = mlp.objectives_at(*out.primal_solution);
  MatrixDual<T> dual;
  dual.w.assign(mlp.num_objectives(), Vec<T>(mlp.rows.size(), T(0)));
  for (std::size_t k = 0; k < mlp.num_objectives(); ++k)
    for (std::size_t i = 0; i < mlp.rows.size(); ++i)
      dual.w[k][i] = zstar[k] * v[i] / vb;
  return dual;
}

/// Feasibility of W for the matrix dual: no u >= 0 with W A u <= C u in the
/// componentwise-with-one-strict sense.
template <class T>
bool check_dual_feasible(const MultiLinearProgram<T>& mlp, const MatrixDual<T>& dual) {
  detail::validate_mlp(mlp);
  const std::size_t r = mlp.num_objectives();
  if (dual.w.size() != r) throw DimensionMismatch("dual row count mismatch");
  for (const auto& row : dual.w)
    if (row.size() != mlp.rows.size()) throw DimensionMismatch("dual column mismatch");

  // max sum(s) s.t. (C - W A) u >= s, u >= 0, 0 <= s_k <= 1; dual feasible
  // iff the optimum is zero.
  LinearProgram<T> lp;
  lp.num_vars = mlp.num_vars + r;
  lp.sense = ObjSense::Maximize;
  lp.objective.assign(lp.num_vars, T(0));
  for (std::size_t k = 0; k < r; ++k) lp.objective[mlp.num_vars + k] = T(1);
  for (std::size_t k = 0; k < r; ++k) {
    Vec<T> row(lp.num_vars, T(0));
    for (std::size_t j = 0; j < mlp.num_vars; ++j) {
      T wa(0);
      for (std::size_t i = 0; i < mlp.rows.size(); ++i)
        wa += dual.w[k][i] * mlp.rows[i][j];
      row[j] = wa - mlp.objective_matrix[k][j];  // -(C - WA)
    }
    row[mlp.num_vars + k] = T(1);
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(T(0));
  }
  for (std::size_t k = 0; k < r; ++k) {
    Vec<T> row(lp.num_vars, T(0));
    row[mlp.num_vars + k] = T(1);
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(T(1));
  }
  lp.senses.assign(lp.rows.size(), RowSense::LessEq);
  auto out = solve(lp);
  return out.status == LpStatus::Optimal && !detail::is_positive(*out.objective_value);
}

/// The relation forbidden between feasible primal/dual pairs: g <= z
/// componentwise with g != z.
template <class T>
bool weak_duality_holds(const Vec<T>& z, const Vec<T>& g) {
  if (z.size() != g.size()) throw DimensionMismatch("vector length mismatch");
  bool all_le = true, some_strict = false;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (detail::is_positive(T(g[k] - z[k]))) all_le = false;
    if (detail::is_negative(T(g[k] - z[k]))) some_strict = true;
  }
  return !(all_le && some_strict);
}

/// Multiobjective production game: shared technology, per-player endowments
/// and r ratio objectives.
template <class T>
struct MultiProductionGame {
  using scalar_type = T;

  int n = 0;
  Mat<T> technology;
  std::vector<Vec<T>> endowments;
  std::vector<FractionalObjective<T>> objectives;
  T gamma{};

  int num_objectives() const { return int(objectives.size()); }
  int player_count() const { return n; }

  Vec<T> coalition_rhs(const Coalition& s) const {
    Vec<T> total(technology.size(), T(0));
    for (int i : s.members())
      for (std::size_t k = 0; k < total.size(); ++k) total[k] += endowments[i][k];
    return total;
  }

  /// Reduced multiobjective program for S; the grand coalition's objective matrix is
  /// gamma-scaled unless the caller asks for the raw program.
  MultiLinearProgram<T> coalition_problem(const Coalition& s, bool scale_grand = true) const {
    MultiFractionalProgram<T> mfp{objectives, technology};
    auto mlp = reduce_to_molp(mfp, coalition_rhs(s), /*check_signs=*/false);
    if (scale_grand && s.is_grand())
      for (auto& row : mlp.objective_matrix)
        for (auto& c : row) c *= gamma;
    return mlp;
  }
};

/// Construction-time validation: endowment shape, gamma > n, positive
/// denominators and the sign assumption over the grand region.
template <class T>
void validate_multi_game(const MultiProductionGame<T>& game) {
  if (game.n <= 0) throw MalformedProgram("game needs at least one player");
  if (int(game.endowments.size()) != game.n)
    throw MalformedProgram("endowment count does not match player count");
  for (const auto& b : game.endowments) {
    if (b.size() != game.technology.size())
      throw MalformedProgram("endowment length mismatch");
    for (const auto& v : b)
      if (detail::is_negative(v)) throw MalformedProgram("endowments must be nonnegative");
  }
  if (!(game.gamma > T(game.n)))
    throw MalformedProgram("gamma must exceed the player count");
  const Vec<T> grand_rhs = game.coalition_rhs(Coalition::grand(game.n));
  for (const auto& obj : game.objectives) {
    FractionalProgram<T> fp{obj, game.technology, grand_rhs};
    if (!validate_denominator(fp))
      throw DenominatorNotPositive("objective denominator not positive over region");
  }
  MultiFractionalProgram<T> mfp{game.objectives, game.technology};
  reduce_to_molp(mfp, grand_rhs, /*check_signs=*/true);
}

/// Classifies z against V(S) = (Max T_S - R+^r) on R+^r; the grand value
/// set is gamma-scaled by definition.
template <class Game, class T = typename Game::scalar_type>
ValueSetLocation value_set_membership(const Game& game, const Coalition& s,
                                      const Vec<T>& z, bool scale_grand = true) {
  for (const auto& zk : z)
    if (detail::is_negative(zk)) return ValueSetLocation::Outside;
  const auto mlp = game.coalition_problem(s, scale_grand);
  auto excess = detail::domination_excess(mlp, z);
  if (!excess) return ValueSetLocation::Outside;
  return detail::is_positive(*excess) ? ValueSetLocation::InteriorOrDominated
                                      : ValueSetLocation::OnMaxFrontier;
}

template <class T>
struct StableCandidateResult {
  Mat<T> payoffs;         // n x r, identical rows g / n
  Vec<T> dual_objective;  // g = W b' of the gamma-scaled grand problem
  MatrixDual<T> dual;
  Vec<T> weights;         // lambda used for the Pareto dual
};

/// Equal split of the grand-coalition matrix-dual objective (uniform
/// weights by default).
template <class Game, class T = typename Game::scalar_type>
StableCandidateResult<T> stable_candidate(const Game& game,
                                          std::optional<Vec<T>> weights = std::nullopt) {
  const int r = game.num_objectives();
  const int n = game.player_count();
  Vec<T> lambda = weights ? std::move(*weights) : Vec<T>(r, T(1) / T(r));
  const auto mlp = game.coalition_problem(Coalition::grand(n), true);
  StableCandidateResult<T> res;
  res.dual = build_matrix_dual(mlp, lambda);
  res.dual_objective = mat_vec(res.dual.w, mlp.rhs);
  res.payoffs.assign(n, Vec<T>(r, T(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k) res.payoffs[i][k] = res.dual_objective[k] / T(n);
  res.weights = std::move(lambda);
  return res;
}

template <class T>
struct StableOutcomeReport {
  bool stable = false;
  bool grand_on_frontier = false;
  std::vector<Coalition> blocking;  // S with aggregate inside V(S) \ Max V(S)
  std::map<std::uint32_t, ValueSetLocation> classifications;
};

/// Stability: no proper coalition's aggregate payoff sits in the dominated
/// part of its value set, and the grand aggregate is on Max V(N).
template <class Game, class T = typename Game::scalar_type>
StableOutcomeReport<T> is_stable_outcome(const Game& game, const Mat<T>& payoffs) {
  const int n = game.player_count();
  const int r = game.num_objectives();
  if (int(payoffs.size()) != n) throw DimensionMismatch("payoff row count mismatch");
  for (const auto& row : payoffs)
    if (int(row.size()) != r) throw DimensionMismatch("payoff column count mismatch");

  StableOutcomeReport<T> rep;
  for (const auto& s : all_nonempty_coalitions(n)) {
    Vec<T> aggregate(r, T(0));
    for (int i : s.members())
      for (int k = 0; k < r; ++k) aggregate[k] += payoffs[i][k];
    const auto where = value_set_membership(game, s, aggregate);
    rep.classifications[s.bits()] = where;
    if (s.is_grand())
      rep.grand_on_frontier = where == ValueSetLocation::OnMaxFrontier;
    else if (where == ValueSetLocation::InteriorOrDominated)
      rep.blocking.push_back(s);
  }
  rep.stable = rep.grand_on_frontier && rep.blocking.empty();
  return rep;
}

/// Balancedness witness for a collection: the weight-combined Pareto values
/// of the members, shrunk by the weight sum, are weakly dominated inside the
/// unscaled grand feasible objective set.
template <class Game, class T = typename Game::scalar_type>
bool vector_balancedness_witness(const Game& game, const BalancedCollection<T>& family,
                                 const Vec<T>& weights) {
  const int r = game.num_objectives();
  Vec<T> combined(r, T(0));
  T weight_sum(0);
  for (std::size_t j = 0; j < family.coalitions.size(); ++j) {
    const auto pareto =
        solve_pareto(game.coalition_problem(family.coalitions[j], false), weights);
    for (int k = 0; k < r; ++k)
      combined[k] += family.weights[j] * pareto.objectives[k];
    weight_sum += family.weights[j];
  }
  for (auto& c : combined) c /= weight_sum;
  const auto grand = game.coalition_problem(Coalition::grand(game.player_count()), false);
  return detail::domination_excess(grand, combined).has_value();
}

}  // namespace flp

#endif  // FLP_MOLP_HPP
