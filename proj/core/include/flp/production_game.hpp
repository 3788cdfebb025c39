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

#ifndef FLP_PRODUCTION_GAME_HPP
#define FLP_PRODUCTION_GAME_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "flp/charnes_cooper.hpp"
#include "flp/coalition.hpp"
#include "flp/lp.hpp"
#include "flp/rational.hpp"

namespace flp {

struct CoalitionProblemInfeasible : FlpError {
  using FlpError::FlpError;
};
struct CoalitionProblemUnbounded : FlpError {
  using FlpError::FlpError;
};

/// Production game: n players pooling per-player resource endowments to run
/// a shared technology, with a ratio objective and grand-coalition scaling
/// constant gamma (> n).
template <class T>
struct ProductionGame {
  using scalar_type = T;

  int n = 0;
  Mat<T> technology;            // m x p
  std::vector<Vec<T>> endowments;  // n vectors of length m
  FractionalObjective<T> objective;
  T gamma{};

  std::size_t num_resources() const { return technology.size(); }
  std::size_t num_goods() const { return objective.dimension(); }
};

template <class T>
struct BalancedCollection {
  std::vector<Coalition> coalitions;
  Vec<T> weights;  // gamma(S), strictly positive
};

template <class T>
struct CoreCheck {
  bool member = false;
  bool efficient = false;
  std::vector<std::pair<Coalition, T>> violations;  // coalition, deficit
};

template <class T>
struct BalancednessReport {
  bool balanced = false;
  T lp_optimum{};  // Bondareva LP value over proper coalitions
  T grand_value{};
  T excess{};  // lp_optimum - grand_value
  BalancedCollection<T> worst;
};

namespace detail {

template <class T>
void validate_game(const ProductionGame<T>& game) {
  if (game.n <= 0) throw MalformedProgram("game needs at least one player");
  if (int(game.endowments.size()) != game.n)
    throw MalformedProgram("endowment count does not match player count");
  const std::size_t m = game.technology.size();
  for (const auto& b : game.endowments) {
    if (b.size() != m) throw MalformedProgram("endowment length mismatch");
    for (const auto& v : b)
      if (is_negative(v)) throw MalformedProgram("endowments must be nonnegative");
  }
  if (!(game.gamma > T(game.n)))
    throw MalformedProgram("gamma must exceed the player count");
}

}  // namespace detail

/// b(S): componentwise sum of the members' endowments.
template <class T>
Vec<T> coalition_resources(const ProductionGame<T>& game, const Coalition& s) {
  Vec<T> total(game.num_resources(), T(0));
  for (int i : s.members())
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += game.endowments[i][k];
  return total;
}

/// The transformed coalition program in (y, t); the grand coalition's
/// objective is scaled by gamma.
template <class T>
LinearProgram<T> build_coalition_problem(const ProductionGame<T>& game,
                                         const Coalition& s) {
  detail::validate_game(game);
  FractionalProgram<T> fp{game.objective, game.technology, coalition_resources(game, s)};
  LinearProgram<T> lp = transform(fp);
  if (s.is_grand())
    for (auto& c : lp.objective) c *= game.gamma;
  return lp;
}

template <class T>
T characteristic_value(const ProductionGame<T>& game, const Coalition& s) {
  if (s.is_empty()) return T(0);
  auto out = solve(build_coalition_problem(game, s));
  if (out.status == LpStatus::Infeasible)
    throw CoalitionProblemInfeasible("coalition problem infeasible for " + to_string(s));
  if (out.status == LpStatus::Unbounded)
    throw CoalitionProblemUnbounded("coalition problem unbounded for " + to_string(s));
  return *out.objective_value;
}

/// All 2^n - 1 coalition values keyed by bitset.
template <class T>
std::map<std::uint32_t, T> characteristic_table(const ProductionGame<T>& game) {
  std::map<std::uint32_t, T> table;
  for (const auto& s : all_nonempty_coalitions(game.n))
    table[s.bits()] = characteristic_value(game, s);
  return table;
}

/// gamma* = max over balanced collections of the weight sum; equals n.
template <class T>
T compute_gamma_star(int n) {
  if (n < 1) throw MalformedProgram("player count must be positive");
  const auto coalitions = all_nonempty_coalitions(n);
  LinearProgram<T> lp;
  lp.num_vars = coalitions.size();
  lp.sense = ObjSense::Maximize;
  lp.objective.assign(coalitions.size(), T(1));
  lp.rows.assign(n, Vec<T>(coalitions.size(), T(0)));
  for (std::size_t j = 0; j < coalitions.size(); ++j)
    for (int i : coalitions[j].members()) lp.rows[i][j] = T(1);
  lp.rhs.assign(n, T(1));
  lp.senses.assign(n, RowSense::Equal);
  auto out = solve(lp);
  return *out.objective_value;
}

template <class T>
T default_gamma(int n) {
  if (n < 1) throw MalformedProgram("player count must be positive");
  return T(n + 1);
}

/// Equal split of the grand-coalition dual objective: u_i = omega_1* / n.
template <class T>
Vec<T> core_candidate(const ProductionGame<T>& game) {
  auto dual = dual_of(build_coalition_problem(game, Coalition::grand(game.n)));
  auto out = solve(dual);
  if (out.status == LpStatus::Infeasible)
    throw CoalitionProblemUnbounded("grand coalition problem unbounded");
  if (out.status == LpStatus::Unbounded)
    throw CoalitionProblemInfeasible("grand coalition problem infeasible");
  const T omega1 = (*out.primal_solution)[0];
  return Vec<T>(game.n, omega1 / T(game.n));
}

template <class T>
CoreCheck<T> is_core_member(const ProductionGame<T>& game, const Vec<T>& u) {
  if (int(u.size()) != game.n) throw MalformedProgram("allocation length mismatch");
  CoreCheck<T> check;
  const auto values = characteristic_table(game);
  T total(0);
  for (const auto& ui : u) total += ui;
  check.efficient =
      detail::is_zero(T(total - values.at(Coalition::grand(game.n).bits())));
  for (const auto& s : proper_nonempty_coalitions(game.n)) {
    T sum(0);
    for (int i : s.members()) sum += u[i];
    const T deficit = values.at(s.bits()) - sum;
    if (detail::is_positive(deficit)) check.violations.emplace_back(s, deficit);
  }
  check.member = check.efficient && check.violations.empty();
  return check;
}

namespace detail {

/// Max-min-weight LP for a fixed family: positive optimum iff the family
/// admits strictly positive balancing weights. Exact in rational mode, so
/// strict positivity needs no tolerance cutoff.
template <class T>
std::optional<Vec<T>> balancing_weights(const std::vector<Coalition>& family, int n) {
  for (int i = 0; i < n; ++i) {
    bool covered = false;
    for (const auto& s : family) covered = covered || s.contains(i);
    if (!covered) return std::nullopt;
  }
  const std::size_t k = family.size();
  LinearProgram<T> lp;
  lp.num_vars = k + 1;  // weights, then the min-weight bound delta
  lp.sense = ObjSense::Maximize;
  lp.objective.assign(k + 1, T(0));
  lp.objective[k] = T(1);
  for (int i = 0; i < n; ++i) {
    Vec<T> row(k + 1, T(0));
    for (std::size_t j = 0; j < k; ++j)
      if (family[j].contains(i)) row[j] = T(1);
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(T(1));
    lp.senses.push_back(RowSense::Equal);
  }
  for (std::size_t j = 0; j < k; ++j) {
    Vec<T> row(k + 1, T(0));
    row[j] = T(-1);
    row[k] = T(1);
    lp.rows.push_back(std::move(row));  // delta - gamma_j <= 0
    lp.rhs.push_back(T(0));
    lp.senses.push_back(RowSense::LessEq);
  }
  auto out = solve(lp);
  if (out.status != LpStatus::Optimal || !is_positive(*out.objective_value))
    return std::nullopt;
  Vec<T> weights(out.primal_solution->begin(), out.primal_solution->begin() + k);
  return weights;
}

}  // namespace detail

/// Every family of distinct nonempty coalitions admitting strictly positive
/// balancing weights, with one witness weight vector each. Exponential in
/// 2^n, hence the player guard.
template <class T>
std::vector<BalancedCollection<T>> enumerate_balanced_collections(int n) {
  if (n < 1) throw MalformedProgram("player count must be positive");
  if (n > 5) throw TooManyPlayers("balanced-collection enumeration capped at n = 5");
  const auto coalitions = all_nonempty_coalitions(n);
  std::vector<BalancedCollection<T>> out;
  const std::uint64_t families = (std::uint64_t(1) << coalitions.size()) - 1;
  for (std::uint64_t mask = 1; mask <= families; ++mask) {
    std::vector<Coalition> family;
    for (std::size_t j = 0; j < coalitions.size(); ++j)
      if ((mask >> j) & 1u) family.push_back(coalitions[j]);
    if (auto weights = detail::balancing_weights<T>(family, n))
      out.push_back(BalancedCollection<T>{std::move(family), std::move(*weights)});
  }
  return out;
}

/// Bondareva-Shapley LP over proper coalitions against caller-supplied
/// values; balanced iff the optimum does not exceed the grand value.
template <class T, class ValueFn>
BalancednessReport<T> bondareva_check(int n, ValueFn&& value) {
  BalancednessReport<T> rep;
  rep.grand_value = value(Coalition::grand(n));
  if (n == 1) {  // no proper coalitions: trivially balanced
    rep.balanced = true;
    rep.lp_optimum = T(0);
    rep.excess = -rep.grand_value;
    return rep;
  }
  const auto coalitions = proper_nonempty_coalitions(n);
  LinearProgram<T> lp;
  lp.num_vars = coalitions.size();
  lp.sense = ObjSense::Maximize;
  lp.objective.reserve(coalitions.size());
  for (const auto& s : coalitions) lp.objective.push_back(value(s));
  lp.rows.assign(n, Vec<T>(coalitions.size(), T(0)));
  for (std::size_t j = 0; j < coalitions.size(); ++j)
    for (int i : coalitions[j].members()) lp.rows[i][j] = T(1);
  lp.rhs.assign(n, T(1));
  lp.senses.assign(n, RowSense::Equal);
  auto out = solve(lp);
  rep.lp_optimum = *out.objective_value;
  rep.excess = rep.lp_optimum - rep.grand_value;
  rep.balanced = !detail::is_positive(rep.excess);
  for (std::size_t j = 0; j < coalitions.size(); ++j) {
    const T& w = (*out.primal_solution)[j];
    if (detail::is_positive(w)) {
      rep.worst.coalitions.push_back(coalitions[j]);
      rep.worst.weights.push_back(w);
    }
  }
  return rep;
}

template <class T>
BalancednessReport<T> check_balanced(const ProductionGame<T>& game) {
  const auto values = characteristic_table(game);
  return bondareva_check<T>(game.n,
                            [&](const Coalition& s) { return values.at(s.bits()); });
}

}  // namespace flp

#endif  // FLP_PRODUCTION_GAME_HPP
