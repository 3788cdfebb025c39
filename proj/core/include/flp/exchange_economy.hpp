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

#ifndef FLP_EXCHANGE_ECONOMY_HPP
#define FLP_EXCHANGE_ECONOMY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "flp/coalition.hpp"
#include "flp/molp.hpp"
#include "flp/rational.hpp"

namespace flp {

struct IndexOutOfRange : FlpError {
  using FlpError::FlpError;
};

/// Pure exchange economy: n agents, m goods, agent i's ratio utility reads
/// only its own consumption block x_{i*m .. i*m+m-1} of the p = n*m
/// allocation variables.
template <class T>
struct ExchangeEconomy {
  int n = 0;
  int m = 0;
  std::vector<Vec<T>> endowments;               // n vectors of length m
  std::vector<FractionalObjective<T>> utilities;  // over each agent's m goods

  std::size_t num_allocation_vars() const { return std::size_t(n) * m; }
};

/// Block indicator a_{ij}(S): 1 iff allocation variable j is coalition
/// member k's quantity of good i (j = k*m + i). All indices 0-based.
inline int constraint_coefficient(const Coalition& s, int good, int var, int n, int m) {
  if (good < 0 || good >= m || var < 0 || var >= n * m)
    throw IndexOutOfRange("good/variable index out of range");
  const int agent = var / m;
  return (var % m == good && s.contains(agent)) ? 1 : 0;
}

/// b(S): per-good total endowment of the coalition.
template <class T>
Vec<T> endowment_rhs(const ExchangeEconomy<T>& economy, const Coalition& s) {
  Vec<T> total(economy.m, T(0));
  for (int j : s.members())
    for (int i = 0; i < economy.m; ++i) total[i] += economy.endowments[j][i];
  return total;
}

namespace detail {

/// Agent i's utility lifted to the full p-dimensional allocation space.
template <class T>
FractionalObjective<T> expanded_utility(const ExchangeEconomy<T>& economy, int agent) {
  const std::size_t p = economy.num_allocation_vars();
  FractionalObjective<T> obj;
  obj.numerator_coeffs.assign(p, T(0));
  obj.denominator_coeffs.assign(p, T(0));
  const auto& own = economy.utilities[agent];
  for (int i = 0; i < economy.m; ++i) {
    obj.numerator_coeffs[std::size_t(agent) * economy.m + i] = own.numerator_coeffs[i];
    obj.denominator_coeffs[std::size_t(agent) * economy.m + i] =
        own.denominator_coeffs[i];
  }
  obj.numerator_const = own.numerator_const;
  obj.denominator_const = own.denominator_const;
  return obj;
}

template <class T>
Mat<T> block_matrix(const ExchangeEconomy<T>& economy, const Coalition& s) {
  const int p = int(economy.num_allocation_vars());
  Mat<T> a(economy.m, Vec<T>(p, T(0)));
  for (int i = 0; i < economy.m; ++i)
    for (int j = 0; j < p; ++j)
      a[i][j] = T(constraint_coefficient(s, i, j, economy.n, economy.m));
  return a;
}

}  // namespace detail

/// The economy's coalition game: allocation programs with both the A(S)
/// and A(N) constraint blocks, one objective per agent (r = n).
template <class T>
struct EconomyGame {
  using scalar_type = T;

  ExchangeEconomy<T> economy;
  T gamma{};

  int num_objectives() const { return economy.n; }
  int player_count() const { return economy.n; }

  MultiLinearProgram<T> coalition_problem(const Coalition& s, bool scale_grand = true) const {
    const std::size_t p = economy.num_allocation_vars();
    MultiLinearProgram<T> mlp;
    mlp.num_vars = p + 1;
    for (int i = 0; i < economy.n; ++i) {
      auto obj = detail::expanded_utility(economy, i);
      Vec<T> c = std::move(obj.numerator_coeffs);
      c.push_back(obj.numerator_const);
      mlp.objective_matrix.push_back(std::move(c));
      Vec<T> d = std::move(obj.denominator_coeffs);
      d.push_back(obj.denominator_const);
      mlp.rows.push_back(std::move(d));
      mlp.rhs.push_back(T(1));
    }
    const Coalition grand = Coalition::grand(economy.n);
    for (const Coalition* block : {&s, &grand}) {
      const auto a = detail::block_matrix(economy, *block);
      const auto b = endowment_rhs(economy, *block);
      for (int i = 0; i < economy.m; ++i) {
        Vec<T> row = a[i];
        row.push_back(-b[i]);
        mlp.rows.push_back(std::move(row));
        mlp.rhs.push_back(T(0));
      }
    }
    if (scale_grand && s.is_grand())
      for (auto& row : mlp.objective_matrix)
        for (auto& c : row) c *= gamma;
    return mlp;
  }
};

/// Validates shapes, gamma, denominator positivity and the sign assumption,
/// then wraps the economy as a coalition game.
template <class T>
EconomyGame<T> build_economy_game(const ExchangeEconomy<T>& economy, const T& gamma) {
  if (economy.n <= 0 || economy.m <= 0)
    throw MalformedProgram("economy needs agents and goods");
  if (int(economy.endowments.size()) != economy.n ||
      int(economy.utilities.size()) != economy.n)
    throw MalformedProgram("one endowment vector and one utility per agent required");
  for (const auto& e : economy.endowments) {
    if (int(e.size()) != economy.m) throw MalformedProgram("endowment length mismatch");
    for (const auto& v : e)
      if (detail::is_negative(v)) throw MalformedProgram("endowments must be nonnegative");
  }
  for (const auto& u : economy.utilities)
    if (int(u.dimension()) != economy.m || int(u.denominator_coeffs.size()) != economy.m)
      throw MalformedProgram("utility dimension mismatch");
  if (!(gamma > T(economy.n)))
    throw MalformedProgram("gamma must exceed the agent count");

  // Denominator positivity and objective signs over the grand feasible set.
  const Coalition grand = Coalition::grand(economy.n);
  const auto a_n = detail::block_matrix(economy, grand);
  const auto b_n = endowment_rhs(economy, grand);
  std::vector<FractionalObjective<T>> expanded;
  for (int i = 0; i < economy.n; ++i)
    expanded.push_back(detail::expanded_utility(economy, i));
  for (const auto& obj : expanded) {
    FractionalProgram<T> fp{obj, a_n, b_n};
    if (!validate_denominator(fp))
      throw DenominatorNotPositive("utility denominator not positive over allocations");
  }
  MultiFractionalProgram<T> mfp{std::move(expanded), a_n};
  reduce_to_molp(mfp, b_n, /*check_signs=*/true);

  return EconomyGame<T>{economy, gamma};
}

template <class T>
EconomyGame<T> build_economy_game(const ExchangeEconomy<T>& economy) {
  return build_economy_game(economy, default_gamma<T>(economy.n));
}

}  // namespace flp

#endif  // FLP_EXCHANGE_ECONOMY_HPP
