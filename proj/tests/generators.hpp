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
//
// Seeded random instance generators shared by the property and acceptance
// suites. All data is rational with small denominators; every generated
// region is nonempty (0 is feasible) and bounded (a box row is added).

#ifndef FLPGAME_TESTS_GENERATORS_HPP
#define FLPGAME_TESTS_GENERATORS_HPP

#include <random>

#include "flp/charnes_cooper.hpp"
#include "flp/exchange_economy.hpp"
#include "flp/lp.hpp"
#include "flp/molp.hpp"
#include "flp/production_game.hpp"
#include "flp/rational.hpp"

namespace gen {

using flp::Mat;
using flp::Rational;
using flp::Vec;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Rational in [lo, hi] with denominator at most max_den.
inline Rational rand_rational(Rng& rng, int lo, int hi, int max_den = 4) {
  const int den = rand_int(rng, 1, max_den);
  const int num = rand_int(rng, lo * den, hi * den);
  return Rational(num, den);
}

inline Vec<Rational> rand_vector(Rng& rng, std::size_t len, int lo, int hi,
                                 int max_den = 4) {
  Vec<Rational> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(rand_rational(rng, lo, hi, max_den));
  return out;
}

inline Mat<Rational> rand_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo,
                                 int hi, int max_den = 4) {
  Mat<Rational> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) out.push_back(rand_vector(rng, cols, lo, hi, max_den));
  return out;
}

/// Feasible (0 in the region) and bounded (box row) random LP in max-<= form.
inline flp::LinearProgram<Rational> bounded_lp(Rng& rng, int max_vars = 6,
                                               int max_rows = 6) {
  const std::size_t p = rand_int(rng, 1, max_vars);
  const std::size_t m = rand_int(rng, 1, max_rows - 1);
  flp::LinearProgram<Rational> lp;
  lp.num_vars = p;
  lp.sense = flp::ObjSense::Maximize;
  lp.objective = rand_vector(rng, p, -5, 5);
  lp.rows = rand_matrix(rng, m, p, -5, 5);
  lp.rhs = rand_vector(rng, m, 0, 5);
  lp.rows.push_back(Vec<Rational>(p, Rational(1)));  // box: sum x <= U
  lp.rhs.push_back(rand_rational(rng, 1, 8));
  lp.senses.assign(m + 1, flp::RowSense::LessEq);
  return lp;
}

/// Random fractional program with validated positive denominator.
inline flp::FractionalProgram<Rational> fractional_program(Rng& rng, int max_vars = 4,
                                                           int max_rows = 4) {
  while (true) {
    const std::size_t p = rand_int(rng, 1, max_vars);
    const std::size_t m = rand_int(rng, 1, max_rows - 1);
    flp::FractionalProgram<Rational> fp;
    fp.objective.numerator_coeffs = rand_vector(rng, p, -5, 5);
    fp.objective.numerator_const = rand_rational(rng, -5, 5);
    fp.objective.denominator_coeffs = rand_vector(rng, p, -2, 5);
    fp.objective.denominator_const = rand_rational(rng, 1, 5);
    fp.technology = rand_matrix(rng, m, p, -5, 5);
    fp.rhs = rand_vector(rng, m, 0, 5);
    fp.technology.push_back(Vec<Rational>(p, Rational(1)));
    fp.rhs.push_back(rand_rational(rng, 1, 6));
    if (flp::validate_denominator(fp)) return fp;
  }
}

/// Nonnegative technology whose columns all touch some resource, so every
/// coalition program is bounded.
inline Mat<Rational> production_technology(Rng& rng, std::size_t m, std::size_t p) {
  while (true) {
    Mat<Rational> a = rand_matrix(rng, m, p, 0, 4);
    bool ok = true;
    for (std::size_t j = 0; j < p; ++j) {
      bool touched = false;
      for (std::size_t i = 0; i < m; ++i) touched = touched || a[i][j] > 0;
      ok = ok && touched;
    }
    if (ok) return a;
  }
}

inline flp::FractionalObjective<Rational> ratio_objective(Rng& rng, std::size_t p,
                                                          bool nonneg_numerator) {
  flp::FractionalObjective<Rational> obj;
  obj.numerator_coeffs = rand_vector(rng, p, nonneg_numerator ? 0 : -5, 5);
  obj.numerator_const = rand_rational(rng, nonneg_numerator ? 1 : -3, 3);
  obj.denominator_coeffs = rand_vector(rng, p, 0, 3);
  obj.denominator_const = rand_rational(rng, 1, 3);
  return obj;
}

inline flp::ProductionGame<Rational> production_game(Rng& rng, int n, int max_dim = 3) {
  const std::size_t m = rand_int(rng, 1, max_dim);
  const std::size_t p = rand_int(rng, 1, max_dim);
  flp::ProductionGame<Rational> game;
  game.n = n;
  game.technology = production_technology(rng, m, p);
  for (int i = 0; i < n; ++i) game.endowments.push_back(rand_vector(rng, m, 0, 5));
  game.objective = ratio_objective(rng, p, /*nonneg_numerator=*/false);
  game.gamma = flp::default_gamma<Rational>(n);
  return game;
}

/// Multiobjective production game with nonnegative numerators, keeping every
/// coalition's Pareto values nonnegative and the scalarized dual objective
/// positive.
inline flp::MultiProductionGame<Rational> multi_production_game(Rng& rng, int n, int r,
                                                                int max_dim = 3) {
  const std::size_t m = rand_int(rng, 1, max_dim);
  const std::size_t p = rand_int(rng, 1, max_dim);
  flp::MultiProductionGame<Rational> game;
  game.n = n;
  game.technology = production_technology(rng, m, p);
  for (int i = 0; i < n; ++i) game.endowments.push_back(rand_vector(rng, m, 0, 5));
  for (int k = 0; k < r; ++k)
    game.objectives.push_back(ratio_objective(rng, p, /*nonneg_numerator=*/true));
  game.gamma = flp::default_gamma<Rational>(n);
  return game;
}

inline flp::ExchangeEconomy<Rational> exchange_economy(Rng& rng, int n, int m) {
  flp::ExchangeEconomy<Rational> economy;
  economy.n = n;
  economy.m = m;
  for (int i = 0; i < n; ++i) economy.endowments.push_back(rand_vector(rng, m, 1, 5));
  for (int i = 0; i < n; ++i)
    economy.utilities.push_back(ratio_objective(rng, m, /*nonneg_numerator=*/true));
  return economy;
}

}  // namespace gen

#endif  // FLPGAME_TESTS_GENERATORS_HPP
