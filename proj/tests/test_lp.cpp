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

#include <doctest.h>

#include "flp/lp.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using flp::LinearProgram;
using flp::LpStatus;
using flp::ObjSense;
using flp::Rational;
using flp::RowSense;
using flp::Vec;

namespace {

LinearProgram<Rational> max_leq(Vec<Rational> c, flp::Mat<Rational> a, Vec<Rational> b) {
  LinearProgram<Rational> lp;
  lp.num_vars = c.size();
  lp.sense = ObjSense::Maximize;
  lp.objective = std::move(c);
  lp.rows = std::move(a);
  lp.rhs = std::move(b);
  lp.senses.assign(lp.rows.size(), RowSense::LessEq);
  return lp;
}

}  // namespace

TEST_CASE("single bound: max x s.t. x <= 5") {
  auto out = flp::solve(max_leq({1}, {{1}}, {5}));
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK((*out.primal_solution)[0] == 5);
  CHECK(*out.objective_value == 5);
  CHECK((*out.dual_solution)[0] == 1);
}

TEST_CASE("two-variable program solves to the vertex the oracle picks") {
  auto lp = max_leq({3, 2}, {{1, 1}, {1, 3}}, {4, 6});
  auto out = flp::solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(*out.objective_value == 12);
  CHECK(*out.primal_solution == Vec<Rational>{4, 0});
  auto oracle = oracles::linear_vertex_maximum(lp.rows, lp.rhs, lp.objective);
  CHECK(*oracle == 12);
}

TEST_CASE("contradictory bounds are infeasible") {
  auto out = flp::solve(max_leq({1}, {{-1}, {1}}, {-1, 0}));
  CHECK(out.status == LpStatus::Infeasible);
  CHECK_FALSE(out.primal_solution.has_value());
  CHECK_FALSE(out.objective_value.has_value());
  CHECK_FALSE(out.dual_solution.has_value());
}

TEST_CASE("unbounded maximization is reported") {
  auto out = flp::solve(max_leq({1, 0}, {{0, 1}}, {1}));
  CHECK(out.status == LpStatus::Unbounded);
}

TEST_CASE("equality and >= senses") {
  LinearProgram<Rational> lp;
  lp.num_vars = 2;
  lp.sense = ObjSense::Minimize;
  lp.objective = {2, 3};
  lp.rows = {{1, 1}, {1, 0}};
  lp.rhs = {4, 1};
  lp.senses = {RowSense::Equal, RowSense::GreaterEq};
  auto out = flp::solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(*out.objective_value == 8);  // x = (4, 0)
  CHECK(*out.primal_solution == Vec<Rational>{4, 0});
}

TEST_CASE("check_feasible flags rows and negative variables") {
  auto lp = max_leq({3, 2}, {{1, 1}, {1, 3}}, {4, 6});
  auto ok = flp::check_feasible(lp, {4, 0});
  CHECK(ok.feasible);
  CHECK(ok.violated_rows.empty());

  auto bad = flp::check_feasible(lp, {5, 0});
  CHECK_FALSE(bad.feasible);
  CHECK(bad.violated_rows == std::vector<std::size_t>{0});

  auto neg = flp::check_feasible(lp, {-1, 0});
  CHECK_FALSE(neg.feasible);
  CHECK(neg.negative_vars == std::vector<std::size_t>{0});
}

TEST_CASE("check_feasible rejects wrong-length points") {
  auto lp = max_leq({1}, {{1}}, {5});
  CHECK_THROWS_AS(flp::check_feasible(lp, {1, 2}), flp::MalformedProgram);
}

TEST_CASE("dual_of the 1x1 bound") {
  auto dual = flp::dual_of(max_leq({1}, {{1}}, {5}));
  CHECK(dual.sense == ObjSense::Minimize);
  CHECK(dual.objective == Vec<Rational>{5});
  CHECK(dual.rows == flp::Mat<Rational>{{1}});
  CHECK(dual.rhs == Vec<Rational>{1});
  CHECK(dual.senses == std::vector<flp::RowSense>{RowSense::GreaterEq});
  auto out = flp::solve(dual);
  CHECK(*out.objective_value == 5);
}

TEST_CASE("dual_of twice reproduces the program") {
  auto lp = max_leq({3, 2}, {{1, 1}, {1, 3}}, {4, 6});
  auto twice = flp::dual_of(flp::dual_of(lp));
  CHECK(twice.objective == lp.objective);
  CHECK(twice.rows == lp.rows);
  CHECK(twice.rhs == lp.rhs);
  CHECK(twice.sense == lp.sense);
}

TEST_CASE("dual optimum equals primal optimum on the 2x2 example") {
  auto lp = max_leq({3, 2}, {{1, 1}, {1, 3}}, {4, 6});
  auto primal = flp::solve(lp);
  auto dual = flp::solve(flp::dual_of(lp));
  CHECK(*primal.objective_value == *dual.objective_value);
  CHECK(*primal.objective_value == 12);
}

TEST_CASE("dual_of rejects mixed senses") {
  LinearProgram<Rational> lp = max_leq({1}, {{1}}, {5});
  lp.senses[0] = RowSense::Equal;
  CHECK_THROWS_AS(flp::dual_of(lp), flp::MalformedProgram);
}

TEST_CASE("malformed programs are rejected") {
  LinearProgram<Rational> lp;
  lp.num_vars = 2;
  lp.objective = {1};  // wrong length
  lp.rows = {{1, 1}};
  lp.rhs = {1};
  lp.senses = {RowSense::LessEq};
  CHECK_THROWS_AS(flp::solve(lp), flp::MalformedProgram);
}

TEST_CASE("property: strong duality is exact on random bounded programs") {
  gen::Rng rng(20260824);
  for (int iter = 0; iter < 100; ++iter) {
    auto lp = gen::bounded_lp(rng);
    auto primal = flp::solve(lp);
    REQUIRE(primal.status == LpStatus::Optimal);
    auto dual = flp::solve(flp::dual_of(lp));
    REQUIRE(dual.status == LpStatus::Optimal);
    CHECK(*primal.objective_value == *dual.objective_value);
    // the dual multipliers returned with the primal basis price b the same
    CHECK(flp::dot(*primal.dual_solution, lp.rhs) == *primal.objective_value);
  }
}

TEST_CASE("property: optimal primal is a feasible vertex solution") {
  gen::Rng rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    auto lp = gen::bounded_lp(rng);
    auto out = flp::solve(lp);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(flp::check_feasible(lp, *out.primal_solution).feasible);
    std::size_t nonzero = 0;
    for (const auto& x : *out.primal_solution)
      if (x != 0) ++nonzero;
    CHECK(nonzero <= lp.num_constraints());
  }
}

TEST_CASE("float mode agrees with rational mode within tolerance") {
  gen::Rng rng(99);
  for (int iter = 0; iter < 25; ++iter) {
    auto lp = gen::bounded_lp(rng, 4, 4);
    auto exact = flp::solve(lp);
    REQUIRE(exact.status == LpStatus::Optimal);

    flp::LinearProgram<double> flp64;
    flp64.num_vars = lp.num_vars;
    flp64.sense = lp.sense;
    for (const auto& c : lp.objective) flp64.objective.push_back(c.convert_to<double>());
    for (const auto& row : lp.rows) {
      flp64.rows.emplace_back();
      for (const auto& c : row) flp64.rows.back().push_back(c.convert_to<double>());
    }
    for (const auto& c : lp.rhs) flp64.rhs.push_back(c.convert_to<double>());
    flp64.senses = lp.senses;
    auto approx = flp::solve(flp64);
    REQUIRE(approx.status == LpStatus::Optimal);
    CHECK(std::abs(*approx.objective_value -
                   exact.objective_value->convert_to<double>()) < 1e-7);
  }
}
