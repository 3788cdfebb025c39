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

#include <benchmark/benchmark.h>

#include "flp/exchange_economy.hpp"
#include "flp/molp.hpp"
#include "flp/production_game.hpp"
#include "generators.hpp"

namespace {

void BM_SimplexRational(benchmark::State& state) {
  gen::Rng rng(1);
  std::vector<flp::LinearProgram<flp::Rational>> lps;
  for (int i = 0; i < 16; ++i)
    lps.push_back(gen::bounded_lp(rng, static_cast<int>(state.range(0)),
                                  static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    auto out = flp::solve(lps[i++ % lps.size()]);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_SimplexRational)->Arg(4)->Arg(8);

void BM_SimplexDouble(benchmark::State& state) {
  gen::Rng rng(1);
  std::vector<flp::LinearProgram<double>> lps;
  for (int i = 0; i < 16; ++i) {
    auto lp = gen::bounded_lp(rng, static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(0)));
    flp::LinearProgram<double> d;
    d.num_vars = lp.num_vars;
    d.sense = lp.sense;
    d.senses = lp.senses;
    for (const auto& c : lp.objective) d.objective.push_back(c.convert_to<double>());
    for (const auto& r : lp.rhs) d.rhs.push_back(r.convert_to<double>());
    for (const auto& row : lp.rows) {
      d.rows.emplace_back();
      for (const auto& c : row) d.rows.back().push_back(c.convert_to<double>());
    }
    lps.push_back(std::move(d));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    auto out = flp::solve(lps[i++ % lps.size()]);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_SimplexDouble)->Arg(4)->Arg(8);

void BM_CharacteristicTable(benchmark::State& state) {
  gen::Rng rng(2);
  auto game = gen::production_game(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto table = flp::characteristic_table(game);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_CharacteristicTable)->Arg(3)->Arg(5);

void BM_CoreCandidate(benchmark::State& state) {
  gen::Rng rng(3);
  auto game = gen::production_game(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto u = flp::core_candidate(game);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_CoreCandidate)->Arg(3)->Arg(6);

void BM_StableCandidate(benchmark::State& state) {
  gen::Rng rng(4);
  auto game = gen::multi_production_game(rng, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto res = flp::stable_candidate(game);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_StableCandidate)->Arg(3)->Arg(5);

void BM_EconomyStableOutcome(benchmark::State& state) {
  gen::Rng rng(5);
  auto economy = gen::exchange_economy(rng, static_cast<int>(state.range(0)), 2);
  auto game = flp::build_economy_game(economy);
  auto candidate = flp::stable_candidate(game);
  for (auto _ : state) {
    auto report = flp::is_stable_outcome(game, candidate.payoffs);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_EconomyStableOutcome)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
