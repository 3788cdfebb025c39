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

#ifndef FLP_INSTANCE_HPP
#define FLP_INSTANCE_HPP

#include <fstream>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "flp/charnes_cooper.hpp"
#include "flp/exchange_economy.hpp"
#include "flp/molp.hpp"
#include "flp/production_game.hpp"
#include "flp/rational.hpp"

namespace flp {

struct ParseError : FlpError {
  using FlpError::FlpError;
};

/// Instance file contents. "kind" selects which optional is populated.
template <class T>
struct Instance {
  std::string kind;
  std::optional<FractionalProgram<T>> flp;
  std::optional<ProductionGame<T>> production;
  std::optional<MultiProductionGame<T>> multi;
  std::optional<ExchangeEconomy<T>> economy;
  std::optional<T> gamma;      // explicit "gamma" field, validated by the caller
  std::optional<Vec<T>> weights;
};

namespace detail {

/// Integers stay exact; "num/den" and decimal strings parse exactly in
/// rational mode; JSON decimals arrive as binary doubles and convert from
/// that binary value.
template <class T>
T scalar_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return T(v.get<long long>());
  if (v.is_number_float()) return T(v.get<double>());
  if (v.is_string()) {
    const Rational r = parse_rational(v.get<std::string>());
    if constexpr (ScalarTraits<T>::exact)
      return r;
    else
      return r.template convert_to<double>();
  }
  throw ParseError("expected a number or rational string, got " + v.dump());
}

template <class T>
Vec<T> vector_from_json(const nlohmann::json& v) {
  if (!v.is_array()) throw ParseError("expected an array, got " + v.dump());
  Vec<T> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(scalar_from_json<T>(x));
  return out;
}

template <class T>
Mat<T> matrix_from_json(const nlohmann::json& v) {
  if (!v.is_array()) throw ParseError("expected a matrix, got " + v.dump());
  Mat<T> out;
  out.reserve(v.size());
  for (const auto& row : v) out.push_back(vector_from_json<T>(row));
  return out;
}

inline const nlohmann::json& field(const nlohmann::json& j, const std::string& name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError("missing field \"" + name + "\"");
  return *it;
}

template <class T>
FractionalObjective<T> objective_from_json(const nlohmann::json& j) {
  FractionalObjective<T> obj;
  obj.numerator_coeffs = vector_from_json<T>(field(j, "c"));
  obj.numerator_const = scalar_from_json<T>(field(j, "c0"));
  obj.denominator_coeffs = vector_from_json<T>(field(j, "d"));
  obj.denominator_const = scalar_from_json<T>(field(j, "d0"));
  return obj;
}

}  // namespace detail

template <class T>
Instance<T> parse_instance(const nlohmann::json& j) {
  using namespace detail;
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  Instance<T> inst;
  inst.kind = field(j, "kind").template get<std::string>();
  if (j.contains("gamma")) inst.gamma = scalar_from_json<T>(j.at("gamma"));
  if (j.contains("weights")) inst.weights = vector_from_json<T>(j.at("weights"));

  if (inst.kind == "flp") {
    FractionalProgram<T> fp;
    fp.objective = objective_from_json<T>(field(j, "objective"));
    fp.technology = matrix_from_json<T>(field(j, "A"));
    fp.rhs = vector_from_json<T>(field(j, "b"));
    inst.flp = std::move(fp);
  } else if (inst.kind == "production_game") {
    ProductionGame<T> game;
    game.n = field(j, "n").template get<int>();
    game.technology = matrix_from_json<T>(field(j, "A"));
    for (const auto& e : field(j, "endowments"))
      game.endowments.push_back(vector_from_json<T>(e));
    game.objective = objective_from_json<T>(field(j, "objective"));
    game.gamma = inst.gamma ? *inst.gamma : default_gamma<T>(game.n);
    inst.production = std::move(game);
  } else if (inst.kind == "multi_production_game") {
    MultiProductionGame<T> game;
    game.n = field(j, "n").template get<int>();
    game.technology = matrix_from_json<T>(field(j, "A"));
    for (const auto& e : field(j, "endowments"))
      game.endowments.push_back(vector_from_json<T>(e));
    for (const auto& o : field(j, "objectives"))
      game.objectives.push_back(objective_from_json<T>(o));
    game.gamma = inst.gamma ? *inst.gamma : default_gamma<T>(game.n);
    inst.multi = std::move(game);
  } else if (inst.kind == "exchange_economy") {
    ExchangeEconomy<T> economy;
    economy.n = field(j, "n").template get<int>();
    economy.m = field(j, "m").template get<int>();
    for (const auto& e : field(j, "endowments"))
      economy.endowments.push_back(vector_from_json<T>(e));
    for (const auto& o : field(j, "objectives"))
      economy.utilities.push_back(objective_from_json<T>(o));
    inst.economy = std::move(economy);
  } else {
    throw ParseError("unknown instance kind \"" + inst.kind + "\"");
  }
  return inst;
}

template <class T>
Instance<T> load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_instance<T>(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

}  // namespace flp

#endif  // FLP_INSTANCE_HPP
