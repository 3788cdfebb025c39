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

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flp/charnes_cooper.hpp"
#include "flp/coalition.hpp"
#include "flp/exchange_economy.hpp"
#include "flp/instance.hpp"
#include "flp/molp.hpp"
#include "flp/production_game.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;
constexpr int kExitGuard = 4;

constexpr int kMaxPlayers = 12;       // 2^n coalition guard
constexpr int kMaxEnumeratePlayers = 4;  // balanced-collection listing guard

struct GuardError : flp::FlpError {
  using flp::FlpError::FlpError;
};

struct Options {
  std::string command;
  std::string path;
  bool as_json = false;
  bool use_float = false;
  std::optional<std::string> gamma;
  std::optional<std::string> weights;
  int seed = 0;
};

template <class T>
json scalar_json(const T& x) {
  return flp::format_scalar(x);
}

template <class T>
json vector_json(const flp::Vec<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

json coalition_json(const flp::Coalition& s) {
  json out = json::array();
  for (int p : s.members()) out.push_back(p + 1);
  return out;
}

template <class T>
json diagnostics_json(const Options& opt) {
  json d;
  d["mode"] = flp::ScalarTraits<T>::exact ? "rational" : "float";
  d["seed"] = opt.seed;
  return d;
}

template <class T>
std::optional<flp::Vec<T>> parse_weights(const Options& opt,
                                         const flp::Instance<T>& inst) {
  if (opt.weights) {
    flp::Vec<T> out;
    std::stringstream ss(*opt.weights);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const flp::Rational r = flp::parse_rational(item);
      if constexpr (flp::ScalarTraits<T>::exact)
        out.push_back(r);
      else
        out.push_back(r.template convert_to<double>());
    }
    return out;
  }
  return inst.weights;
}

template <class T>
void apply_gamma_override(const Options& opt, T& gamma) {
  if (!opt.gamma) return;
  const flp::Rational r = flp::parse_rational(*opt.gamma);
  if constexpr (flp::ScalarTraits<T>::exact)
    gamma = r;
  else
    gamma = r.template convert_to<double>();
}

template <class T>
void require_kind(const flp::Instance<T>& inst, std::initializer_list<const char*> kinds) {
  for (const char* k : kinds)
    if (inst.kind == k) return;
  std::string expect;
  for (const char* k : kinds) expect += std::string(expect.empty() ? "" : " or ") + k;
  throw flp::ParseError("instance kind \"" + inst.kind + "\" not usable here; expected " +
                        expect);
}

template <class T>
json cmd_solve_flp(const Options& opt) {
  auto inst = flp::load_instance<T>(opt.path);
  require_kind(inst, {"flp"});
  const auto sol = flp::solve_fractional(*inst.flp);
  json rep;
  rep["command"] = "solve-flp";
  rep["value"] = scalar_json(sol.value);
  rep["argmax"] = vector_json(sol.argmax);
  rep["lp_value"] = scalar_json(sol.lp_value);
  rep["values_match"] = flp::detail::is_zero(T(sol.value - sol.lp_value));
  rep["schaible_hypothesis"] = sol.schaible_hypothesis;
  rep["diagnostics"] = diagnostics_json<T>(opt);
  return rep;
}

template <class T>
flp::ProductionGame<T> load_production_game(const Options& opt) {
  auto inst = flp::load_instance<T>(opt.path);
  require_kind(inst, {"production_game"});
  auto game = *inst.production;
  apply_gamma_override(opt, game.gamma);
  if (game.n > kMaxPlayers)
    throw GuardError("instances with more than 12 players are rejected");
  flp::detail::validate_game(game);
  return game;
}

template <class T>
json values_table_json(const flp::ProductionGame<T>& game,
                       const std::map<std::uint32_t, T>& values) {
  json table = json::array();
  for (const auto& s : flp::all_nonempty_coalitions(game.n)) {
    json row;
    row["coalition"] = coalition_json(s);
    row["value"] = scalar_json(values.at(s.bits()));
    table.push_back(row);
  }
  return table;
}

template <class T>
json cmd_core(const Options& opt) {
  const auto game = load_production_game<T>(opt);
  const auto values = flp::characteristic_table(game);
  const auto candidate = flp::core_candidate(game);
  const auto check = flp::is_core_member(game, candidate);

  json rep;
  rep["command"] = "core";
  rep["n"] = game.n;
  rep["gamma"] = scalar_json(game.gamma);
  rep["values"] = values_table_json(game, values);
  const T grand = values.at(flp::Coalition::grand(game.n).bits());
  rep["grand_value"] = scalar_json(grand);
  rep["unscaled_grand_value"] = scalar_json(T(grand / game.gamma));
  rep["allocation"] = vector_json(candidate);
  rep["core_member"] = check.member;
  rep["efficient"] = check.efficient;
  json violations = json::array();
  for (const auto& [s, deficit] : check.violations) {
    json v;
    v["coalition"] = coalition_json(s);
    v["deficit"] = scalar_json(deficit);
    violations.push_back(v);
  }
  rep["violations"] = violations;
  rep["diagnostics"] = diagnostics_json<T>(opt);
  return rep;
}

template <class T>
json collection_json(const flp::BalancedCollection<T>& family) {
  json c;
  c["coalitions"] = json::array();
  for (const auto& s : family.coalitions) c["coalitions"].push_back(coalition_json(s));
  c["weights"] = vector_json(family.weights);
  return c;
}

template <class T>
json cmd_balanced(const Options& opt) {
  const auto game = load_production_game<T>(opt);
  const auto values = flp::characteristic_table(game);
  const auto rep_b = flp::bondareva_check<T>(
      game.n, [&](const flp::Coalition& s) { return values.at(s.bits()); });

  json rep;
  rep["command"] = "balanced";
  rep["n"] = game.n;
  rep["gamma"] = scalar_json(game.gamma);
  rep["values"] = values_table_json(game, values);
  rep["bondareva_optimum"] = scalar_json(rep_b.lp_optimum);
  rep["grand_value"] = scalar_json(rep_b.grand_value);
  rep["balanced"] = rep_b.balanced;
  rep["excess"] = scalar_json(rep_b.excess);
  rep["worst"] = collection_json(rep_b.worst);
  if (game.n <= kMaxEnumeratePlayers) {
    json families = json::array();
    for (const auto& family : flp::enumerate_balanced_collections<T>(game.n))
      families.push_back(collection_json(family));
    rep["balanced_collections"] = families;
  } else {
    rep["balanced_collections_note"] =
        "enumeration skipped for n > 4; the LP verdict above is authoritative";
  }
  rep["diagnostics"] = diagnostics_json<T>(opt);
  return rep;
}

const char* location_name(flp::ValueSetLocation loc) {
  switch (loc) {
    case flp::ValueSetLocation::Outside:
      return "Outside";
    case flp::ValueSetLocation::InteriorOrDominated:
      return "InteriorOrDominated";
    default:
      return "OnMaxFrontier";
  }
}

template <class T, class Game>
json stable_report(const Options& opt, const Game& game,
                   const std::optional<flp::Vec<T>>& weights) {
  flp::StableCandidateResult<T> candidate;
  try {
    candidate = flp::stable_candidate(game, weights);
  } catch (const flp::DegenerateDualObjective&) {
    throw flp::DegenerateDualObjective(
        "scalarized dual objective vanishes; rerun with different --weights");
  }
  const auto check = flp::is_stable_outcome(game, candidate.payoffs);

  json rep;
  rep["command"] = "stable";
  rep["n"] = game.player_count();
  rep["num_objectives"] = game.num_objectives();
  rep["gamma"] = scalar_json(game.gamma);
  rep["weights"] = vector_json(candidate.weights);
  json payoffs = json::array();
  for (const auto& row : candidate.payoffs) payoffs.push_back(vector_json(row));
  rep["payoffs"] = payoffs;
  rep["dual_objective"] = vector_json(candidate.dual_objective);
  json classes = json::array();
  for (const auto& s : flp::all_nonempty_coalitions(game.player_count())) {
    json c;
    c["coalition"] = coalition_json(s);
    c["location"] = location_name(check.classifications.at(s.bits()));
    classes.push_back(c);
  }
  rep["classifications"] = classes;
  rep["stable"] = check.stable;
  json blocking = json::array();
  for (const auto& s : check.blocking) blocking.push_back(coalition_json(s));
  rep["blocking"] = blocking;
  rep["diagnostics"] = diagnostics_json<T>(opt);
  return rep;
}

template <class T>
json cmd_stable(const Options& opt) {
  auto inst = flp::load_instance<T>(opt.path);
  require_kind(inst, {"multi_production_game", "exchange_economy"});
  const auto weights = parse_weights<T>(opt, inst);

  if (inst.kind == "multi_production_game") {
    auto game = *inst.multi;
    apply_gamma_override(opt, game.gamma);
    if (game.n > kMaxPlayers)
      throw GuardError("instances with more than 12 players are rejected");
    flp::validate_multi_game(game);
    return stable_report<T>(opt, game, weights);
  }

  auto economy = *inst.economy;
  if (economy.n > kMaxPlayers)
    throw GuardError("instances with more than 12 agents are rejected");
  T gamma = inst.gamma ? *inst.gamma : flp::default_gamma<T>(economy.n);
  apply_gamma_override(opt, gamma);
  const auto game = flp::build_economy_game(economy, gamma);
  json rep = stable_report<T>(opt, game, weights);
  rep["economy"] = json::object();
  rep["economy"]["goods"] = economy.m;
  rep["economy"]["constraint_rows_per_coalition"] = economy.n + 2 * economy.m;
  rep["economy"]["allocation_vars"] = economy.n * economy.m;
  json endow = json::array();
  for (const auto& e : economy.endowments) endow.push_back(vector_json(e));
  rep["economy"]["endowments"] = endow;
  return rep;
}

std::string text_table(const json& values) {
  std::ostringstream out;
  std::size_t width = 9;
  for (const auto& row : values) {
    std::string label = row["coalition"].dump();
    width = std::max(width, label.size());
  }
  out << "  coalition";
  for (std::size_t i = 9; i < width; ++i) out << ' ';
  out << "  V(S)\n";
  for (const auto& row : values) {
    const std::string label = row["coalition"].dump();
    out << "  " << label;
    for (std::size_t i = label.size(); i < width; ++i) out << ' ';
    out << "  " << row["value"].get<std::string>() << "\n";
  }
  return out.str();
}

std::string join_strings(const json& arr) {
  std::string out = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += arr[i].get<std::string>();
  }
  return out + ")";
}

void print_text(const json& rep) {
  const std::string command = rep["command"];
  std::cout << command << " report\n";
  if (command == "solve-flp") {
    std::cout << "  fractional optimum: " << rep["value"].get<std::string>() << "\n"
              << "  argmax: " << join_strings(rep["argmax"]) << "\n"
              << "  transformed LP optimum: " << rep["lp_value"].get<std::string>()
              << "\n"
              << "  equivalence holds: " << (rep["values_match"].get<bool>() ? "yes" : "no")
              << "\n"
              << "  sign hypothesis satisfied: "
              << (rep["schaible_hypothesis"].get<bool>() ? "yes" : "no") << "\n";
    return;
  }
  if (command == "core" || command == "balanced") {
    std::cout << text_table(rep["values"]);
    std::cout << "  gamma: " << rep["gamma"].get<std::string>() << "\n";
  }
  if (command == "core") {
    std::cout << "  unscaled grand optimum: "
              << rep["unscaled_grand_value"].get<std::string>() << "\n"
              << "  core candidate u: " << join_strings(rep["allocation"]) << "\n"
              << "  core member: " << (rep["core_member"].get<bool>() ? "yes" : "no")
              << "\n";
    for (const auto& v : rep["violations"])
      std::cout << "    violated by " << v["coalition"].dump() << " (deficit "
                << v["deficit"].get<std::string>() << ")\n";
  } else if (command == "balanced") {
    std::cout << "  Bondareva optimum: " << rep["bondareva_optimum"].get<std::string>()
              << "\n"
              << "  V(N): " << rep["grand_value"].get<std::string>() << "\n"
              << "  balanced: " << (rep["balanced"].get<bool>() ? "yes" : "no") << "\n";
    if (rep.contains("balanced_collections")) {
      std::cout << "  balanced collections (" << rep["balanced_collections"].size()
                << "):\n";
      for (const auto& c : rep["balanced_collections"]) {
        std::cout << "   ";
        for (std::size_t i = 0; i < c["coalitions"].size(); ++i)
          std::cout << " " << c["coalitions"][i].dump() << " x "
                    << c["weights"][i].get<std::string>();
        std::cout << "\n";
      }
    } else {
      std::cout << "  " << rep["balanced_collections_note"].get<std::string>() << "\n";
    }
  } else if (command == "stable") {
    std::cout << "  gamma: " << rep["gamma"].get<std::string>() << "\n"
              << "  weights: " << join_strings(rep["weights"]) << "\n"
              << "  payoff matrix:\n";
    for (const auto& row : rep["payoffs"])
      std::cout << "    " << join_strings(row) << "\n";
    std::cout << "  coalition classifications:\n";
    for (const auto& c : rep["classifications"])
      std::cout << "    " << c["coalition"].dump() << ": "
                << c["location"].get<std::string>() << "\n";
    std::cout << "  stable outcome: " << (rep["stable"].get<bool>() ? "yes" : "no")
              << "\n";
    if (rep.contains("economy")) {
      const auto& eco = rep["economy"];
      std::cout << "  economy: " << rep["n"] << " agents, " << eco["goods"]
                << " goods, " << eco["allocation_vars"] << " allocation variables, "
                << eco["constraint_rows_per_coalition"] << " rows per coalition\n";
      std::cout << "  endowments:\n";
      for (const auto& e : eco["endowments"]) std::cout << "    " << join_strings(e) << "\n";
    }
  }
}

template <class T>
int run(const Options& opt) {
  json rep;
  if (opt.command == "solve-flp")
    rep = cmd_solve_flp<T>(opt);
  else if (opt.command == "core")
    rep = cmd_core<T>(opt);
  else if (opt.command == "balanced")
    rep = cmd_balanced<T>(opt);
  else
    rep = cmd_stable<T>(opt);

  if (opt.as_json)
    std::cout << rep.dump(2) << "\n";
  else
    print_text(rep);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional linear production games: Charnes-Cooper reduction, "
               "core allocations, balancedness, stable outcomes"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.path, "JSON instance file")->required();
    sub->add_flag("--json", opt.as_json, "machine-readable JSON report");
    sub->add_flag("--float", opt.use_float,
                  "float arithmetic (1e-9 tolerance) instead of exact rationals");
    sub->add_option("--gamma", opt.gamma, "override the grand-coalition scale (> n)");
    sub->add_option("--weights", opt.weights,
                    "comma-separated positive scalarization weights");
    sub->add_option("--seed", opt.seed, "seed for randomized tie-breaking (unused by "
                                        "the deterministic solver; recorded in reports)");
  };
  add_common(app.add_subcommand("solve-flp", "solve one fractional linear program"));
  add_common(app.add_subcommand("core", "characteristic function and core allocation"));
  add_common(app.add_subcommand("balanced", "Bondareva balancedness check"));
  add_common(app.add_subcommand("stable", "stable-outcome construction and check"));

  CLI11_PARSE(app, argc, argv);
  opt.command = app.get_subcommands().front()->get_name();

  try {
    return opt.use_float ? run<double>(opt) : run<flp::Rational>(opt);
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const flp::TooManyPlayers& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const flp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const flp::MalformedProgram& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const flp::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const flp::NonpositiveWeight& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const flp::FlpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}
