// Copyright 2026 The glim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "glim/experiments/registry.hpp"

#include <stdexcept>

namespace glim {
namespace {

using json = nlohmann::json;

template <typename T>
T get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("parameter '") + key + "': " + e.what());
  }
}

ExperimentReport run_bs(const json& j, Seed seed, const RunOptions& run) {
  BsConvergenceParams p;
  p.ensemble = get<std::string>(j, "ensemble");
  p.n_list = get<std::vector<std::size_t>>(j, "n_list");
  p.d = get<double>(j, "d");
  p.rep = get<std::string>(j, "rep");
  p.r = get<std::uint32_t>(j, "r");
  p.limit = get<std::string>(j, "limit");
  p.gw_samples = get<std::size_t>(j, "gw_samples");
  p.seeds = get<std::size_t>(j, "seeds");
  p.max_word_length = get<std::size_t>(j, "max_word_length");
  p.tv_tolerance = get<double>(j, "tv_tolerance");
  p.fixed_point_tolerance = get<double>(j, "fixed_point_tolerance");
  return exp_bs_convergence(p, seed, run);
}

ExperimentReport run_km(const json& j, Seed seed, const RunOptions& run) {
  KestenMckayParams p;
  p.n = get<std::size_t>(j, "n");
  p.d = get<std::size_t>(j, "d");
  p.ks_tolerance = get<double>(j, "ks_tolerance");
  p.moment_tolerance = get<double>(j, "moment_tolerance");
  p.max_moment = get<std::size_t>(j, "max_moment");
  return exp_kesten_mckay(p, seed, run);
}

ExperimentReport run_gw(const json& j, Seed seed, const RunOptions& run) {
  GwKernelParams p;
  p.n = get<std::size_t>(j, "n");
  p.d = get<double>(j, "d");
  p.trials = get<std::size_t>(j, "trials");
  p.tolerance = get<double>(j, "tolerance");
  return exp_gw_kernel(p, seed, run);
}

ExperimentReport run_friedman(const json& j, Seed seed, const RunOptions& run) {
  FriedmanParams p;
  p.n = get<std::size_t>(j, "n");
  p.d = get<std::size_t>(j, "d");
  p.trials = get<std::size_t>(j, "trials");
  p.eps = get<double>(j, "eps");
  p.pass_fraction = get<double>(j, "pass_fraction");
  p.simple = get<bool>(j, "simple");
  return exp_friedman(p, seed, run);
}

ExperimentReport run_er(const json& j, Seed seed, const RunOptions& run) {
  ErEdgesParams p;
  p.n = get<std::size_t>(j, "n");
  p.d = get<double>(j, "d");
  p.trials = get<std::size_t>(j, "trials");
  p.eps = get<double>(j, "eps");
  p.lambda1_tolerance = get<double>(j, "lambda1_tolerance");
  p.pass_fraction = get<double>(j, "pass_fraction");
  p.scatter_n = get<std::size_t>(j, "scatter_n");
  return exp_er_edges(p, seed, run);
}

ExperimentReport run_strong(const json& j, Seed seed, const RunOptions& run) {
  StrongConvergenceParams p;
  p.element = parse_element(j.at("element"), get<int>(j, "generators"));
  p.n_list = get<std::vector<std::size_t>>(j, "n_list");
  p.trials = get<std::size_t>(j, "trials");
  p.gap_tolerance = get<double>(j, "gap_tolerance");
  p.decrease_fraction = get<double>(j, "decrease_fraction");
  p.lower_bound_power = get<std::size_t>(j, "lower_bound_power");
  p.lower_bound_tolerance = get<double>(j, "lower_bound_tolerance");
  return exp_strong_convergence(p, seed, run);
}

ExperimentReport run_ab(const json& j, Seed seed, const RunOptions& run) {
  AlonBoppanaParams p;
  p.element = parse_element(j.at("element"), get<int>(j, "generators"));
  p.rep = get<std::string>(j, "rep");
  p.n = get<std::size_t>(j, "n");
  p.l_max = get<std::size_t>(j, "l_max");
  return exp_alon_boppana_bound(p, seed, run);
}

ExperimentReport run_distance(const json& j, Seed seed, const RunOptions& run) {
  DistanceProfileParams p;
  p.generators = get<int>(j, "generators");
  p.rep = get<std::string>(j, "rep");
  p.n = get<std::size_t>(j, "n");
  p.eps = get<double>(j, "eps");
  p.control_eps = get<double>(j, "control_eps");
  p.sources = get<std::size_t>(j, "sources");
  p.max_fraction = get<double>(j, "max_fraction");
  p.control_min_fraction = get<double>(j, "control_min_fraction");
  return exp_distance_profile(p, seed, run);
}

ExperimentReport run_cover(const json& j, Seed seed, const RunOptions& run) {
  CoverSpectrumParams p;
  p.base = get<std::string>(j, "base");
  p.n = get<std::size_t>(j, "n");
  p.trials = get<std::size_t>(j, "trials");
  p.eps = get<double>(j, "eps");
  p.old_tolerance = get<double>(j, "old_tolerance");
  p.pass_fraction = get<double>(j, "pass_fraction");
  p.walk_length = get<std::size_t>(j, "walk_length");
  return exp_cover_spectrum(p, seed, run);
}

std::vector<ExperimentPreset> build_presets() {
  std::vector<ExperimentPreset> v;
  v.push_back({"bs-convergence",
               "TV distance of r-ball laws to the local limit; Schreier fixed-point fractions",
               {{"seed", 1}, {"ensemble", "regular"}, {"n_list", {10000}}, {"d", 4.0},
                {"rep", "uniform"}, {"r", 2}, {"limit", "Td"}, {"gw_samples", 100000},
                {"seeds", 1}, {"max_word_length", 3}, {"tv_tolerance", 0.03},
                {"fixed_point_tolerance", 0.01}},
               run_bs});
  v.push_back({"kesten-mckay", "adjacency ESD of a random regular graph vs the tree law",
               {{"seed", 1}, {"n", 4000}, {"d", 4}, {"ks_tolerance", 0.02},
                {"moment_tolerance", 0.02}, {"max_moment", 6}},
               run_km});
  v.push_back({"gw-kernel", "adjacency nullity of Erdos-Renyi graphs vs the GW kernel mass",
               {{"seed", 1}, {"n", 4000}, {"d", 4.0}, {"trials", 5}, {"tolerance", 0.01}},
               run_gw});
  v.push_back({"friedman", "second adjacency and non-backtracking eigenvalues of regular graphs",
               {{"seed", 1}, {"n", 2000}, {"d", 4}, {"trials", 20}, {"eps", 0.1},
                {"pass_fraction", 0.95}, {"simple", true}},
               run_friedman});
  v.push_back({"er-edges", "non-backtracking spectrum edges of Erdos-Renyi graphs",
               {{"seed", 1}, {"n", 2000}, {"d", 4.0}, {"trials", 20}, {"eps", 0.2},
                {"lambda1_tolerance", 0.4}, {"pass_fraction", 0.8}, {"scatter_n", 1000}},
               run_er});
  v.push_back({"strong-convergence",
               "restricted norms of random permutation representations vs the free norm",
               {{"seed", 1}, {"element", "adjacency"}, {"generators", 2},
                {"n_list", {1000, 10000}}, {"trials", 5}, {"gap_tolerance", 0.15},
                {"decrease_fraction", 0.8}, {"lower_bound_power", 12},
                {"lower_bound_tolerance", 0.08}},
               run_strong});
  v.push_back({"alon-boppana", "both sides of the trace lower bound for restricted norms",
               {{"seed", 1}, {"element", "adjacency"}, {"generators", 2}, {"rep", "uniform"},
                {"n", 2000}, {"l_max", 6}},
               run_ab});
  v.push_back({"distance-profile", "far-vertex fractions in random Schreier graphs",
               {{"seed", 1}, {"generators", 2}, {"rep", "uniform"}, {"n", 100000},
                {"eps", 0.2}, {"control_eps", -0.5}, {"sources", 20}, {"max_fraction", 0.05},
                {"control_min_fraction", 0.5}},
               run_distance});
  v.push_back({"cover-spectrum", "old and new eigenvalues of random lifts",
               {{"seed", 1}, {"base", "theta3"}, {"n", 1000}, {"trials", 5}, {"eps", 0.2},
                {"old_tolerance", 1e-8}, {"pass_fraction", 0.8}, {"walk_length", 12}},
               run_cover});
  return v;
}

}  // namespace

const std::vector<ExperimentPreset>& experiment_presets() {
  static const std::vector<ExperimentPreset> presets = build_presets();
  return presets;
}

const ExperimentPreset& find_preset(const std::string& name) {
  for (const auto& p : experiment_presets()) {
    if (p.name == name) return p;
  }
  std::string known;
  for (const auto& p : experiment_presets()) known += (known.empty() ? "" : ", ") + p.name;
  throw std::invalid_argument("unknown experiment '" + name + "' (known: " + known + ")");
}

ExperimentReport run_experiment(const std::string& name, const json& overrides,
                                const RunOptions& run) {
  const ExperimentPreset& preset = find_preset(name);
  json params = preset.defaults;
  if (!overrides.is_null() && !overrides.is_object()) {
    throw std::invalid_argument("experiment parameters must be a table");
  }
  for (auto it = overrides.begin(); overrides.is_object() && it != overrides.end(); ++it) {
    std::string key = it.key();
    json value = it.value();
    // Shorthands shared by the command line across presets.
    if (key == "n" && !params.contains("n") && params.contains("n_list")) {
      key = "n_list";
      value = json::array({value});
    } else if (key == "trials" && !params.contains("trials")) {
      if (params.contains("seeds")) key = "seeds";
      else if (params.contains("sources")) key = "sources";
    }
    if (!params.contains(key)) {
      throw std::invalid_argument("unknown parameter '" + it.key() + "' for experiment " + name);
    }
    params[key] = value;
  }
  const Seed seed{get<std::uint64_t>(params, "seed")};
  json body = params;
  body.erase("seed");
  return preset.run(body, seed, run);
}

AlgebraElement parse_element(const json& j, int generators) {
  if (generators < 1) throw std::invalid_argument("need at least one generator");
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "adjacency") return AlgebraElement::adjacency(generators);
    if (s == "identity") return AlgebraElement::identity(generators);
    if (s == "cycle") {
      return AlgebraElement::word(generators, Word::generator(1)) +
             AlgebraElement::word(generators, Word::generator(1).inverse());
    }
    throw std::invalid_argument("unknown element '" + s +
                                "' (expected adjacency, identity, cycle or JSON terms)");
  }
  return algebra_from_json(j);
}

}  // namespace glim
