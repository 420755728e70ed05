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

#ifndef GLIM_EXPERIMENTS_REGISTRY_HPP_
#define GLIM_EXPERIMENTS_REGISTRY_HPP_

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "glim/experiments/experiments.hpp"

namespace glim {

struct ExperimentPreset {
  std::string name;
  std::string summary;
  /// Default parameters, including the preset seed.
  nlohmann::json defaults;
  /// Runs with `params` merged over the defaults.
  std::function<ExperimentReport(const nlohmann::json& params, Seed seed, const RunOptions&)>
      run;
};

const std::vector<ExperimentPreset>& experiment_presets();
/// Throws std::invalid_argument for unknown names.
const ExperimentPreset& find_preset(const std::string& name);

/// Merges `overrides` into the preset defaults, rejecting unknown keys, then
/// runs. The seed comes from `seed` or the merged "seed" entry.
ExperimentReport run_experiment(const std::string& name, const nlohmann::json& overrides,
                                const RunOptions& run = {});

/// Parses "adjacency", "identity", "cycle" or a JSON algebra element.
AlgebraElement parse_element(const nlohmann::json& j, int generators);

}  // namespace glim

#endif  // GLIM_EXPERIMENTS_REGISTRY_HPP_
