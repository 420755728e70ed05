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

#ifndef GLIM_GRAPH_NEIGHBORHOOD_HPP_
#define GLIM_GRAPH_NEIGHBORHOOD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "glim/graph/ball.hpp"
#include "glim/graph/canonical.hpp"

namespace glim {

/// Law of the radius-r ball around a uniform root.
struct NeighborhoodDistribution {
  struct Entry {
    RootedBallClass cls;
    std::size_t count = 0;
    double weight = 0.0;
  };

  std::uint32_t radius = 0;
  std::size_t sample_count = 0;
  /// Sorted by class code.
  std::vector<Entry> entries;

  double weight(const RootedBallClass& cls) const;
  double total_weight() const;
  bool all_exact() const;

  /// Builds a distribution from raw class samples (one per root).
  static NeighborhoodDistribution from_samples(
      std::uint32_t radius, std::vector<RootedBallClass> samples);
};

NeighborhoodDistribution neighborhood_distribution(
    const MarkedGraph& g, std::uint32_t r,
    const CanonicalOptions& options = {});

/// Total variation distance: half the l1 distance between the weights.
double total_variation(const NeighborhoodDistribution& a,
                       const NeighborhoodDistribution& b);

nlohmann::json to_json(const NeighborhoodDistribution& d);

/// Edge-rooted test function for the mass-transport identity. It sees the
/// radius-r ball around the root half-edge and that ball's class.
using EdgeTestFunction =
    std::function<double(const EdgeRootedBall&, const RootedBallClass&)>;

struct UnimodularityGap {
  double lhs = 0.0;  // E_U(G) sum over half-edges leaving the root
  double rhs = 0.0;  // E_U(G) sum over half-edges entering the root
  double relative_gap() const;
};

UnimodularityGap unimodularity_gap(const MarkedGraph& g,
                                   const EdgeTestFunction& f, std::uint32_t r,
                                   const CanonicalOptions& options = {});

}  // namespace glim

#endif  // GLIM_GRAPH_NEIGHBORHOOD_HPP_
