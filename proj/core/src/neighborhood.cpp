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

#include "glim/graph/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace glim {

double NeighborhoodDistribution::weight(const RootedBallClass& cls) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), cls,
                             [](const Entry& e, const RootedBallClass& c) { return e.cls < c; });
  if (it == entries.end() || it->cls != cls) return 0.0;
  return it->weight;
}

double NeighborhoodDistribution::total_weight() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.weight;
  return s;
}

bool NeighborhoodDistribution::all_exact() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.cls.exact; });
}

NeighborhoodDistribution NeighborhoodDistribution::from_samples(
    std::uint32_t radius, std::vector<RootedBallClass> samples) {
  NeighborhoodDistribution d;
  d.radius = radius;
  d.sample_count = samples.size();
  std::sort(samples.begin(), samples.end());
  for (std::size_t i = 0; i < samples.size();) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    Entry e;
    e.cls = std::move(samples[i]);
    e.count = j - i;
    e.weight = static_cast<double>(e.count) / static_cast<double>(d.sample_count);
    d.entries.push_back(std::move(e));
    i = j;
  }
  return d;
}

NeighborhoodDistribution neighborhood_distribution(const MarkedGraph& g, std::uint32_t r,
                                                   const CanonicalOptions& options) {
  std::vector<RootedBallClass> samples;
  samples.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    samples.push_back(canonical_class(ball(g, v, r), options));
  }
  return NeighborhoodDistribution::from_samples(r, std::move(samples));
}

double total_variation(const NeighborhoodDistribution& a, const NeighborhoodDistribution& b) {
  double l1 = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.entries.size() || j < b.entries.size()) {
    if (j == b.entries.size() || (i < a.entries.size() && a.entries[i].cls < b.entries[j].cls)) {
      l1 += a.entries[i++].weight;
    } else if (i == a.entries.size() || b.entries[j].cls < a.entries[i].cls) {
      l1 += b.entries[j++].weight;
    } else {
      l1 += std::abs(a.entries[i++].weight - b.entries[j++].weight);
    }
  }
  return 0.5 * l1;
}

nlohmann::json to_json(const NeighborhoodDistribution& d) {
  nlohmann::json out;
  out["radius"] = d.radius;
  out["sample_count"] = d.sample_count;
  out["all_exact"] = d.all_exact();
  auto& arr = out["classes"] = nlohmann::json::array();
  for (const auto& e : d.entries) {
    arr.push_back({{"code", e.cls.hex()},
                   {"size", e.cls.size},
                   {"exact", e.cls.exact},
                   {"count", e.count},
                   {"weight", e.weight}});
  }
  return out;
}

double UnimodularityGap::relative_gap() const {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

UnimodularityGap unimodularity_gap(const MarkedGraph& g, const EdgeTestFunction& f,
                                   std::uint32_t r, const CanonicalOptions& options) {
  std::vector<double> value(g.half_edge_count());
  for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) {
    const EdgeRootedBall b = edge_ball(g, e, r);
    value[e] = f(b, canonical_class(b, options));
  }
  // Per-vertex sums, then the average over a uniform root.
  std::vector<double> out_sum(g.vertex_count(), 0.0), in_sum(g.vertex_count(), 0.0);
  for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) {
    out_sum[g.source(e)] += value[e];
    in_sum[g.target(e)] += value[e];
  }
  UnimodularityGap gap;
  const double n = static_cast<double>(std::max<std::size_t>(g.vertex_count(), 1));
  gap.lhs = std::accumulate(out_sum.begin(), out_sum.end(), 0.0) / n;
  gap.rhs = std::accumulate(in_sum.begin(), in_sum.end(), 0.0) / n;
  return gap;
}

}  // namespace glim
