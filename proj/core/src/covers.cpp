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

#include "glim/generators/covers.hpp"

#include <stdexcept>

#include "glim/generators/ensembles.hpp"

namespace glim {

MarkedGraph n_lift(const MarkedGraph& base, const PermutationRep& rep) {
  if (static_cast<std::size_t>(rep.d()) != base.edge_count()) {
    throw std::invalid_argument("need one permutation per base edge: have " +
                                std::to_string(rep.d()) + ", base has " +
                                std::to_string(base.edge_count()) + " edges");
  }
  const std::size_t n = rep.n();
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Mark> marks;
  edges.reserve(base.edge_count() * n);
  for (std::size_t i = 0; i < base.edge_count(); ++i) {
    const auto e = static_cast<HalfEdgeId>(2 * i);
    const auto& sigma = rep.perm(static_cast<int>(i) + 1);
    for (std::uint32_t x = 0; x < n; ++x) {
      edges.emplace_back(static_cast<VertexId>(base.source(e) * n + x),
                         static_cast<VertexId>(base.target(e) * n + sigma[x]));
      if (base.has_marks()) {
        marks.push_back(base.mark(e));
        marks.push_back(base.mark(e + 1));
      }
    }
  }
  return MarkedGraph::from_half_edges(base.vertex_count() * n, edges, marks);
}

MarkedGraph random_lift(const MarkedGraph& base, std::size_t n, Seed seed) {
  return n_lift(base, uniform_rep(n, static_cast<int>(base.edge_count()), seed));
}

RootedBall universal_cover_ball(const MarkedGraph& base, VertexId root, std::uint32_t r,
                                std::size_t max_vertices) {
  if (root >= base.vertex_count()) throw std::out_of_range("root out of range");
  RootedBall b;
  b.radius = r;
  b.origin = {root};
  b.distance = {0};
  std::vector<HalfEdgeId> incoming = {kUnreachable};
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Mark> marks;
  for (std::size_t head = 0; head < b.origin.size(); ++head) {
    if (b.distance[head] == r) continue;
    for (HalfEdgeId e : base.out_half_edges(b.origin[head])) {
      if (incoming[head] != kUnreachable && e == MarkedGraph::partner(incoming[head])) continue;
      if (b.origin.size() >= max_vertices) throw BudgetError("cover ball exceeds vertex budget");
      const auto child = static_cast<VertexId>(b.origin.size());
      b.origin.push_back(base.target(e));
      b.distance.push_back(b.distance[head] + 1);
      incoming.push_back(e);
      edges.emplace_back(static_cast<VertexId>(head), child);
      if (base.has_marks()) {
        marks.push_back(base.mark(e));
        marks.push_back(base.mark(MarkedGraph::partner(e)));
      }
    }
  }
  const std::size_t n = b.origin.size();
  b.graph = MarkedGraph::from_half_edges(n, edges, marks);
  b.boundary.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    // Continuations exist unless the only out half-edge is the way back.
    b.boundary[v] = b.distance[v] == r && base.degree(b.origin[v]) > (v == 0 ? 0u : 1u);
  }
  return b;
}

}  // namespace glim
