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

#ifndef GLIM_GRAPH_BALL_HPP_
#define GLIM_GRAPH_BALL_HPP_

#include <cstdint>
#include <vector>

#include "glim/graph/marked_graph.hpp"

namespace glim {

/// Subgraph spanned by the vertices within `radius` of a center. The center
/// is always ball vertex 0 and ball vertices are numbered in BFS order.
///
/// `boundary[i]` is set when vertex i may be missing neighbours, which only
/// happens for truncations of infinite objects (trees generated to a depth).
/// Balls cut out of a finite graph never set it.
struct RootedBall {
  static constexpr VertexId center = 0;

  MarkedGraph graph;
  std::uint32_t radius = 0;
  std::vector<std::uint32_t> distance;
  /// Ball vertex -> vertex of the graph it was cut from (or projected to).
  std::vector<VertexId> origin;
  std::vector<bool> boundary;

  std::size_t size() const { return graph.vertex_count(); }
  bool truncated() const;
  /// Smallest distance of a boundary vertex; kUnreachable if none.
  std::uint32_t exact_depth() const;
};

/// Ball around a distinguished half-edge: every vertex within `radius` of
/// either endpoint of `root`. Vertex 0 is the source of `root`.
struct EdgeRootedBall {
  MarkedGraph graph;
  HalfEdgeId root = 0;
  std::uint32_t radius = 0;
  std::vector<VertexId> origin;
};

RootedBall ball(const MarkedGraph& g, VertexId v, std::uint32_t r);

EdgeRootedBall edge_ball(const MarkedGraph& g, HalfEdgeId e, std::uint32_t r);

/// Induced subgraph on `vertices` (in the given order). Half-edge order
/// follows the source graph. `half_edge_map`, when non-null, receives the
/// source half-edge id of every kept half-edge.
MarkedGraph induced_subgraph(const MarkedGraph& g,
                             const std::vector<VertexId>& vertices,
                             std::vector<HalfEdgeId>* half_edge_map = nullptr);

}  // namespace glim

#endif  // GLIM_GRAPH_BALL_HPP_
