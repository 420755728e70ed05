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

#ifndef GLIM_GENERATORS_COVERS_HPP_
#define GLIM_GENERATORS_COVERS_HPP_

#include <cstddef>
#include <cstdint>

#include "glim/generators/rng.hpp"
#include "glim/graph/ball.hpp"
#include "glim/graph/marked_graph.hpp"
#include "glim/group/permutation_rep.hpp"

namespace glim {

/// n-lift with one permutation per base edge (rep.d() == edge count).
/// Vertex (v, x) is v * n + x; lifted edge (i, x) has half-edges
/// 2(i n + x) from (u, x) to (v, sigma_i(x)) and its partner, where base
/// half-edge 2i runs from u to v. Marks are copied from the base.
MarkedGraph n_lift(const MarkedGraph& base, const PermutationRep& rep);

MarkedGraph random_lift(const MarkedGraph& base, std::size_t n, Seed seed);

inline VertexId lift_vertex_projection(VertexId lifted, std::size_t n) {
  return static_cast<VertexId>(lifted / n);
}

inline HalfEdgeId lift_half_edge_projection(HalfEdgeId lifted, std::size_t n) {
  return static_cast<HalfEdgeId>(2 * ((lifted / 2) / n) + (lifted & 1u));
}

/// Tree of non-backtracking paths of length <= r from `root`. `origin`
/// holds the projection of each tree vertex; vertices at depth r are
/// flagged as boundary when their base vertex has further continuations.
RootedBall universal_cover_ball(const MarkedGraph& base, VertexId root, std::uint32_t r,
                                std::size_t max_vertices = 10'000'000);

}  // namespace glim

#endif  // GLIM_GENERATORS_COVERS_HPP_
