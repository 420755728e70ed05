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

#ifndef GLIM_GRAPH_MARKED_GRAPH_HPP_
#define GLIM_GRAPH_MARKED_GRAPH_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace glim {

using VertexId = std::uint32_t;
using HalfEdgeId = std::uint32_t;
using Mark = std::complex<double>;

inline constexpr std::uint32_t kUnreachable =
    std::numeric_limits<std::uint32_t>::max();

/// One unordered edge as given to the builder. When `mark` is set, the
/// half-edge u->v carries it and v->u carries its conjugate.
struct EdgeSpec {
  VertexId u = 0;
  VertexId v = 0;
  std::optional<Mark> mark;
};

/// Finite multigraph stored as paired half-edges.
///
/// Unordered edge i owns half-edges 2i (source u) and 2i+1 (source v), so the
/// involution e -> e^{-1} is `e ^ 1`: fixed-point free by construction. A
/// self-loop at v contributes two half-edges with source v, hence degree 2.
/// Marks are optional; when present every half-edge carries one.
class MarkedGraph {
 public:
  MarkedGraph() = default;

  /// Builds from unordered edges. Edges with a mark get Hermitian marks
  /// (xi(e^{-1}) = conj xi(e)); edges without one get mark 1 if any other
  /// edge is marked. Throws std::out_of_range on a bad vertex id.
  static MarkedGraph from_edges(std::size_t vertex_count,
                                std::span<const EdgeSpec> edges);

  /// Builds from unordered edges with one explicit mark per half-edge:
  /// `half_edge_marks[2i]` for u->v and `[2i+1]` for v->u. An empty span
  /// produces an unmarked graph.
  static MarkedGraph from_half_edges(
      std::size_t vertex_count,
      std::span<const std::pair<VertexId, VertexId>> edges,
      std::span<const Mark> half_edge_marks = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t half_edge_count() const { return source_.size(); }
  std::size_t edge_count() const { return source_.size() / 2; }

  static constexpr HalfEdgeId partner(HalfEdgeId e) { return e ^ 1u; }
  VertexId source(HalfEdgeId e) const { return source_[e]; }
  VertexId target(HalfEdgeId e) const { return source_[partner(e)]; }

  /// Half-edges whose source is v, in increasing id order.
  std::span<const HalfEdgeId> out_half_edges(VertexId v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_marks() const { return !marks_.empty(); }
  /// Mark of half-edge e; 1 for unmarked graphs.
  Mark mark(HalfEdgeId e) const { return marks_.empty() ? Mark{1.0, 0.0} : marks_[e]; }
  std::span<const Mark> marks() const { return marks_; }

  /// True when every half-edge mark satisfies xi(e^{-1}) = conj xi(e).
  bool has_hermitian_marks() const;

  /// Common degree if the graph is regular, std::nullopt otherwise. The empty
  /// graph is reported as 0-regular.
  std::optional<std::size_t> regular_degree() const;

  std::vector<std::size_t> degrees() const;

  bool operator==(const MarkedGraph&) const = default;

 private:
  void build_incidence();

  std::size_t vertex_count_ = 0;
  std::vector<VertexId> source_;
  std::vector<Mark> marks_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<HalfEdgeId> incidence_;
};

/// Free-function form of MarkedGraph::from_edges.
inline MarkedGraph build_graph(std::size_t vertex_count,
                               std::span<const EdgeSpec> edges) {
  return MarkedGraph::from_edges(vertex_count, edges);
}

/// Exact shortest-path distances from v; kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const MarkedGraph& g, VertexId v);

/// Connected component index per vertex, numbered in order of first vertex.
std::vector<std::uint32_t> connected_components(const MarkedGraph& g,
                                                std::size_t* count = nullptr);

bool is_connected(const MarkedGraph& g);

}  // namespace glim

#endif  // GLIM_GRAPH_MARKED_GRAPH_HPP_
