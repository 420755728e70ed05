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

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "glim/graph/ball.hpp"
#include "glim/graph/marked_graph.hpp"

namespace glim {
namespace {

void check_vertex(std::size_t n, VertexId v) {
  if (v >= n) {
    throw std::out_of_range("vertex id " + std::to_string(v) +
                            " out of range for " + std::to_string(n) +
                            " vertices");
  }
}

}  // namespace

MarkedGraph MarkedGraph::from_edges(std::size_t vertex_count,
                                    std::span<const EdgeSpec> edges) {
  MarkedGraph g;
  g.vertex_count_ = vertex_count;
  g.source_.reserve(2 * edges.size());
  const bool marked = std::any_of(edges.begin(), edges.end(),
                                  [](const EdgeSpec& e) { return e.mark.has_value(); });
  if (marked) g.marks_.reserve(2 * edges.size());
  for (const EdgeSpec& e : edges) {
    check_vertex(vertex_count, e.u);
    check_vertex(vertex_count, e.v);
    g.source_.push_back(e.u);
    g.source_.push_back(e.v);
    if (marked) {
      const Mark m = e.mark.value_or(Mark{1.0, 0.0});
      g.marks_.push_back(m);
      g.marks_.push_back(std::conj(m));
    }
  }
  g.build_incidence();
  return g;
}

MarkedGraph MarkedGraph::from_half_edges(
    std::size_t vertex_count,
    std::span<const std::pair<VertexId, VertexId>> edges,
    std::span<const Mark> half_edge_marks) {
  if (!half_edge_marks.empty() && half_edge_marks.size() != 2 * edges.size()) {
    throw std::invalid_argument("need exactly one mark per half-edge");
  }
  MarkedGraph g;
  g.vertex_count_ = vertex_count;
  g.source_.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    check_vertex(vertex_count, u);
    check_vertex(vertex_count, v);
    g.source_.push_back(u);
    g.source_.push_back(v);
  }
  g.marks_.assign(half_edge_marks.begin(), half_edge_marks.end());
  g.build_incidence();
  return g;
}

void MarkedGraph::build_incidence() {
  offsets_.assign(vertex_count_ + 1, 0);
  for (VertexId s : source_) ++offsets_[s + 1];
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] += offsets_[v];
  incidence_.resize(source_.size());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (HalfEdgeId e = 0; e < source_.size(); ++e) {
    incidence_[cursor[source_[e]]++] = e;
  }
}

bool MarkedGraph::has_hermitian_marks() const {
  for (HalfEdgeId e = 0; e < marks_.size(); e += 2) {
    if (marks_[e + 1] != std::conj(marks_[e])) return false;
  }
  return true;
}

std::optional<std::size_t> MarkedGraph::regular_degree() const {
  if (vertex_count_ == 0) return 0;
  const std::size_t d = degree(0);
  for (VertexId v = 1; v < vertex_count_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<std::size_t> MarkedGraph::degrees() const {
  std::vector<std::size_t> out(vertex_count_);
  for (VertexId v = 0; v < vertex_count_; ++v) out[v] = degree(v);
  return out;
}

std::vector<std::uint32_t> bfs_distances(const MarkedGraph& g, VertexId v) {
  check_vertex(g.vertex_count(), v);
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist[v] = 0;
  queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (HalfEdgeId e : g.out_half_edges(x)) {
      const VertexId y = g.target(e);
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> connected_components(const MarkedGraph& g,
                                                std::size_t* count) {
  std::vector<std::uint32_t> comp(g.vertex_count(), kUnreachable);
  std::uint32_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != kUnreachable) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (HalfEdgeId e : g.out_half_edges(x)) {
        const VertexId y = g.target(e);
        if (comp[y] == kUnreachable) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_connected(const MarkedGraph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

MarkedGraph induced_subgraph(const MarkedGraph& g,
                             const std::vector<VertexId>& vertices,
                             std::vector<HalfEdgeId>* half_edge_map) {
  std::vector<std::uint32_t> local(g.vertex_count(), kUnreachable);
  for (std::uint32_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Mark> marks;
  if (half_edge_map) half_edge_map->clear();
  // Walk vertices in the given order; keep each unordered edge once, from
  // its even half-edge, so partner structure is preserved.
  std::vector<HalfEdgeId> kept;
  for (VertexId v : vertices) {
    for (HalfEdgeId e : g.out_half_edges(v)) {
      if (e % 2 != 0) continue;
      if (local[g.target(e)] == kUnreachable) continue;
      kept.push_back(e);
    }
  }
  std::sort(kept.begin(), kept.end());
  for (HalfEdgeId e : kept) {
    edges.emplace_back(local[g.source(e)], local[g.target(e)]);
    if (g.has_marks()) {
      marks.push_back(g.mark(e));
      marks.push_back(g.mark(MarkedGraph::partner(e)));
    }
    if (half_edge_map) {
      half_edge_map->push_back(e);
      half_edge_map->push_back(MarkedGraph::partner(e));
    }
  }
  return MarkedGraph::from_half_edges(vertices.size(), edges, marks);
}

namespace {

// BFS from several sources up to depth r; returns vertices in discovery
// order together with their distances.
void bounded_bfs(const MarkedGraph& g, std::span<const VertexId> sources,
                 std::uint32_t r, std::vector<VertexId>& order,
                 std::vector<std::uint32_t>& dist_of_order) {
  order.clear();
  dist_of_order.clear();
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  for (VertexId s : sources) {
    if (dist[s] != kUnreachable) continue;
    dist[s] = 0;
    order.push_back(s);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId x = order[head];
    if (dist[x] == r) continue;
    for (HalfEdgeId e : g.out_half_edges(x)) {
      const VertexId y = g.target(e);
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        order.push_back(y);
      }
    }
  }
  for (VertexId x : order) dist_of_order.push_back(dist[x]);
}

}  // namespace

bool RootedBall::truncated() const {
  return std::find(boundary.begin(), boundary.end(), true) != boundary.end();
}

std::uint32_t RootedBall::exact_depth() const {
  std::uint32_t best = kUnreachable;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (boundary[i]) best = std::min(best, distance[i]);
  }
  return best;
}

RootedBall ball(const MarkedGraph& g, VertexId v, std::uint32_t r) {
  check_vertex(g.vertex_count(), v);
  RootedBall b;
  b.radius = r;
  const VertexId src[] = {v};
  bounded_bfs(g, src, r, b.origin, b.distance);
  b.graph = induced_subgraph(g, b.origin);
  b.boundary.assign(b.origin.size(), false);
  return b;
}

EdgeRootedBall edge_ball(const MarkedGraph& g, HalfEdgeId e, std::uint32_t r) {
  if (e >= g.half_edge_count()) throw std::out_of_range("half-edge id out of range");
  EdgeRootedBall b;
  b.radius = r;
  const VertexId src[] = {g.source(e), g.target(e)};
  std::vector<std::uint32_t> dist;
  bounded_bfs(g, src, r, b.origin, dist);
  std::vector<HalfEdgeId> map;
  b.graph = induced_subgraph(g, b.origin, &map);
  b.root = static_cast<HalfEdgeId>(std::find(map.begin(), map.end(), e) - map.begin());
  return b;
}

}  // namespace glim
