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

#include "glim/spectral/operators.hpp"

#include <stdexcept>

#include "glim/graph/ball.hpp"

namespace glim {
namespace {

SparseOperator adjacency_impl(const MarkedGraph& g, bool weighted) {
  std::vector<SparseOperator::Entry> entries;
  entries.reserve(g.half_edge_count());
  for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) {
    entries.push_back({g.target(e), g.source(e), weighted ? g.mark(e) : Mark{1.0, 0.0}});
  }
  return SparseOperator::from_entries(g.vertex_count(), entries);
}

}  // namespace

SparseOperator adjacency(const MarkedGraph& g) { return adjacency_impl(g, false); }

SparseOperator weighted_adjacency(const MarkedGraph& g) { return adjacency_impl(g, true); }

SparseOperator degree_diagonal(const MarkedGraph& g) {
  std::vector<SparseOperator::Entry> entries;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    entries.push_back({v, v, static_cast<double>(g.degree(v))});
  }
  return SparseOperator::from_entries(g.vertex_count(), entries);
}

LocalKernel LocalKernel::adjacency() {
  LocalKernel k;
  k.range = 1;
  k.context_radius = 1;
  k.evaluate = [](const DoublyRootedBall& b) {
    std::complex<double> s = 0.0;
    for (HalfEdgeId e : b.graph->out_half_edges(b.tail)) {
      if (b.graph->target(e) == b.head) s += b.graph->mark(e);
    }
    return s;
  };
  return k;
}

LocalKernel LocalKernel::distance_indicator(std::uint32_t dist) {
  LocalKernel k;
  k.range = dist;
  k.context_radius = dist;
  k.evaluate = [dist](const DoublyRootedBall& b) {
    return std::complex<double>(b.distance == dist ? 1.0 : 0.0, 0.0);
  };
  return k;
}

LocalKernel LocalKernel::identity() { return distance_indicator(0); }

SparseOperator local_operator(const MarkedGraph& g, const LocalKernel& kernel,
                              const CanonicalOptions& options) {
  if (!kernel.evaluate) throw std::invalid_argument("kernel has no evaluator");
  if (kernel.range > kernel.context_radius) {
    throw std::invalid_argument("kernel range exceeds its context radius");
  }
  std::vector<SparseOperator::Entry> entries;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const RootedBall b = ball(g, u, kernel.context_radius);
    DoublyRootedBall db;
    db.graph = &b.graph;
    db.tail = RootedBall::center;
    db.radius = kernel.context_radius;
    for (VertexId w = 0; w < b.size(); ++w) {
      if (b.distance[w] > kernel.range) continue;
      db.head = w;
      db.distance = b.distance[w];
      if (kernel.uses_class) db.cls = canonical_class(b.graph, db.tail, w, options);
      const std::complex<double> value = kernel.evaluate(db);
      if (value != std::complex<double>{}) entries.push_back({b.origin[w], u, value});
    }
  }
  return SparseOperator::from_entries(g.vertex_count(), entries);
}

SparseOperator non_backtracking(const MarkedGraph& g, bool weighted) {
  if (weighted && !g.has_marks()) throw std::invalid_argument("weighted operator needs marks");
  std::vector<SparseOperator::Entry> entries;
  for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) {
    const Mark w = weighted ? g.mark(e) : Mark{1.0, 0.0};
    for (HalfEdgeId f : g.out_half_edges(g.target(e))) {
      if (f == MarkedGraph::partner(e)) continue;
      entries.push_back({f, e, w});
    }
  }
  return SparseOperator::from_entries(g.half_edge_count(), entries);
}

SparseOperator nb_linearization(const MarkedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<SparseOperator::Entry> entries;
  for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) {
    entries.push_back({g.target(e), g.source(e), 1.0});
  }
  for (VertexId v = 0; v < n; ++v) {
    entries.push_back({v, n + v, 1.0 - static_cast<double>(g.degree(v))});
    entries.push_back({n + v, v, 1.0});
  }
  return SparseOperator::from_entries(2 * n, entries);
}

}  // namespace glim
