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

#ifndef GLIM_GRAPH_CANONICAL_HPP_
#define GLIM_GRAPH_CANONICAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "glim/graph/ball.hpp"
#include "glim/graph/marked_graph.hpp"

namespace glim {

struct CanonicalOptions {
  /// Balls with more vertices use the refinement hash instead of the exact
  /// search.
  std::size_t exact_limit = 64;
  /// Real and imaginary parts of marks are rounded to this grid first.
  double mark_grid = 1e-9;
  /// Search-tree nodes allowed before giving up on exactness.
  std::size_t node_budget = 1u << 18;
};

/// Isomorphism class of a rooted (or edge-rooted, or doubly-rooted) marked
/// ball. In exact mode two codes are equal iff the objects are isomorphic.
/// Hash-mode codes are equal for isomorphic objects and differ otherwise up
/// to a 128-bit hash collision.
struct RootedBallClass {
  std::string code;
  std::size_t size = 0;
  bool exact = true;

  std::string hex() const;
  static RootedBallClass from_hex(const std::string& hex, std::size_t size);

  friend bool operator==(const RootedBallClass& a, const RootedBallClass& b) {
    return a.code == b.code;
  }
  friend std::strong_ordering operator<=>(const RootedBallClass& a,
                                          const RootedBallClass& b) {
    return a.code <=> b.code;
  }
};

RootedBallClass canonical_class(const RootedBall& b,
                                const CanonicalOptions& options = {});

/// Class of a ball around a half-edge, with the root half-edge distinguished.
RootedBallClass canonical_class(const EdgeRootedBall& b,
                                const CanonicalOptions& options = {});

/// Class of `g` with two ordered roots (tail, head); the roots may coincide.
RootedBallClass canonical_class(const MarkedGraph& g, VertexId tail,
                                VertexId head,
                                const CanonicalOptions& options = {});

/// Class of a whole, possibly disconnected, unrooted graph: the sorted
/// multiset of per-component codes, each minimised over roots. Intended for
/// small graphs (deduplicating enumerations).
std::string unrooted_graph_code(const MarkedGraph& g,
                                const CanonicalOptions& options = {});

namespace detail {

/// Vertex-labelled, edge-labelled multigraph fed to the canonical search.
/// Labels must be isomorphism invariant.
struct LabelledGraph {
  struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    std::uint64_t label_uv = 0;  // label of the half-edge u->v
    std::uint64_t label_vu = 0;  // label of the half-edge v->u
  };
  std::vector<std::uint64_t> vertex_labels;
  std::vector<Edge> edges;
};

/// Canonical code of a labelled graph; exactness reported in `exact`.
std::string canonical_code(const LabelledGraph& g,
                           const CanonicalOptions& options, bool* exact);

}  // namespace detail
}  // namespace glim

#endif  // GLIM_GRAPH_CANONICAL_HPP_
