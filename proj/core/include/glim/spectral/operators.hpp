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

#ifndef GLIM_SPECTRAL_OPERATORS_HPP_
#define GLIM_SPECTRAL_OPERATORS_HPP_

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>

#include "glim/graph/canonical.hpp"
#include "glim/graph/marked_graph.hpp"
#include "glim/spectral/sparse_operator.hpp"

namespace glim {

/// A[v, u] = number of half-edges from u to v. A loop adds 2 to A[v, v].
SparseOperator adjacency(const MarkedGraph& g);
/// A[v, u] = sum of marks of the half-edges from u to v.
SparseOperator weighted_adjacency(const MarkedGraph& g);
SparseOperator degree_diagonal(const MarkedGraph& g);

/// Ball of radius `radius` around `tail` with a second root `head`.
struct DoublyRootedBall {
  const MarkedGraph* graph = nullptr;
  VertexId tail = 0;  // always 0
  VertexId head = 0;
  std::uint32_t distance = 0;
  std::uint32_t radius = 0;
  /// Filled only for kernels with uses_class set.
  std::optional<RootedBallClass> cls;
};

/// Kernel a(G, o-, o+) of a local operator. The evaluator sees the ball of
/// radius `context_radius` around o- with o+ marked; it is only called when
/// dist(o-, o+) <= range.
struct LocalKernel {
  std::uint32_t range = 1;
  std::uint32_t context_radius = 1;
  bool uses_class = false;
  std::function<std::complex<double>(const DoublyRootedBall&)> evaluate;

  static LocalKernel adjacency();
  static LocalKernel distance_indicator(std::uint32_t k);
  static LocalKernel identity();
};

/// Matrix with entry (v, u) = a(G, u, v).
SparseOperator local_operator(const MarkedGraph& g, const LocalKernel& kernel,
                              const CanonicalOptions& options = {});

/// Operator on half-edges: B[f, e] = w(e) when e ends where f starts and
/// f is not the reversal of e; w = mark when `weighted`, else 1.
SparseOperator non_backtracking(const MarkedGraph& g, bool weighted = false);

/// Real 2n x 2n matrix [[A, I - D], [I, 0]] whose spectrum is that of the
/// non-backtracking operator with the +-1 family removed.
SparseOperator nb_linearization(const MarkedGraph& g);

}  // namespace glim

#endif  // GLIM_SPECTRAL_OPERATORS_HPP_
