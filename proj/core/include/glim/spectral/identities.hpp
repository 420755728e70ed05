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

#ifndef GLIM_SPECTRAL_IDENTITIES_HPP_
#define GLIM_SPECTRAL_IDENTITIES_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "glim/graph/marked_graph.hpp"

namespace glim {

struct IharaBassResult {
  std::complex<double> lhs;
  std::complex<double> rhs;
  /// |lhs - rhs| / max(|lhs|, |rhs|, 1).
  double relative_gap = 0.0;
  /// |E|/2 - |V| + 1 with |E| counting half-edges.
  long long chi = 0;
};

inline constexpr std::size_t kIharaBassMaxHalfEdges = 400;

/// det(zI - B) against (z^2 - 1)^(chi - 1) det(z^2 I - z A + D - I).
IharaBassResult ihara_bass_residual(const MarkedGraph& g, std::complex<double> z);

/// Non-backtracking spectrum of a d-regular graph from its adjacency
/// spectrum: both roots of x^2 - mu x + (d - 1) per mu, then +1 and -1 each
/// chi - 1 times (removed when chi - 1 < 0). Returns n d values.
std::vector<std::complex<double>> regular_nb_from_adjacency(std::span<const double> adjacency,
                                                            std::size_t d);

/// Dense non-backtracking spectrum, from the half-edge matrix.
std::vector<std::complex<double>> nb_spectrum_dense(const MarkedGraph& g);
/// Same multiset through the 2n linearization plus the +-1 family.
std::vector<std::complex<double>> nb_spectrum_linearized(const MarkedGraph& g);

struct DivergenceResult {
  Eigen::VectorXcd phi_hat;
  std::complex<double> mu;
  /// ||A phi_hat - mu phi_hat|| / ||phi_hat||; 0 for null divergence.
  double residual = 0.0;
  bool null_divergence = false;
};

/// phi_hat(x) = sum of phi over half-edges ending at x. Requires g
/// d-regular, B phi = lambda phi within 1e-8 relative, and |lambda| != 1.
DivergenceResult divergence_eigenvector_map(const MarkedGraph& g, const Eigen::VectorXcd& phi,
                                            std::complex<double> lambda);

}  // namespace glim

#endif  // GLIM_SPECTRAL_IDENTITIES_HPP_
