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

#ifndef GLIM_GENERATORS_ENSEMBLES_HPP_
#define GLIM_GENERATORS_ENSEMBLES_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glim/generators/rng.hpp"
#include "glim/graph/ball.hpp"
#include "glim/graph/marked_graph.hpp"
#include "glim/group/permutation_rep.hpp"
#include "glim/group/word.hpp"

namespace glim {

/// Raised when a sampler would exceed its size budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RegularModel {
  /// Schreier graph of d/2 independent uniform permutations (d even).
  kPermutation,
  /// Uniform perfect matching of n*d half-edges (configuration model).
  kPairing,
};

struct RegularOptions {
  RegularModel model = RegularModel::kPairing;
  /// Resample until there are no loops or multi-edges.
  bool simple = false;
  std::size_t max_attempts = 10000;
};

MarkedGraph random_regular(std::size_t n, std::size_t d, Seed seed,
                           const RegularOptions& options = {});

/// G(n, min(1, d/n)).
MarkedGraph erdos_renyi(std::size_t n, double d, Seed seed);

using MarkSampler = std::function<Mark(Rng&)>;

/// Bond percolation on the box [-n, n]^dim. Vertex index is the mixed-radix
/// number of (x_0 + n, ..., x_{dim-1} + n) with x_0 least significant.
MarkedGraph zd_box_percolation(std::size_t dim, std::size_t n, double p, Seed seed,
                               const MarkSampler& marks = {},
                               std::size_t max_vertices = 50'000'000);

/// Poisson(d) Galton-Watson tree cut at `depth`; vertices at the cut carry
/// the boundary flag.
RootedBall galton_watson_poisson(double d, std::uint32_t depth, Seed seed,
                                 std::size_t max_vertices = 10'000'000);

/// Ball of radius `depth` in the d-regular tree, boundary flagged.
RootedBall regular_tree_ball(std::size_t d, std::uint32_t depth);

PermutationRep uniform_rep(std::size_t n, int d, Seed seed);

/// g_1, g_1^-1, ..., g_d, g_d^-1.
std::vector<Word> free_generating_set(int d);

/// Edge x -- rho(s)(x) for each s in S (paired with s^-1) and each x.
/// The j-th pair {s, s^-1} marks its half-edges i(j+1) and -i(j+1); an
/// identity entry gives a loop at every vertex marked 0. Throws
/// std::invalid_argument when S is not closed under inversion.
MarkedGraph schreier_graph(const PermutationRep& rep, const std::vector<Word>& S);

/// Ensemble names accepted by sample_ensemble.
std::vector<std::string> ensemble_names();

struct EnsembleParams {
  std::size_t n = 0;
  double d = 0.0;
  std::size_t dim = 2;
  double p = 0.5;
  bool simple = false;
};

/// Dispatch by name: regular (pairing), regular-perm, erdos-renyi,
/// percolation, schreier.
MarkedGraph sample_ensemble(const std::string& name, const EnsembleParams& params, Seed seed);

}  // namespace glim

#endif  // GLIM_GENERATORS_ENSEMBLES_HPP_
