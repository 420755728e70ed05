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

#ifndef GLIM_EXPERIMENTS_EXPERIMENTS_HPP_
#define GLIM_EXPERIMENTS_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "glim/experiments/report.hpp"
#include "glim/generators/rng.hpp"
#include "glim/graph/marked_graph.hpp"
#include "glim/group/algebra.hpp"

namespace glim {

struct RunOptions {
  /// 0 means default_jobs().
  std::size_t jobs = 0;
};

struct BsConvergenceParams {
  /// Any ensemble_names() entry; "schreier" is the free-group Schreier graph.
  std::string ensemble = "regular";
  std::vector<std::size_t> n_list = {10000};
  /// Mean degree; for "schreier" the number of free generators is d / 2.
  double d = 4.0;
  /// Permutation model for "schreier": "uniform" or "cycles".
  std::string rep = "uniform";
  std::uint32_t r = 2;
  /// "Td", "PoissonGW" or "character-triviality".
  std::string limit = "Td";
  std::size_t gw_samples = 100000;
  std::size_t seeds = 1;
  std::size_t max_word_length = 3;
  double tv_tolerance = 0.03;
  double fixed_point_tolerance = 0.01;
};
ExperimentReport exp_bs_convergence(const BsConvergenceParams& p, Seed seed,
                                    const RunOptions& run = {});

struct KestenMckayParams {
  std::size_t n = 4000;
  std::size_t d = 4;
  double ks_tolerance = 0.02;
  double moment_tolerance = 0.02;
  std::size_t max_moment = 6;
};
ExperimentReport exp_kesten_mckay(const KestenMckayParams& p, Seed seed,
                                  const RunOptions& run = {});

struct GwKernelParams {
  std::size_t n = 4000;
  double d = 4.0;
  std::size_t trials = 5;
  double tolerance = 0.01;
};
ExperimentReport exp_gw_kernel(const GwKernelParams& p, Seed seed, const RunOptions& run = {});

/// Adjacency nullity via exact leaf removal followed by a dense eigenvalue
/// count (|lambda| <= threshold) on the remaining core.
std::size_t adjacency_nullity(const MarkedGraph& g, double threshold = 1e-9,
                              std::size_t* core_size = nullptr);

struct FriedmanParams {
  std::size_t n = 2000;
  std::size_t d = 4;
  std::size_t trials = 20;
  double eps = 0.1;
  /// Fraction of trials that must satisfy the upper bounds.
  double pass_fraction = 0.95;
  bool simple = true;
};
ExperimentReport exp_friedman(const FriedmanParams& p, Seed seed, const RunOptions& run = {});

struct ErEdgesParams {
  std::size_t n = 2000;
  double d = 4.0;
  std::size_t trials = 20;
  double eps = 0.2;
  /// Allowed |lambda_1 - d| for the non-backtracking Perron value.
  double lambda1_tolerance = 0.4;
  double pass_fraction = 0.8;
  /// Graph size for the dense scatter artifact; 0 disables it.
  std::size_t scatter_n = 1000;
};
ExperimentReport exp_er_edges(const ErEdgesParams& p, Seed seed, const RunOptions& run = {});

struct StrongConvergenceParams {
  AlgebraElement element = AlgebraElement::adjacency(2);
  std::vector<std::size_t> n_list = {1000, 10000};
  std::size_t trials = 5;
  double gap_tolerance = 0.15;
  double decrease_fraction = 0.8;
  std::size_t lower_bound_power = 12;
  double lower_bound_tolerance = 0.08;
};
ExperimentReport exp_strong_convergence(const StrongConvergenceParams& p, Seed seed,
                                        const RunOptions& run = {});

struct AlonBoppanaParams {
  AlgebraElement element = AlgebraElement::adjacency(2);
  /// "uniform" or "cycles" (every generator acts as x -> x + 1 mod n).
  std::string rep = "uniform";
  std::size_t n = 2000;
  std::size_t l_max = 6;
};
ExperimentReport exp_alon_boppana_bound(const AlonBoppanaParams& p, Seed seed,
                                        const RunOptions& run = {});

struct DistanceProfileParams {
  int generators = 2;
  /// "uniform" or "cycles".
  std::string rep = "uniform";
  std::size_t n = 100000;
  double eps = 0.2;
  double control_eps = -0.5;
  std::size_t sources = 20;
  double max_fraction = 0.05;
  double control_min_fraction = 0.5;
};
ExperimentReport exp_distance_profile(const DistanceProfileParams& p, Seed seed,
                                      const RunOptions& run = {});

struct CoverSpectrumParams {
  /// "theta3", "fig3", "bouquet2" or a path to a .glim file.
  std::string base = "theta3";
  std::size_t n = 1000;
  std::size_t trials = 5;
  double eps = 0.2;
  double old_tolerance = 1e-8;
  double pass_fraction = 0.8;
  /// Walk length for the universal-cover norm estimate of non-regular bases.
  std::size_t walk_length = 12;
};
ExperimentReport exp_cover_spectrum(const CoverSpectrumParams& p, Seed seed,
                                    const RunOptions& run = {});

/// Named base graphs for exp_cover_spectrum.
MarkedGraph named_base_graph(const std::string& name);

/// Spectral radius of the universal covering tree of a connected base:
/// 2 sqrt(d - 1) for d-regular bases, else an extrapolated closed-walk
/// estimate at the given length. `lower_bound` receives the largest rigorous
/// walk-count lower bound.
double cover_tree_norm(const MarkedGraph& base, std::size_t walk_length,
                       double* lower_bound = nullptr);

}  // namespace glim

#endif  // GLIM_EXPERIMENTS_EXPERIMENTS_HPP_
