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

#ifndef GLIM_SPECTRAL_SPECTRUM_HPP_
#define GLIM_SPECTRAL_SPECTRUM_HPP_

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "glim/graph/ball.hpp"
#include "glim/graph/marked_graph.hpp"
#include "glim/spectral/operators.hpp"
#include "glim/spectral/sparse_operator.hpp"

namespace glim {

struct Histogram {
  /// bins + 1 edges.
  std::vector<double> edges;
  /// Fraction of values per bin; sums to 1.
  std::vector<double> masses;
};

/// Uniform bins over [min, max] of the values (or the given range).
Histogram esd_histogram(std::span<const double> values, std::size_t bins = 100,
                        std::optional<std::pair<double, double>> range = std::nullopt);

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;
  bool real = true;
  Histogram histogram;
  /// moments[k] = (1/N) sum lambda^k, real part, k = 0..K.
  std::vector<double> moments;
  /// Sorted by real part (real spectra) or modulus (complex spectra).
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  /// Largest modulus after dropping lambda1, for complex spectra.
  double second_modulus = 0.0;
  std::vector<std::string> notes;

  nlohmann::json to_json(bool include_eigenvalues = true) const;
};

SpectrumReport make_spectrum_report(std::vector<double> eigenvalues, std::size_t max_moment = 6,
                                    std::size_t bins = 100);
SpectrumReport make_spectrum_report(std::vector<std::complex<double>> eigenvalues,
                                    std::size_t max_moment = 6);

/// <delta_v, A^k delta_v> for k = 0..K by repeated sparse products.
std::vector<double> spectral_moments(const SparseOperator& a, std::size_t v, std::size_t K);

/// Moments of the local operator of `kernel` at v on a finite graph.
std::vector<double> spectral_moments(const MarkedGraph& g, const LocalKernel& kernel, VertexId v,
                                     std::size_t K);

/// Adjacency moments at the center of a ball. For truncated balls the k-th
/// moment only involves vertices within k/2 of the center, so K may go up
/// to 2 * exact_depth + 1; larger K throws std::invalid_argument.
std::vector<double> spectral_moments(const RootedBall& b, std::size_t K);

/// Empirical CDF distance sup_x |F_n(x) - F(x)|.
double ks_distance(std::vector<double> values, const std::function<double(double)>& cdf);

/// Greedy nearest-neighbour matching between two multisets; the largest
/// matched distance, or infinity when the sizes differ.
double multiset_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b);

/// Two-column CSV "re,im".
std::string complex_scatter_csv(const std::vector<std::complex<double>>& values);

/// Bar chart of a histogram as a standalone SVG document; `overlay`, when
/// set, is drawn as a polyline density.
std::string histogram_svg(const Histogram& h, const std::string& title,
                          const std::function<double(double)>& overlay = {});

}  // namespace glim

#endif  // GLIM_SPECTRAL_SPECTRUM_HPP_
