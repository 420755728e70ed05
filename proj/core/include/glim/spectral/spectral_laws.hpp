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

#ifndef GLIM_SPECTRAL_SPECTRAL_LAWS_HPP_
#define GLIM_SPECTRAL_SPECTRAL_LAWS_HPP_

#include <cstddef>
#include <vector>

namespace glim {

/// Spectral density of the d-regular tree at x (arcsine law for d = 2).
double kesten_mckay_density(int d, double x);
/// Its distribution function, by Gauss-Kronrod quadrature.
double kesten_mckay_cdf(int d, double x);
/// Closed walks of length k from the root of the d-regular tree, k = 0..K.
std::vector<double> regular_tree_moments(int d, std::size_t K);

struct KernelMass {
  double q = 0.0;
  double mass = 0.0;
};

/// Smallest root q in (0, 1) of q = exp(-d exp(-d q)) and the resulting
/// atom mass at zero of the Poisson(d) Galton-Watson tree.
KernelMass gw_kernel_mass(double d);

/// Extinction probability of Poisson(d) Galton-Watson: smallest root of
/// q = exp(d (q - 1)).
double gw_extinction_probability(double d);

}  // namespace glim

#endif  // GLIM_SPECTRAL_SPECTRAL_LAWS_HPP_
