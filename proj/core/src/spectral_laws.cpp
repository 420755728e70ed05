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

#include "glim/spectral/spectral_laws.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace glim {
namespace {

// Smallest root on [0, 1] of f with f(0) > 0: grid scan, then bisection.
double smallest_root(const std::function<double(double)>& f) {
  constexpr int kGrid = 20000;
  double lo = 0.0;
  for (int i = 1; i <= kGrid; ++i) {
    const double hi = static_cast<double>(i) / kGrid;
    if (f(hi) <= 0.0) {
      double a = lo, b = hi;
      while (b - a > 1e-15) {
        const double mid = 0.5 * (a + b);
        if (f(mid) > 0.0) a = mid;
        else b = mid;
      }
      return 0.5 * (a + b);
    }
    lo = hi;
  }
  return 1.0;
}

}  // namespace

double kesten_mckay_density(int d, double x) {
  if (d < 2) throw std::invalid_argument("Kesten-McKay law needs d >= 2");
  const double dd = d;
  const double edge2 = 4.0 * (dd - 1.0);
  if (x * x >= edge2) return 0.0;
  return dd * std::sqrt(edge2 - x * x) / (2.0 * std::numbers::pi * (dd * dd - x * x));
}

double kesten_mckay_cdf(int d, double x) {
  if (d < 2) throw std::invalid_argument("Kesten-McKay law needs d >= 2");
  const double dd = d;
  const double edge = 2.0 * std::sqrt(dd - 1.0);
  if (x <= -edge) return 0.0;
  if (x >= edge) return 1.0;
  // x = edge sin(theta) removes the square-root endpoints.
  const double c = edge * edge;
  auto integrand = [&](double theta) {
    // d^2 - c sin^2 = (d - 2)^2 + c cos^2, free of cancellation near the edges.
    const double co = std::cos(theta);
    return dd * c * co * co / (2.0 * std::numbers::pi * ((dd - 2.0) * (dd - 2.0) + c * co * co));
  };
  const double theta = std::asin(std::clamp(x / edge, -1.0, 1.0));
  double err = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, -std::numbers::pi / 2, theta, 20, 1e-13, &err);
  return std::clamp(value, 0.0, 1.0);
}

std::vector<double> regular_tree_moments(int d, std::size_t K) {
  if (d < 1) throw std::invalid_argument("tree degree must be positive");
  // p[r] = number of walks currently at distance r from the root.
  std::vector<double> p(K + 2, 0.0), next(K + 2, 0.0);
  p[0] = 1.0;
  std::vector<double> out{1.0};
  for (std::size_t k = 1; k <= K; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t r = 0; r < k && r + 1 < p.size(); ++r) {
      if (p[r] == 0.0) continue;
      if (r == 0) {
        next[1] += d * p[0];
      } else {
        next[r - 1] += p[r];
        next[r + 1] += (d - 1) * p[r];
      }
    }
    p.swap(next);
    out.push_back(p[0]);
  }
  return out;
}

KernelMass gw_kernel_mass(double d) {
  if (!(d > 0.0)) throw std::invalid_argument("gw_kernel_mass needs d > 0");
  KernelMass km;
  km.q = smallest_root([d](double q) { return std::exp(-d * std::exp(-d * q)) - q; });
  const double e = std::exp(-d * km.q);
  km.mass = km.q + e + d * km.q * e - 1.0;
  return km;
}

double gw_extinction_probability(double d) {
  if (!(d > 0.0)) throw std::invalid_argument("offspring mean must be positive");
  return smallest_root([d](double q) { return std::exp(d * (q - 1.0)) - q; });
}

}  // namespace glim
