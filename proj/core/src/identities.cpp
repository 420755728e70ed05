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

#include "glim/spectral/identities.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "glim/spectral/eigensolvers.hpp"
#include "glim/spectral/operators.hpp"

namespace glim {
namespace {

using CL = std::complex<long double>;
using MatrixL = Eigen::Matrix<CL, Eigen::Dynamic, Eigen::Dynamic>;

long long euler_characteristic(const MarkedGraph& g) {
  return static_cast<long long>(g.edge_count()) - static_cast<long long>(g.vertex_count()) + 1;
}

MatrixL to_long(const Eigen::MatrixXcd& m) { return m.cast<CL>(); }

CL determinant(const MatrixL& m) {
  if (m.rows() == 0) return CL(1.0L, 0.0L);
  return Eigen::PartialPivLU<MatrixL>(m).determinant();
}

CL int_power(CL base, long long e) {
  CL out(1.0L, 0.0L);
  for (long long i = 0; i < e; ++i) out *= base;
  return out;
}

// Appends +-1 `count` times each, or removes the closest copies when count
// is negative.
void adjust_unit_family(std::vector<std::complex<double>>& values, long long count) {
  for (double target : {1.0, -1.0}) {
    if (count >= 0) {
      values.insert(values.end(), static_cast<std::size_t>(count), {target, 0.0});
      continue;
    }
    for (long long i = 0; i < -count; ++i) {
      auto it = std::min_element(values.begin(), values.end(), [&](auto a, auto b) {
        return std::abs(a - target) < std::abs(b - target);
      });
      if (it == values.end()) throw std::logic_error("no eigenvalue left to remove");
      values.erase(it);
    }
  }
}

}  // namespace

IharaBassResult ihara_bass_residual(const MarkedGraph& g, std::complex<double> z) {
  if (g.half_edge_count() > kIharaBassMaxHalfEdges) {
    throw std::invalid_argument("graph too large for dense determinants");
  }
  IharaBassResult r;
  r.chi = euler_characteristic(g);
  const CL zl(z.real(), z.imag());

  const MatrixL b = to_long(non_backtracking(g).to_dense());
  const auto m = b.rows();
  r.lhs = std::complex<double>(determinant(zl * MatrixL::Identity(m, m) - b));

  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const MatrixL a = to_long(adjacency(g).to_dense());
  const MatrixL d = to_long(degree_diagonal(g).to_dense());
  const MatrixL id = MatrixL::Identity(n, n);
  const CL det_v = determinant(zl * zl * id - zl * a + d - id);
  const CL factor = zl * zl - CL(1.0L, 0.0L);
  const long long e = r.chi - 1;
  const CL rhs = e >= 0 ? int_power(factor, e) * det_v : det_v / int_power(factor, -e);
  r.rhs = std::complex<double>(rhs);

  const long double scale =
      std::max({std::abs(CL(r.lhs)), std::abs(rhs), static_cast<long double>(1.0L)});
  r.relative_gap = static_cast<double>(std::abs(CL(r.lhs) - rhs) / scale);
  return r;
}

std::vector<std::complex<double>> regular_nb_from_adjacency(std::span<const double> adjacency,
                                                            std::size_t d) {
  const auto n = static_cast<long long>(adjacency.size());
  const long long chi_minus_one = n * static_cast<long long>(d) / 2 - n;
  std::vector<std::complex<double>> out;
  out.reserve(adjacency.size() * std::max<std::size_t>(d, 2));
  const double c = static_cast<double>(d) - 1.0;
  for (double mu : adjacency) {
    // A discriminant within its own rounding error is a double root; the
    // square root would otherwise amplify eps to sqrt(eps).
    double delta = mu * mu - 4.0 * c;
    if (std::abs(delta) <= 64.0 * std::numeric_limits<double>::epsilon() * (mu * mu + 4.0 * c)) {
      delta = 0.0;
    }
    const std::complex<double> disc = std::sqrt(std::complex<double>(delta, 0.0));
    out.push_back(0.5 * (mu + disc));
    out.push_back(0.5 * (mu - disc));
  }
  adjust_unit_family(out, chi_minus_one);
  return out;
}

std::vector<std::complex<double>> nb_spectrum_dense(const MarkedGraph& g) {
  const SparseOperator b = non_backtracking(g);
  if (b.dim() <= kDenseGeneralLimit) return eig_dense_general(b.to_dense());
  return eig_dense_real_general(b.to_dense_real());
}

std::vector<std::complex<double>> nb_spectrum_linearized(const MarkedGraph& g) {
  const SparseOperator l = nb_linearization(g);
  std::vector<std::complex<double>> out = l.dim() <= kDenseGeneralLimit
                                              ? eig_dense_general(l.to_dense())
                                              : eig_dense_real_general(l.to_dense_real());
  adjust_unit_family(out, euler_characteristic(g) - 1);
  return out;
}

DivergenceResult divergence_eigenvector_map(const MarkedGraph& g, const Eigen::VectorXcd& phi,
                                            std::complex<double> lambda) {
  const auto d = g.regular_degree();
  if (!d) throw std::invalid_argument("graph is not regular");
  if (static_cast<std::size_t>(phi.size()) != g.half_edge_count()) {
    throw std::invalid_argument("vector length must equal the half-edge count");
  }
  if (std::abs(std::abs(lambda) - 1.0) <= 1e-8) {
    throw std::invalid_argument("|lambda| = 1: divergence map undefined");
  }
  if (std::abs(lambda) < 1e-12) throw std::invalid_argument("lambda = 0: divergence map undefined");
  const SparseOperator b = non_backtracking(g);
  Eigen::VectorXcd bphi(phi.size());
  b.apply(std::span<const std::complex<double>>(phi.data(), phi.size()),
          std::span<std::complex<double>>(bphi.data(), bphi.size()));
  const double norm = phi.norm();
  if ((bphi - lambda * phi).norm() > 1e-8 * std::max(1.0, std::abs(lambda)) * norm) {
    throw std::invalid_argument("phi is not an eigenvector for lambda");
  }
  DivergenceResult r;
  r.phi_hat = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.vertex_count()));
  for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) r.phi_hat(g.target(e)) += phi(e);
  r.mu = lambda + (static_cast<double>(*d) - 1.0) / lambda;
  const double hat_norm = r.phi_hat.norm();
  if (hat_norm <= 1e-8 * norm) {
    r.null_divergence = true;
    return r;
  }
  const SparseOperator a = adjacency(g);
  Eigen::VectorXcd aphi(r.phi_hat.size());
  a.apply(std::span<const std::complex<double>>(r.phi_hat.data(), r.phi_hat.size()),
          std::span<std::complex<double>>(aphi.data(), aphi.size()));
  r.residual = (aphi - r.mu * r.phi_hat).norm() / hat_norm;
  return r;
}

}  // namespace glim
