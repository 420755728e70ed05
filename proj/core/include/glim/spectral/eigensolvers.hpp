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

#ifndef GLIM_SPECTRAL_EIGENSOLVERS_HPP_
#define GLIM_SPECTRAL_EIGENSOLVERS_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "glim/spectral/sparse_operator.hpp"

namespace glim {

/// Iterative solver stopped before reaching the requested residual.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<std::complex<double>> best,
                   double residual)
      : std::runtime_error(what), best_(std::move(best)), residual_(residual) {}
  const std::vector<std::complex<double>>& best_estimate() const { return best_; }
  double best_residual() const { return residual_; }

 private:
  std::vector<std::complex<double>> best_;
  double residual_;
};

inline constexpr std::size_t kDenseSymmetricLimit = 5000;
inline constexpr std::size_t kDenseGeneralLimit = 400;

/// Ascending eigenvalues (LAPACK dsyevd).
std::vector<double> eig_dense_symmetric(const Eigen::MatrixXd& a);
/// Ascending eigenvalues and orthonormal eigenvectors as columns.
std::vector<double> eig_dense_symmetric(const Eigen::MatrixXd& a, Eigen::MatrixXd* vectors);
/// Ascending eigenvalues of a Hermitian matrix (LAPACK zheevd).
std::vector<double> eig_dense_hermitian(const Eigen::MatrixXcd& a);

/// Eigenvalues of a general complex matrix, computed in extended precision.
std::vector<std::complex<double>> eig_dense_general(const Eigen::MatrixXcd& a);
/// Eigenvalues of a real nonsymmetric matrix (LAPACK dgeev); no size cap.
std::vector<std::complex<double>> eig_dense_real_general(const Eigen::MatrixXd& a);

struct ExtremeOptions {
  double tolerance = 1e-8;
  std::size_t max_restarts = 10000;
  /// Krylov basis size; 0 picks a default from k.
  std::size_t basis_size = 0;
  std::uint64_t seed = 0x5eed;
};

struct ExtremeEigen {
  /// Largest eigenvalues, descending.
  std::vector<double> largest;
  /// Smallest eigenvalues, ascending.
  std::vector<double> smallest;
  /// Residual norms ||A x - theta x|| in the order largest, smallest.
  std::vector<double> residuals;
  std::size_t restarts = 0;
  std::size_t matvecs = 0;

  /// max(|largest[0]|, |smallest[0]|): the norm of the restricted operator.
  double spectral_radius() const;
};

/// k largest and k smallest eigenvalues of a Hermitian operator restricted
/// to the orthogonal complement of `deflation` (thick-restart Lanczos).
/// Throws ConvergenceError when the residual target is not met.
ExtremeEigen eig_extreme_symmetric(const SparseOperator& a, std::size_t k,
                                   const std::vector<Eigen::VectorXcd>& deflation = {},
                                   const ExtremeOptions& options = {});

struct TopEigen {
  /// Sorted by decreasing modulus.
  std::vector<std::complex<double>> values;
  std::vector<double> residuals;
  std::size_t restarts = 0;
  std::size_t matvecs = 0;
};

/// k eigenvalues of largest modulus of a general operator (Krylov-Schur).
TopEigen eig_top_nonsymmetric(const SparseOperator& b, std::size_t k,
                              const ExtremeOptions& options = {});

}  // namespace glim

#endif  // GLIM_SPECTRAL_EIGENSOLVERS_HPP_
