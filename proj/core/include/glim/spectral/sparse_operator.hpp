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

#ifndef GLIM_SPECTRAL_SPARSE_OPERATOR_HPP_
#define GLIM_SPECTRAL_SPARSE_OPERATOR_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace glim {

/// Square sparse operator with complex entries, stored row-major.
class SparseOperator {
 public:
  using Scalar = std::complex<double>;
  using Matrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor, std::int64_t>;
  using RealMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor, std::int64_t>;

  struct Entry {
    std::size_t row = 0;
    std::size_t col = 0;
    Scalar value;
  };

  SparseOperator() = default;
  explicit SparseOperator(Matrix m);

  /// Duplicate (row, col) pairs are summed; exact zeros are dropped.
  static SparseOperator from_entries(std::size_t dim, const std::vector<Entry>& entries);
  static SparseOperator identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t nnz() const { return static_cast<std::size_t>(m_.nonZeros()); }
  const Matrix& matrix() const { return m_; }

  /// True when every stored imaginary part is exactly zero.
  bool is_real() const { return real_; }
  /// Real part; only meaningful when is_real().
  const RealMatrix& real_matrix() const { return re_; }

  bool is_hermitian(double tol = 1e-12) const;
  Scalar at(std::size_t row, std::size_t col) const;
  std::vector<Entry> entries() const;

  void apply(std::span<const Scalar> x, std::span<Scalar> y) const;
  void apply(std::span<const double> x, std::span<double> y) const;

  Eigen::MatrixXcd to_dense() const;
  Eigen::MatrixXd to_dense_real() const;

  SparseOperator adjoint() const;
  SparseOperator transpose() const;

  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(Scalar s, const SparseOperator& a);

  /// Max absolute entry difference.
  static double distance(const SparseOperator& a, const SparseOperator& b);

 private:
  void refresh();

  Matrix m_;
  RealMatrix re_;
  bool real_ = true;
};

}  // namespace glim

#endif  // GLIM_SPECTRAL_SPARSE_OPERATOR_HPP_
