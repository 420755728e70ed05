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

#include "glim/spectral/sparse_operator.hpp"

#include <algorithm>
#include <stdexcept>

namespace glim {

SparseOperator::SparseOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("operator must be square");
  refresh();
}

void SparseOperator::refresh() {
  m_.prune(Scalar{0.0, 0.0}, 0.0);
  m_.makeCompressed();
  real_ = true;
  for (std::int64_t k = 0; k < m_.nonZeros(); ++k) {
    if (m_.valuePtr()[k].imag() != 0.0) {
      real_ = false;
      break;
    }
  }
  re_ = m_.real();
  re_.makeCompressed();
}

SparseOperator SparseOperator::from_entries(std::size_t dim, const std::vector<Entry>& entries) {
  std::vector<Eigen::Triplet<Scalar, std::int64_t>> trip;
  trip.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.row >= dim || e.col >= dim) throw std::out_of_range("operator entry out of range");
    trip.emplace_back(static_cast<std::int64_t>(e.row), static_cast<std::int64_t>(e.col), e.value);
  }
  Matrix m(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim));
  m.setFromTriplets(trip.begin(), trip.end());
  return SparseOperator(std::move(m));
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  Matrix m(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim));
  m.setIdentity();
  return SparseOperator(std::move(m));
}

bool SparseOperator::is_hermitian(double tol) const {
  Matrix diff = m_ - Matrix(m_.adjoint());
  for (std::int64_t k = 0; k < diff.nonZeros(); ++k) {
    if (std::abs(diff.valuePtr()[k]) > tol) return false;
  }
  return true;
}

SparseOperator::Scalar SparseOperator::at(std::size_t row, std::size_t col) const {
  return m_.coeff(static_cast<std::int64_t>(row), static_cast<std::int64_t>(col));
}

std::vector<SparseOperator::Entry> SparseOperator::entries() const {
  std::vector<Entry> out;
  out.reserve(nnz());
  for (std::int64_t r = 0; r < m_.outerSize(); ++r) {
    for (Matrix::InnerIterator it(m_, r); it; ++it) {
      out.push_back({static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col()),
                     it.value()});
    }
  }
  return out;
}

void SparseOperator::apply(std::span<const Scalar> x, std::span<Scalar> y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("dimension mismatch");
  Eigen::Map<const Eigen::VectorXcd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
  Eigen::Map<Eigen::VectorXcd> yv(y.data(), static_cast<Eigen::Index>(y.size()));
  yv.noalias() = m_ * xv;
}

void SparseOperator::apply(std::span<const double> x, std::span<double> y) const {
  if (!real_) throw std::logic_error("real apply on a complex operator");
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("dimension mismatch");
  Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
  Eigen::Map<Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(y.size()));
  yv.noalias() = re_ * xv;
}

Eigen::MatrixXcd SparseOperator::to_dense() const { return Eigen::MatrixXcd(m_); }

Eigen::MatrixXd SparseOperator::to_dense_real() const { return Eigen::MatrixXd(re_); }

SparseOperator SparseOperator::adjoint() const { return SparseOperator(Matrix(m_.adjoint())); }

SparseOperator SparseOperator::transpose() const {
  return SparseOperator(Matrix(m_.transpose()));
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return SparseOperator(SparseOperator::Matrix(a.m_ * b.m_));
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return SparseOperator(SparseOperator::Matrix(a.m_ + b.m_));
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return SparseOperator(SparseOperator::Matrix(a.m_ - b.m_));
}

SparseOperator operator*(SparseOperator::Scalar s, const SparseOperator& a) {
  return SparseOperator(SparseOperator::Matrix(s * a.m_));
}

double SparseOperator::distance(const SparseOperator& a, const SparseOperator& b) {
  const auto d = a - b;
  double m = 0.0;
  for (std::int64_t k = 0; k < d.m_.nonZeros(); ++k) m = std::max(m, std::abs(d.m_.valuePtr()[k]));
  return m;
}

}  // namespace glim
