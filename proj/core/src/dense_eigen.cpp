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

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <Eigen/Eigenvalues>
#include <stdexcept>
#include <string>

#include "glim/spectral/eigensolvers.hpp"

namespace glim {
namespace {

void check_square(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols) throw std::invalid_argument("matrix must be square");
}

void check_info(lapack_int info, const char* routine) {
  if (info != 0) {
    throw std::runtime_error(std::string(routine) + " failed with info " + std::to_string(info));
  }
}

}  // namespace

std::vector<double> eig_dense_symmetric(const Eigen::MatrixXd& a) {
  return eig_dense_symmetric(a, nullptr);
}

std::vector<double> eig_dense_symmetric(const Eigen::MatrixXd& a, Eigen::MatrixXd* vectors) {
  check_square(a.rows(), a.cols());
  const auto n = static_cast<lapack_int>(a.rows());
  std::vector<double> w(static_cast<std::size_t>(n));
  if (n == 0) return w;
  Eigen::MatrixXd work = a;
  const char jobz = vectors ? 'V' : 'N';
  check_info(LAPACKE_dsyevd(LAPACK_COL_MAJOR, jobz, 'U', n, work.data(), n, w.data()), "dsyevd");
  if (vectors) *vectors = std::move(work);
  return w;
}

std::vector<double> eig_dense_hermitian(const Eigen::MatrixXcd& a) {
  check_square(a.rows(), a.cols());
  const auto n = static_cast<lapack_int>(a.rows());
  std::vector<double> w(static_cast<std::size_t>(n));
  if (n == 0) return w;
  Eigen::MatrixXcd work = a;
  check_info(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'U', n, work.data(), n, w.data()), "zheevd");
  return w;
}

std::vector<std::complex<double>> eig_dense_general(const Eigen::MatrixXcd& a) {
  check_square(a.rows(), a.cols());
  using CL = std::complex<long double>;
  using MatrixL = Eigen::Matrix<CL, Eigen::Dynamic, Eigen::Dynamic>;
  std::vector<std::complex<double>> out;
  if (a.rows() == 0) return out;
  const MatrixL al = a.cast<CL>();
  Eigen::ComplexEigenSolver<MatrixL> solver(al, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("complex eigensolver failed");
  out.reserve(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const CL z = solver.eigenvalues()(i);
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return out;
}

std::vector<std::complex<double>> eig_dense_real_general(const Eigen::MatrixXd& a) {
  check_square(a.rows(), a.cols());
  const auto n = static_cast<lapack_int>(a.rows());
  std::vector<std::complex<double>> out;
  if (n == 0) return out;
  Eigen::MatrixXd work = a;
  std::vector<double> wr(static_cast<std::size_t>(n)), wi(static_cast<std::size_t>(n));
  check_info(LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n, wr.data(), wi.data(),
                           nullptr, 1, nullptr, 1),
             "dgeev");
  out.reserve(static_cast<std::size_t>(n));
  for (lapack_int i = 0; i < n; ++i) out.emplace_back(wr[i], wi[i]);
  return out;
}

}  // namespace glim
