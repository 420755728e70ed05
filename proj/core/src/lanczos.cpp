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

// Thick-restart Lanczos for both ends of a Hermitian spectrum.
//
// The basis is fully reorthogonalized (two Gram-Schmidt passes), so the
// projected matrix T = V* A V is read off the Gram-Schmidt coefficients and
// stays exact after a restart, where it becomes diagonal plus one coupling
// row. Deflation vectors are projected out of every new direction.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "glim/spectral/eigensolvers.hpp"

namespace glim {
namespace {

constexpr std::size_t kDenseCutoff = 400;

template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <typename S>
void apply_op(const SparseOperator& a, const Vec<S>& x, Vec<S>& y) {
  y.resize(x.size());
  if constexpr (std::is_same_v<S, double>) {
    a.apply(std::span<const double>(x.data(), x.size()), std::span<double>(y.data(), y.size()));
  } else {
    a.apply(std::span<const std::complex<double>>(x.data(), x.size()),
            std::span<std::complex<double>>(y.data(), y.size()));
  }
}

template <typename S>
Mat<S> orthonormal_deflation(const std::vector<Eigen::VectorXcd>& deflation, Eigen::Index n) {
  std::vector<Vec<S>> cols;
  for (const auto& d : deflation) {
    if (d.size() != n) throw std::invalid_argument("deflation vector has wrong length");
    Vec<S> v;
    if constexpr (std::is_same_v<S, double>) {
      v = d.real();
    } else {
      v = d;
    }
    const double norm0 = v.norm();
    if (norm0 == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : cols) v -= q * q.dot(v);
    }
    if (v.norm() > 1e-10 * norm0) cols.push_back(v / v.norm());
  }
  Mat<S> q(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) q.col(static_cast<Eigen::Index>(i)) = cols[i];
  return q;
}

template <typename S>
void project_out(const Mat<S>& q, Vec<S>& w) {
  if (q.cols() == 0) return;
  w -= q * (q.adjoint() * w);
}

template <typename S>
ExtremeEigen dense_path(const SparseOperator& a, std::size_t k, const Mat<S>& q) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.dim());
  Mat<S> full;
  if constexpr (std::is_same_v<S, double>) {
    full = a.to_dense_real();
  } else {
    full = a.to_dense();
  }
  Mat<S> basis;
  if (q.cols() == 0) {
    basis = Mat<S>::Identity(n, n);
  } else {
    Eigen::HouseholderQR<Mat<S>> qr(q);
    Mat<S> all = qr.householderQ() * Mat<S>::Identity(n, n);
    basis = all.rightCols(n - q.cols());
  }
  Mat<S> restricted = basis.adjoint() * full * basis;
  restricted = (restricted + restricted.adjoint().eval()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Mat<S>> es(restricted, Eigen::EigenvaluesOnly);
  const auto& theta = es.eigenvalues();
  ExtremeEigen out;
  const auto m = static_cast<std::size_t>(theta.size());
  const std::size_t kk = std::min(k, m);
  for (std::size_t i = 0; i < kk; ++i) out.largest.push_back(theta(static_cast<Eigen::Index>(m - 1 - i)));
  for (std::size_t i = 0; i < kk; ++i) out.smallest.push_back(theta(static_cast<Eigen::Index>(i)));
  out.residuals.assign(2 * kk, 0.0);
  return out;
}

template <typename S>
Vec<S> random_direction(Eigen::Index n, std::mt19937_64& gen, const Mat<S>& q, const Mat<S>& v,
                        Eigen::Index used) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec<S> x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = S(u(gen));
    for (int pass = 0; pass < 2; ++pass) {
      project_out(q, x);
      if (used > 0) x -= v.leftCols(used) * (v.leftCols(used).adjoint() * x);
    }
    const double norm = x.norm();
    if (norm > 1e-8) return x / norm;
  }
  return Vec<S>::Zero(n);
}

template <typename S>
ExtremeEigen lanczos(const SparseOperator& a, std::size_t k,
                     const std::vector<Eigen::VectorXcd>& deflation, const ExtremeOptions& opt) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  const Mat<S> q = orthonormal_deflation<S>(deflation, n);
  const auto avail = static_cast<std::size_t>(n - q.cols());
  if (avail == 0 || k == 0) return {};
  if (a.dim() <= kDenseCutoff || avail <= 4 * k + 20) return dense_path<S>(a, k, q);

  std::size_t m = opt.basis_size ? opt.basis_size : std::max<std::size_t>(4 * k + 24, 48);
  m = std::min(m, avail - 1);
  const std::size_t keep_each = k + std::max<std::size_t>(1, (m - 2 * k) / 4);
  const auto M = static_cast<Eigen::Index>(m);

  std::mt19937_64 gen(opt.seed);
  Mat<S> v(n, M + 1);
  Mat<S> t = Mat<S>::Zero(M, M);
  v.col(0) = random_direction<S>(n, gen, q, v, 0);
  Eigen::Index j0 = 0;
  ExtremeEigen out;
  Vec<S> w;
  double best_residual = std::numeric_limits<double>::infinity();

  for (std::size_t restart = 0;; ++restart) {
    double beta = 0.0;
    for (Eigen::Index j = j0; j < M; ++j) {
      apply_op<S>(a, Vec<S>(v.col(j)), w);
      ++out.matvecs;
      project_out(q, w);
      Vec<S> h = v.leftCols(j + 1).adjoint() * w;
      w -= v.leftCols(j + 1) * h;
      const Vec<S> h2 = v.leftCols(j + 1).adjoint() * w;
      w -= v.leftCols(j + 1) * h2;
      h += h2;
      project_out(q, w);
      for (Eigen::Index i = 0; i <= j; ++i) {
        t(i, j) = h(i);
        t(j, i) = Eigen::numext::conj(h(i));
      }
      t(j, j) = S(std::real(h(j)));
      beta = w.norm();
      const double scale = std::max(1.0, t.topLeftCorner(j + 1, j + 1).cwiseAbs().maxCoeff());
      if (beta <= 1e-12 * scale) {
        beta = 0.0;
        v.col(j + 1) = random_direction<S>(n, gen, q, v, j + 1);
      } else {
        v.col(j + 1) = w / beta;
      }
    }

    Eigen::SelfAdjointEigenSolver<Mat<S>> es(t);
    const auto& theta = es.eigenvalues();
    const Mat<S>& s = es.eigenvectors();
    const double scale = std::max(1.0, theta.cwiseAbs().maxCoeff());
    std::vector<Eigen::Index> wanted;
    for (std::size_t i = 0; i < k; ++i) wanted.push_back(M - 1 - static_cast<Eigen::Index>(i));
    for (std::size_t i = 0; i < k; ++i) wanted.push_back(static_cast<Eigen::Index>(i));
    double worst = 0.0;
    std::vector<double> residuals;
    for (Eigen::Index i : wanted) {
      residuals.push_back(beta * std::abs(s(M - 1, i)));
      worst = std::max(worst, residuals.back());
    }
    best_residual = std::min(best_residual, worst);
    out.restarts = restart;
    if (worst <= opt.tolerance * scale || restart >= opt.max_restarts) {
      for (std::size_t i = 0; i < k; ++i) out.largest.push_back(theta(M - 1 - static_cast<Eigen::Index>(i)));
      for (std::size_t i = 0; i < k; ++i) out.smallest.push_back(theta(static_cast<Eigen::Index>(i)));
      out.residuals = residuals;
      if (worst > opt.tolerance * scale) {
        std::vector<std::complex<double>> best;
        for (double x : out.largest) best.emplace_back(x, 0.0);
        for (double x : out.smallest) best.emplace_back(x, 0.0);
        throw ConvergenceError("Lanczos did not converge; best residual " +
                                   std::to_string(best_residual),
                               std::move(best), best_residual);
      }
      return out;
    }

    // Thick restart on the keep_each extreme Ritz vectors at both ends.
    std::vector<Eigen::Index> keep;
    for (std::size_t i = 0; i < keep_each; ++i) keep.push_back(static_cast<Eigen::Index>(i));
    for (std::size_t i = 0; i < keep_each; ++i) keep.push_back(M - 1 - static_cast<Eigen::Index>(i));
    const auto p = static_cast<Eigen::Index>(keep.size());
    Mat<S> sk(M, p);
    for (Eigen::Index c = 0; c < p; ++c) sk.col(c) = s.col(keep[static_cast<std::size_t>(c)]);
    const Vec<S> last = v.col(M);
    v.leftCols(p) = v.leftCols(M) * sk;
    v.col(p) = last;
    t.setZero();
    for (Eigen::Index c = 0; c < p; ++c) t(c, c) = S(theta(keep[static_cast<std::size_t>(c)]));
    j0 = p;
    if (beta == 0.0) v.col(p) = random_direction<S>(n, gen, q, v, p);
  }
}

}  // namespace

double ExtremeEigen::spectral_radius() const {
  double r = 0.0;
  if (!largest.empty()) r = std::max(r, std::abs(largest.front()));
  if (!smallest.empty()) r = std::max(r, std::abs(smallest.front()));
  return r;
}

ExtremeEigen eig_extreme_symmetric(const SparseOperator& a, std::size_t k,
                                   const std::vector<Eigen::VectorXcd>& deflation,
                                   const ExtremeOptions& options) {
  if (!a.is_hermitian(1e-10)) throw std::invalid_argument("operator is not Hermitian");
  bool real_deflation = true;
  for (const auto& d : deflation) real_deflation = real_deflation && d.imag().isZero(0.0);
  if (a.is_real() && real_deflation) return lanczos<double>(a, k, deflation, options);
  return lanczos<std::complex<double>>(a, k, deflation, options);
}

}  // namespace glim
