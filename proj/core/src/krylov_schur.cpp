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

// Krylov-Schur iteration for the largest-modulus eigenvalues of a general
// operator, in complex arithmetic.
//
// Relation kept between restarts: B V_m = V_m H + v_m r*, with V orthonormal.
// A restart takes the complex Schur form H = U T U*, moves the wanted Ritz
// values to the top of T by adjacent Givens swaps, and truncates.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "glim/spectral/eigensolvers.hpp"

namespace glim {
namespace {

using cd = std::complex<double>;

// Rotation [c s; -conj(s) c] taking (f, g) to (r, 0).
void givens(cd f, cd g, double& c, cd& s) {
  if (g == cd{}) {
    c = 1.0;
    s = 0.0;
    return;
  }
  if (f == cd{}) {
    c = 0.0;
    s = std::conj(g) / std::abs(g);
    return;
  }
  const double nf = std::abs(f), ng = std::abs(g);
  const double norm = std::hypot(nf, ng);
  c = nf / norm;
  s = (f / nf) * std::conj(g) / norm;
}

template <typename X, typename Y>
void rotate(X&& x, Y&& y, double c, cd s) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const cd xi = x(i), yi = y(i);
    x(i) = c * xi + s * yi;
    y(i) = c * yi - std::conj(s) * xi;
  }
}

// Swaps the diagonal entries i and i+1 of the upper-triangular t, updating
// the unitary u so that u t u* is unchanged.
void swap_schur(Eigen::MatrixXcd& t, Eigen::MatrixXcd& u, Eigen::Index i) {
  const Eigen::Index m = t.rows();
  const cd t11 = t(i, i), t22 = t(i + 1, i + 1);
  double c;
  cd s;
  givens(t(i, i + 1), t22 - t11, c, s);
  if (i + 2 < m) {
    rotate(t.row(i).segment(i + 2, m - i - 2), t.row(i + 1).segment(i + 2, m - i - 2), c, s);
  }
  if (i > 0) rotate(t.col(i).head(i), t.col(i + 1).head(i), c, std::conj(s));
  t(i, i) = t22;
  t(i + 1, i + 1) = t11;
  rotate(u.col(i), u.col(i + 1), c, std::conj(s));
}

// Reorders so that |t(0,0)| >= |t(1,1)| >= ...
void sort_schur(Eigen::MatrixXcd& t, Eigen::MatrixXcd& u, Eigen::Index count) {
  const Eigen::Index m = t.rows();
  for (Eigen::Index pos = 0; pos < std::min(count, m); ++pos) {
    Eigen::Index best = pos;
    for (Eigen::Index j = pos + 1; j < m; ++j) {
      if (std::abs(t(j, j)) > std::abs(t(best, best))) best = j;
    }
    for (Eigen::Index j = best; j > pos; --j) swap_schur(t, u, j - 1);
  }
}

Eigen::VectorXcd random_direction(Eigen::Index n, std::mt19937_64& gen, const Eigen::MatrixXcd& v,
                                  Eigen::Index used) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::VectorXcd x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = cd(dist(gen), 0.0);
    for (int pass = 0; pass < 2; ++pass) {
      if (used > 0) x -= v.leftCols(used) * (v.leftCols(used).adjoint() * x);
    }
    if (x.norm() > 1e-8) return x / x.norm();
  }
  return Eigen::VectorXcd::Zero(n);
}

TopEigen dense_top(const SparseOperator& b, std::size_t k) {
  auto values = eig_dense_general(b.to_dense());
  std::stable_sort(values.begin(), values.end(),
                   [](cd x, cd y) { return std::abs(x) > std::abs(y); });
  values.resize(std::min(k, values.size()));
  TopEigen out;
  out.values = values;
  out.residuals.assign(values.size(), 0.0);
  return out;
}

}  // namespace

TopEigen eig_top_nonsymmetric(const SparseOperator& b, std::size_t k,
                              const ExtremeOptions& opt) {
  const auto n = static_cast<Eigen::Index>(b.dim());
  if (k == 0 || n == 0) return {};
  if (b.dim() <= kDenseGeneralLimit || static_cast<std::size_t>(n) <= 3 * k + 30) {
    return dense_top(b, k);
  }
  std::size_t m = opt.basis_size ? opt.basis_size : std::max<std::size_t>(3 * k + 30, 60);
  m = std::min<std::size_t>(m, static_cast<std::size_t>(n) - 1);
  const std::size_t keep = std::min(m - 2, std::max(k + 1, m / 2));
  const auto M = static_cast<Eigen::Index>(m);
  const auto K = static_cast<Eigen::Index>(k);

  std::mt19937_64 gen(opt.seed);
  Eigen::MatrixXcd v(n, M + 1);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(M + 1, M);
  v.col(0) = random_direction(n, gen, v, 0);
  Eigen::Index j0 = 0;
  TopEigen out;
  Eigen::VectorXcd w(n);
  double best_residual = std::numeric_limits<double>::infinity();
  std::vector<cd> best_values;

  for (std::size_t restart = 0;; ++restart) {
    for (Eigen::Index j = j0; j < M; ++j) {
      b.apply(std::span<const cd>(v.col(j).data(), static_cast<std::size_t>(n)),
              std::span<cd>(w.data(), static_cast<std::size_t>(n)));
      ++out.matvecs;
      Eigen::VectorXcd coeff = v.leftCols(j + 1).adjoint() * w;
      w -= v.leftCols(j + 1) * coeff;
      const Eigen::VectorXcd coeff2 = v.leftCols(j + 1).adjoint() * w;
      w -= v.leftCols(j + 1) * coeff2;
      coeff += coeff2;
      h.col(j).head(j + 1) = coeff;
      const double beta = w.norm();
      const double scale = std::max(1.0, coeff.cwiseAbs().maxCoeff());
      if (beta <= 1e-12 * scale) {
        h(j + 1, j) = 0.0;
        v.col(j + 1) = random_direction(n, gen, v, j + 1);
      } else {
        h(j + 1, j) = beta;
        v.col(j + 1) = w / beta;
      }
    }

    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(h.topRows(M));
    if (schur.info() != Eigen::Success) throw std::runtime_error("Schur decomposition failed");
    Eigen::MatrixXcd t = schur.matrixT();
    Eigen::MatrixXcd u = schur.matrixU();
    sort_schur(t, u, static_cast<Eigen::Index>(keep));

    // Residual of the Ritz pair at diagonal position i is |r* U y| with
    // T y = t_ii y, y triangular.
    const Eigen::RowVectorXcd r = h.row(M) * u;
    double scale = 0.0;
    for (Eigen::Index i = 0; i < M; ++i) scale = std::max(scale, std::abs(t(i, i)));
    scale = std::max(1.0, scale);
    std::vector<double> residuals;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < K; ++i) {
      Eigen::VectorXcd y = Eigen::VectorXcd::Zero(i + 1);
      y(i) = 1.0;
      for (Eigen::Index j = i - 1; j >= 0; --j) {
        cd acc = 0.0;
        for (Eigen::Index l = j + 1; l <= i; ++l) acc += t(j, l) * y(l);
        cd denom = t(j, j) - t(i, i);
        if (std::abs(denom) < 1e-14 * scale) denom = 1e-14 * scale;
        y(j) = -acc / denom;
      }
      y /= y.norm();
      residuals.push_back(std::abs((r.head(i + 1) * y).value()));
      worst = std::max(worst, residuals.back());
    }
    out.restarts = restart;
    std::vector<cd> values;
    for (Eigen::Index i = 0; i < K; ++i) values.push_back(t(i, i));
    if (worst < best_residual) {
      best_residual = worst;
      best_values = values;
    }
    if (worst <= opt.tolerance * scale || restart >= opt.max_restarts) {
      out.values = values;
      out.residuals = residuals;
      if (worst > opt.tolerance * scale) {
        throw ConvergenceError("Krylov-Schur did not converge; best residual " +
                                   std::to_string(best_residual),
                               best_values, best_residual);
      }
      return out;
    }

    const auto p = static_cast<Eigen::Index>(keep);
    const Eigen::VectorXcd last = v.col(M);
    v.leftCols(p) = v.leftCols(M) * u.leftCols(p);
    v.col(p) = last;
    h.setZero();
    h.topLeftCorner(p, p) = t.topLeftCorner(p, p).triangularView<Eigen::Upper>();
    h.row(p).head(p) = r.head(p);
    j0 = p;
  }
}

}  // namespace glim
