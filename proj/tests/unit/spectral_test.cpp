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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "glim/generators/ensembles.hpp"
#include "glim/generators/rng.hpp"
#include "glim/graph/marked_graph.hpp"
#include "glim/spectral/eigensolvers.hpp"
#include "glim/spectral/identities.hpp"
#include "glim/spectral/operators.hpp"
#include "glim/spectral/spectral_laws.hpp"
#include "glim/spectral/spectrum.hpp"
#include "support/test_support.hpp"

namespace glim {
namespace {

using Complex = std::complex<double>;
using testing::TestRng;

MarkedGraph single_edge() {
  const std::vector<EdgeSpec> e = {{0, 1, {}}};
  return MarkedGraph::from_edges(2, e);
}

std::vector<Complex> k4_nb_spectrum() {
  std::vector<Complex> out = {2.0, 1.0, 1.0, 1.0, -1.0, -1.0};
  for (int i = 0; i < 3; ++i) {
    out.emplace_back(-0.5, std::sqrt(7.0) / 2.0);
    out.emplace_back(-0.5, -std::sqrt(7.0) / 2.0);
  }
  return out;
}

TEST(Adjacency, SmallCases) {
  EXPECT_EQ(adjacency(single_edge()).to_dense_real(), (Eigen::Matrix2d() << 0, 1, 1, 0).finished());
  const std::vector<EdgeSpec> loop = {{0, 0, {}}};
  EXPECT_EQ(adjacency(MarkedGraph::from_edges(1, loop)).at(0, 0), Complex(2.0));
  const auto k4 = adjacency(testing::complete_graph(4)).to_dense_real();
  for (Eigen::Index i = 0; i < 4; ++i) EXPECT_EQ(k4.row(i).sum(), 3.0);
  const auto eig = eig_dense_symmetric(k4);
  const std::vector<double> expected = {-1, -1, -1, 3};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(eig[i], expected[i], 1e-12);
}

TEST(Adjacency, WeightedIsHermitianAndDegreeDiagonal) {
  TestRng rng(4);
  const auto g = testing::random_multigraph(8, 14, rng, true, true, true);
  const auto w = weighted_adjacency(g);
  EXPECT_TRUE(w.is_hermitian());
  EXPECT_FALSE(w.is_real() && g.has_marks() && w.at(0, 0).imag() != 0.0);
  const auto d = degree_diagonal(g);
  for (VertexId v = 0; v < 8; ++v) EXPECT_EQ(d.at(v, v), Complex(static_cast<double>(g.degree(v))));
  EXPECT_EQ(SparseOperator::distance(weighted_adjacency(testing::cycle_graph(5)),
                                     adjacency(testing::cycle_graph(5))),
            0.0);
}

TEST(LocalOperator, AdjacencyKernelMatchesWeightedAdjacency) {
  TestRng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto g = testing::random_multigraph(7, 10, rng, false, true, t % 2 == 0);
    EXPECT_LE(SparseOperator::distance(local_operator(g, LocalKernel::adjacency()),
                                       weighted_adjacency(g)),
              1e-15);
  }
}

TEST(LocalOperator, DistanceTwoOnSixCycle) {
  const auto g = testing::cycle_graph(6);
  const auto a = adjacency(g);
  const auto expected = a * a - degree_diagonal(g);
  EXPECT_EQ(SparseOperator::distance(local_operator(g, LocalKernel::distance_indicator(2)),
                                     expected),
            0.0);
}

TEST(LocalOperator, IdentityKernel) {
  const auto g = testing::two_component_graph();
  EXPECT_EQ(SparseOperator::distance(local_operator(g, LocalKernel::identity()),
                                     SparseOperator::identity(6)),
            0.0);
}

TEST(LocalOperator, ZeroAcrossComponents) {
  const auto op = local_operator(testing::two_component_graph(), LocalKernel::distance_indicator(1));
  for (VertexId v = 0; v < 4; ++v) {
    EXPECT_EQ(op.at(v, 4), Complex(0.0));
    EXPECT_EQ(op.at(5, v), Complex(0.0));
  }
}

TEST(NonBacktracking, TriangleIsTwoThreeCycles) {
  const auto b = non_backtracking(testing::cycle_graph(3));
  EXPECT_EQ(b.nnz(), 6u);
  std::vector<Complex> expected;
  for (int k = 0; k < 3; ++k) {
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0);
    expected.push_back(w);
    expected.push_back(w);
  }
  EXPECT_LE(multiset_distance(eig_dense_general(b.to_dense()), expected), 1e-10);
}

TEST(NonBacktracking, SingleEdgeIsZero) {
  EXPECT_EQ(non_backtracking(single_edge()).nnz(), 0u);
}

TEST(NonBacktracking, CompleteGraphSpectrum) {
  const auto g = testing::complete_graph(4);
  EXPECT_LE(multiset_distance(nb_spectrum_dense(g), k4_nb_spectrum()), 1e-10);
  EXPECT_LE(multiset_distance(nb_spectrum_linearized(g), k4_nb_spectrum()), 1e-10);
}

TEST(NonBacktracking, EntriesFollowDefinition) {
  TestRng rng(9);
  const auto g = testing::random_multigraph(6, 9, rng, false, true, true);
  const auto b = non_backtracking(g, true);
  const auto plain = non_backtracking(g);
  for (HalfEdgeId f = 0; f < g.half_edge_count(); ++f) {
    for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) {
      const bool link = g.target(e) == g.source(f) && f != MarkedGraph::partner(e);
      EXPECT_EQ(plain.at(f, e), Complex(link ? 1.0 : 0.0));
      EXPECT_EQ(b.at(f, e), link ? g.mark(e) : Complex(0.0));
    }
  }
}

TEST(NonBacktracking, LinearizationMatchesDenseOnRandomGraphs) {
  TestRng rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto g = testing::random_multigraph(7, 10, rng, true);
    EXPECT_LE(multiset_distance(nb_spectrum_linearized(g), nb_spectrum_dense(g)), 1e-7);
  }
}

TEST(Eigensolvers, IdentityExtremes) {
  const auto res = eig_extreme_symmetric(SparseOperator::identity(30), 2);
  ASSERT_EQ(res.largest.size(), 2u);
  EXPECT_NEAR(res.largest[0], 1.0, 1e-12);
  EXPECT_NEAR(res.largest[1], 1.0, 1e-12);
}

TEST(Eigensolvers, CycleClosedForm) {
  const std::size_t n = 200;
  const auto a = adjacency(testing::cycle_graph(n));
  std::vector<double> closed;
  for (std::size_t j = 0; j < n; ++j) closed.push_back(2.0 * std::cos(2.0 * std::numbers::pi * j / n));
  std::sort(closed.begin(), closed.end());
  const auto dense = eig_dense_symmetric(a.to_dense_real());
  for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(dense[i], closed[i], 1e-10);
  const auto it = eig_extreme_symmetric(a, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(it.largest[i], closed[n - 1 - i], 1e-8);
    EXPECT_NEAR(it.smallest[i], closed[i], 1e-8);
  }
}

TEST(Eigensolvers, DeflationRemovesPerronVector) {
  const auto g = random_regular(400, 4, Seed{2});
  const auto a = adjacency(g);
  const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(400) / std::sqrt(400.0);
  const auto it = eig_extreme_symmetric(a, 2, {ones});
  const auto dense = eig_dense_symmetric(a.to_dense_real());
  EXPECT_NEAR(it.largest[0], dense[dense.size() - 2], 1e-8);
  EXPECT_NEAR(it.smallest[0], dense[0], 1e-8);
  EXPECT_NEAR(it.spectral_radius(), std::max(dense[dense.size() - 2], -dense[0]), 1e-8);
  for (double r : it.residuals) EXPECT_LE(r, 1e-7);
}

TEST(EigensolversProperty, IterativeMatchesDense) {
  TestRng rng(23);
  for (int t = 0; t < 8; ++t) {
    const auto g = testing::random_multigraph(150, 300, rng, true);
    const auto a = adjacency(g);
    const auto dense = eig_dense_symmetric(a.to_dense_real());
    const auto it = eig_extreme_symmetric(a, 2);
    EXPECT_NEAR(it.largest[0], dense.back(), 1e-8);
    EXPECT_NEAR(it.largest[1], dense[dense.size() - 2], 1e-8);
    EXPECT_NEAR(it.smallest[0], dense.front(), 1e-8);
  }
}

TEST(Eigensolvers, NonsymmetricTopOfCompleteGraph) {
  const auto top = eig_top_nonsymmetric(non_backtracking(testing::complete_graph(4)), 2);
  ASSERT_GE(top.values.size(), 2u);
  EXPECT_NEAR(std::abs(top.values[0] - Complex(2.0)), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(top.values[1]), std::sqrt(2.0), 1e-8);
}

TEST(Eigensolvers, NonsymmetricMatchesDenseOnRegularGraph) {
  const auto g = random_regular(100, 3, Seed{6}, {RegularModel::kPairing, true, 1000});
  const auto b = non_backtracking(g);
  const auto dense = eig_dense_general(b.to_dense());
  std::vector<double> mods;
  for (auto z : dense) mods.push_back(std::abs(z));
  std::sort(mods.rbegin(), mods.rend());
  const auto top = eig_top_nonsymmetric(b, 3);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(top.values[i]), mods[i], 1e-7);
}

TEST(Eigensolvers, ConvergenceFailureCarriesEstimate) {
  const auto a = adjacency(random_regular(3000, 4, Seed{1}));
  ExtremeOptions opts;
  opts.max_restarts = 0;
  opts.basis_size = 8;
  opts.tolerance = 1e-14;
  try {
    eig_extreme_symmetric(a, 4, {}, opts);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_FALSE(e.best_estimate().empty());
    EXPECT_GT(e.best_residual(), 1e-14);
  }
}

TEST(Moments, TreeBallWalkCounts) {
  const auto m = spectral_moments(regular_tree_ball(4, 3), 6);
  ASSERT_EQ(m.size(), 7u);
  EXPECT_EQ(m[0], 1.0);
  EXPECT_EQ(m[1], 0.0);
  EXPECT_EQ(m[2], 4.0);
  EXPECT_EQ(m[4], 28.0);
  const auto exact = regular_tree_moments(4, 6);
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(m[k], exact[k]);
  EXPECT_EQ(exact[6], 232.0);
}

TEST(MomentsProperty, ClosedWalkCounts) {
  TestRng rng(29);
  for (int t = 0; t < 30; ++t) {
    const auto g = testing::random_multigraph(9, 15, rng, false);
    const auto v = static_cast<VertexId>(testing::uniform(rng, 9));
    const auto m = spectral_moments(g, LocalKernel::adjacency(), v, 8);
    const auto oracle = testing::closed_walk_counts(g, v, 8);
    for (std::size_t k = 0; k <= 8; ++k) EXPECT_EQ(m[k], oracle[k]);
  }
}

TEST(MomentsProperty, SpatialAverageIsEsdMoment) {
  TestRng rng(31);
  const auto g = testing::random_multigraph(40, 90, rng, true);
  const auto a = adjacency(g);
  const auto eig = eig_dense_symmetric(a.to_dense_real());
  const auto report = make_spectrum_report(eig, 6);
  std::vector<double> avg(7, 0.0);
  for (std::size_t v = 0; v < 40; ++v) {
    const auto m = spectral_moments(a, v, 6);
    for (std::size_t k = 0; k <= 6; ++k) avg[k] += m[k] / 40.0;
  }
  for (std::size_t k = 0; k <= 6; ++k) {
    EXPECT_NEAR(avg[k], report.moments[k], 1e-8 * std::max(1.0, std::abs(avg[k])));
  }
  // Trace identities: mean = Tr A / n, second moment = Tr A^2 / n.
  const auto dense = a.to_dense_real();
  EXPECT_NEAR(report.moments[1], dense.trace() / 40.0, 1e-10);
  EXPECT_NEAR(report.moments[2], (dense * dense).trace() / 40.0, 1e-10);
}

TEST(Spectrum, RegularGraphMeanAndVariance) {
  const auto a = adjacency(random_regular(500, 4, Seed{3}, {RegularModel::kPairing, true, 1000}));
  const auto report = make_spectrum_report(eig_dense_symmetric(a.to_dense_real()), 2);
  EXPECT_NEAR(report.moments[1], 0.0, 1e-10);
  EXPECT_NEAR(report.moments[2], 4.0, 1e-10);
  double mass = 0.0;
  for (double x : report.histogram.masses) mass += x;
  EXPECT_NEAR(mass, 1.0, 1e-12);
  EXPECT_EQ(report.histogram.edges.size(), 101u);
  EXPECT_NEAR(report.lambda1, 4.0, 1e-10);
  const auto j = report.to_json(false);
  EXPECT_TRUE(j.contains("moments"));
  EXPECT_FALSE(j.contains("eigenvalues") && !j["eigenvalues"].is_null() &&
               !j["eigenvalues"].empty());
}

TEST(Spectrum, HistogramAndDistances) {
  const std::vector<double> values = {0.0, 0.5, 1.0, 1.0};
  const auto h = esd_histogram(values, 2);
  ASSERT_EQ(h.masses.size(), 2u);
  EXPECT_DOUBLE_EQ(h.masses[0], 0.25);
  EXPECT_DOUBLE_EQ(h.masses[1], 0.75);
  // Uniform samples at (i + 1/2)/N against the uniform CDF: KS = 1/(2N).
  std::vector<double> u;
  for (int i = 0; i < 10; ++i) u.push_back((i + 0.5) / 10.0);
  EXPECT_NEAR(ks_distance(u, [](double x) { return std::clamp(x, 0.0, 1.0); }), 0.05, 1e-12);
  EXPECT_NEAR(multiset_distance({Complex(1, 0), Complex(0, 1)}, {Complex(0, 1), Complex(1, 0.1)}),
              0.1, 1e-12);
  const auto csv = complex_scatter_csv({Complex(1.5, -2.0)});
  EXPECT_EQ(csv.substr(0, 6), "re,im\n");
  const auto svg = histogram_svg(h, "t", [](double) { return 1.0; });
  EXPECT_NE(svg.find("<svg"), std::string::npos);
}

TEST(KestenMckay, DensityValues) {
  EXPECT_NEAR(kesten_mckay_density(4, 0.0), std::sqrt(3.0) / (4.0 * std::numbers::pi), 1e-14);
  EXPECT_NEAR(kesten_mckay_density(4, 0.0), 0.13783, 1e-5);
  EXPECT_NEAR(kesten_mckay_density(4, 2.0 * std::sqrt(3.0)), 0.0, 1e-6);
  EXPECT_EQ(kesten_mckay_density(4, 4.0), 0.0);
  EXPECT_NEAR(kesten_mckay_cdf(4, 1e9), 1.0, 1e-10);
  EXPECT_NEAR(kesten_mckay_cdf(4, 0.0), 0.5, 1e-10);
  EXPECT_EQ(kesten_mckay_cdf(4, -10.0), 0.0);
  // d = 2: arcsine law on [-2, 2].
  EXPECT_NEAR(kesten_mckay_density(2, 0.0), 1.0 / (2.0 * std::numbers::pi), 1e-14);
  EXPECT_NEAR(kesten_mckay_cdf(2, 1.0), 0.5 + std::asin(0.5) / std::numbers::pi, 1e-9);
}

TEST(KestenMckay, MomentsMatchTreeWalks) {
  // Midpoint rule in the angle variable x = 2 sqrt(d-1) cos(theta) removes the edge singularity.
  for (int d : {3, 4, 6}) {
    const double edge = 2.0 * std::sqrt(d - 1.0);
    const auto exact = regular_tree_moments(d, 6);
    const int steps = 200000;
    std::vector<double> m(7, 0.0);
    for (int i = 0; i < steps; ++i) {
      const double theta = std::numbers::pi * (i + 0.5) / steps;
      const double x = edge * std::cos(theta);
      const double w = kesten_mckay_density(d, x) * edge * std::sin(theta) * std::numbers::pi / steps;
      double p = 1.0;
      for (int k = 0; k <= 6; ++k, p *= x) m[k] += w * p;
    }
    for (int k = 0; k <= 6; ++k) EXPECT_NEAR(m[k], exact[k], 1e-6 * std::max(1.0, exact[k]));
  }
}

// Smallest fixed point of q = exp(-d exp(-d q)) by monotone iteration from 0.
long double gw_oracle(long double d) {
  long double q = 0.0L;
  for (int i = 0; i < 2000000; ++i) {
    const long double next = std::exp(-d * std::exp(-d * q));
    if (std::fabs(next - q) < 1e-19L) return next;
    q = next;
  }
  return q;
}

TEST(GwKernel, MatchesFixedPointOracle) {
  for (double d : {0.1, 0.5, 1.0, 2.0, 3.5, 4.0, 6.0, 10.0}) {
    const auto km = gw_kernel_mass(d);
    const long double q = gw_oracle(d);
    EXPECT_NEAR(km.q, static_cast<double>(q), 1e-10) << d;
    const long double mass = q + std::exp(-d * q) + d * q * std::exp(-d * q) - 1.0L;
    EXPECT_NEAR(km.mass, static_cast<double>(mass), 1e-10) << d;
  }
}

TEST(GwKernel, LimitsAndMonotonicity) {
  EXPECT_NEAR(gw_kernel_mass(1e-6).mass, 1.0, 1e-5);
  EXPECT_NEAR(gw_kernel_mass(4.0).mass, 0.02216, 5e-5);
  double previous = gw_kernel_mass(0.1).mass;
  for (int i = 11; i <= 1000; ++i) {
    const double d = 0.01 * i;
    const double m = gw_kernel_mass(d).mass;
    EXPECT_LE(m, previous + 1e-12) << d;
    EXPECT_NEAR(m, previous, 0.02) << d;
    previous = m;
  }
}

TEST(GwKernel, ExtinctionProbability) {
  EXPECT_NEAR(gw_extinction_probability(0.5), 1.0, 1e-12);
  const double q = gw_extinction_probability(2.0);
  EXPECT_NEAR(q, std::exp(2.0 * (q - 1.0)), 1e-12);
  EXPECT_LT(q, 1.0);
}

TEST(IharaBass, TriangleAtTwo) {
  const auto r = ihara_bass_residual(testing::cycle_graph(3), 2.0);
  EXPECT_EQ(r.chi, 1);
  EXPECT_LE(r.relative_gap, 1e-10);
}

TEST(IharaBass, CompleteGraphAnnulus) {
  TestRng rng(3);
  std::uniform_real_distribution<double> radius(0.5, 3.0), angle(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 20; ++i) {
    const auto r = ihara_bass_residual(testing::complete_graph(4), std::polar(radius(rng), angle(rng)));
    EXPECT_LE(r.relative_gap, 1e-8);
  }
}

TEST(IharaBass, SingleEdgeNegativeExponent) {
  const Complex z(1.3, 0.4);
  const auto r = ihara_bass_residual(single_edge(), z);
  EXPECT_EQ(r.chi, 0);
  EXPECT_LE(std::abs(r.lhs - z * z), 1e-12);
  // det(z^2 I - z A) = z^4 - z^2.
  EXPECT_LE(std::abs(r.rhs - (std::pow(z, 4) - z * z) / (z * z - 1.0)), 1e-12);
  EXPECT_LE(r.relative_gap, 1e-12);
}

TEST(IharaBassProperty, RandomMultigraphs) {
  TestRng rng(71);
  std::uniform_real_distribution<double> radius(0.5, 3.0), angle(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 4 + testing::uniform(rng, 9);
    const auto g = testing::random_multigraph(n, n - 1 + testing::uniform(rng, 2 * n + 2), rng, true);
    for (int i = 0; i < 5; ++i) {
      EXPECT_LE(ihara_bass_residual(g, std::polar(radius(rng), angle(rng))).relative_gap, 1e-8);
    }
  }
}

TEST(A2B, CompleteGraph) {
  const std::vector<double> mu = {3, -1, -1, -1};
  EXPECT_LE(multiset_distance(regular_nb_from_adjacency(mu, 3), k4_nb_spectrum()), 1e-12);
}

TEST(A2B, TreeEdgeDoubleRoot) {
  const std::vector<double> mu = {2.0 * std::sqrt(3.0)};
  const auto roots = regular_nb_from_adjacency(mu, 4);
  std::vector<Complex> quad;
  for (auto z : roots) {
    if (std::abs(std::abs(z) - 1.0) > 1e-6) quad.push_back(z);
  }
  ASSERT_EQ(quad.size(), 2u);
  for (auto z : quad) EXPECT_NEAR(std::abs(z - std::sqrt(3.0)), 0.0, 1e-7);
}

TEST(A2BProperty, SmallRegularGraphs) {
  for (std::size_t n : {4u, 5u, 6u}) {
    for (std::size_t d : {2u, 3u, 4u}) {
      for (const auto& g : testing::labelled_regular_graphs(n, d)) {
        const auto mu = eig_dense_symmetric(adjacency(g).to_dense_real());
        EXPECT_LE(multiset_distance(regular_nb_from_adjacency(mu, d), nb_spectrum_dense(g)), 1e-8);
      }
    }
  }
}

struct NbEigenpair {
  Eigen::VectorXcd vector;
  Complex value;
};

std::vector<NbEigenpair> nb_eigenpairs(const MarkedGraph& g) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(non_backtracking(g).to_dense());
  std::vector<NbEigenpair> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    out.push_back({solver.eigenvectors().col(i), solver.eigenvalues()[i]});
  }
  return out;
}

TEST(Divergence, PerronAndComplexEigenvectors) {
  const auto g = testing::complete_graph(4);
  bool saw_perron = false, saw_complex = false;
  for (const auto& [phi, lambda] : nb_eigenpairs(g)) {
    if (std::abs(std::abs(lambda) - 1.0) < 1e-6) {
      EXPECT_THROW(divergence_eigenvector_map(g, phi, lambda), std::invalid_argument);
      continue;
    }
    const auto r = divergence_eigenvector_map(g, phi, lambda);
    EXPECT_LE(r.residual, 1e-6);
    EXPECT_LE(std::abs(r.mu - (lambda + 2.0 / lambda)), 1e-9);
    if (std::abs(lambda - 2.0) < 1e-8) {
      saw_perron = true;
      EXPECT_NEAR(std::abs(r.mu - 3.0), 0.0, 1e-9);
      EXPECT_LE((r.phi_hat.array() - r.phi_hat[0]).abs().maxCoeff(), 1e-9 * r.phi_hat.norm());
    }
    if (std::abs(lambda.imag()) > 1e-6) {
      saw_complex = true;
      EXPECT_NEAR(std::abs(r.mu + 1.0), 0.0, 1e-9);
    }
  }
  EXPECT_TRUE(saw_perron);
  EXPECT_TRUE(saw_complex);
}

TEST(Divergence, NullDivergenceFlagged) {
  // The zero vector takes the null branch.
  const auto g = testing::complete_graph(4);
  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.half_edge_count()));
  const auto r = divergence_eigenvector_map(g, zero, 2.0);
  EXPECT_TRUE(r.null_divergence);
  EXPECT_EQ(r.residual, 0.0);
}

}  // namespace
}  // namespace glim
