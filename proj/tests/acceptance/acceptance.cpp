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

// One line per acceptance criterion; exits nonzero if any fails.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "glim/experiments/experiments.hpp"
#include "glim/experiments/report.hpp"
#include "glim/generators/ensembles.hpp"
#include "glim/generators/rng.hpp"
#include "glim/graph/ball.hpp"
#include "glim/graph/canonical.hpp"
#include "glim/graph/neighborhood.hpp"
#include "glim/spectral/eigensolvers.hpp"
#include "glim/spectral/identities.hpp"
#include "glim/spectral/operators.hpp"
#include "glim/spectral/spectral_laws.hpp"
#include "glim/spectral/spectrum.hpp"
#include "support/test_support.hpp"

namespace glim {
namespace {

using Complex = std::complex<double>;
using Clock = std::chrono::steady_clock;

// Pinned tolerances and budgets.
constexpr std::uint64_t kSeed = 1;
constexpr double kIharaBassGap = 1e-8;
constexpr double kIharaBassSeconds = 10.0;
constexpr double kA2BDistance = 1e-8;
constexpr double kA2BSeconds = 30.0;
constexpr double kUnimodularGap = 1e-10;
constexpr double kKestenMckayKs = 0.02;
constexpr double kKestenMckaySeconds = 120.0;
constexpr double kGwTolerance = 0.01;
constexpr double kGwOracle = 1e-10;
constexpr double kFriedmanEps = 0.1;
constexpr double kFriedmanSeconds = 300.0;
constexpr double kErEps = 0.2;
constexpr double kErLambda1 = 0.4;
constexpr double kFixedPointFraction = 0.01;
constexpr double kStrongGap = 0.15;
constexpr double kStrongLowerBound = 0.08;
constexpr double kDistanceFraction = 0.05;
constexpr double kDistanceControl = 0.5;
constexpr double kDistanceSeconds = 120.0;
constexpr double kCoverOld = 1e-8;
constexpr double kCoverEps = 0.2;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double check_value(const ExperimentReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c.value;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::filesystem::path artifact_dir() {
  const auto dir = std::filesystem::current_path() / "acceptance_artifacts";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string summarize(const ExperimentReport& r) {
  std::string s;
  for (const auto& c : r.checks) {
    if (!c.gating) continue;
    s += fmt("%s %.4g %s %.4g; ", c.name.c_str(), c.value, c.relation.c_str(), c.threshold);
  }
  if (!s.empty()) s.resize(s.size() - 2);
  write_report(artifact_dir() / (r.name + ".json"), r);
  return s;
}

// Both determinants from dense matrices, independently of the library routine.
double ihara_bass_oracle(const MarkedGraph& g, Complex z) {
  const auto b = non_backtracking(g).to_dense();
  const auto a = adjacency(g).to_dense();
  const auto d = degree_diagonal(g).to_dense();
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const Complex lhs =
      (z * Eigen::MatrixXcd::Identity(b.rows(), b.cols()) - b).partialPivLu().determinant();
  const auto chi = static_cast<long long>(g.edge_count()) - static_cast<long long>(n) + 1;
  const Complex core = (z * z * Eigen::MatrixXcd::Identity(n, n) - z * a + d -
                        Eigen::MatrixXcd::Identity(n, n))
                           .partialPivLu()
                           .determinant();
  const Complex rhs = std::pow(z * z - 1.0, static_cast<int>(chi - 1)) * core;
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

Outcome criterion_ihara_bass() {
  const auto t0 = Clock::now();
  testing::TestRng rng(kSeed);
  std::uniform_real_distribution<double> radius(0.5, 3.0), angle(0.0, 2.0 * std::numbers::pi);
  int good = 0, total = 0;
  double worst = 0.0, worst_oracle = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 4 + testing::uniform(rng, 9);
    // Average degree 2m/n <= 6.
    const std::size_t m = n - 1 + testing::uniform(rng, 2 * n + 2);
    const auto g = testing::random_multigraph(n, m, rng, true);
    for (int i = 0; i < 20; ++i) {
      const Complex z = std::polar(radius(rng), angle(rng));
      const double gap = ihara_bass_residual(g, z).relative_gap;
      const double oracle = ihara_bass_oracle(g, z);
      worst = std::max(worst, gap);
      worst_oracle = std::max(worst_oracle, oracle);
      good += gap <= kIharaBassGap && oracle <= kIharaBassGap;
      ++total;
    }
  }
  const double secs = seconds_since(t0);
  return {good == 1000 && secs < kIharaBassSeconds,
          fmt("%d/%d gaps <= %.0e (max %.2e, oracle max %.2e), %.2f s < %.0f s", good, total,
              kIharaBassGap, worst, worst_oracle, secs, kIharaBassSeconds)};
}

Outcome criterion_a2b() {
  const auto t0 = Clock::now();
  std::size_t good = 0, total = 0;
  double worst = 0.0;
  auto test = [&](const MarkedGraph& g, std::size_t d) {
    const auto mu = eig_dense_symmetric(adjacency(g).to_dense_real());
    const double dist = multiset_distance(regular_nb_from_adjacency(mu, d), nb_spectrum_dense(g));
    worst = std::max(worst, dist);
    good += dist <= kA2BDistance;
    ++total;
  };
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t d = 1; d < n; ++d) {
      for (const auto& g : testing::labelled_regular_graphs(n, d, true)) test(g, d);
    }
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const std::size_t d = 3 + s % 3;
    test(random_regular(10, d, Seed{kSeed}.split(s), {RegularModel::kPairing, true, 100000}), d);
  }
  const double secs = seconds_since(t0);
  return {good == total && secs < kA2BSeconds,
          fmt("%zu/%zu regular graphs (n <= 8 enumerated, 20 at n = 10) match to %.0e "
              "(max %.2e), %.2f s < %.0f s",
              good, total, kA2BDistance, worst, secs, kA2BSeconds)};
}

Outcome criterion_unimodularity() {
  testing::TestRng rng(kSeed);
  std::uniform_int_distribution<std::uint64_t> salt_dist;
  int good = 0, total = 0;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + testing::uniform(rng, 20);
    const auto g = testing::random_multigraph(n, testing::uniform(rng, 3 * n + 1), rng, t % 3 == 0,
                                              true, t % 2 == 0);
    const std::uint64_t salt = salt_dist(rng);
    const std::vector<EdgeTestFunction> functions = {
        [&](const EdgeRootedBall&, const RootedBallClass& c) {
          return static_cast<double>(splitmix64(std::hash<std::string>{}(c.code) ^ salt) >> 11) *
                 0x1.0p-53;
        },
        [](const EdgeRootedBall& b, const RootedBallClass&) {
          const double dh = static_cast<double>(b.graph.degree(b.graph.target(b.root)));
          return dh * dh;
        },
        [](const EdgeRootedBall& b, const RootedBallClass&) {
          return static_cast<double>(b.graph.vertex_count()) /
                 (1.0 + static_cast<double>(b.graph.degree(b.graph.source(b.root))));
        },
        [](const EdgeRootedBall& b, const RootedBallClass&) {
          return b.graph.source(b.root) == b.graph.target(b.root) ? 3.0 : 0.5;
        },
        [](const EdgeRootedBall& b, const RootedBallClass&) {
          const Mark m = b.graph.mark(b.root);
          return 2.0 + m.real() + m.imag();
        },
    };
    for (const auto& f : functions) {
      const auto r = static_cast<std::uint32_t>(1 + testing::uniform(rng, 2));
      const auto gap = unimodularity_gap(g, f, r);
      // Direct sum over half-edges as the oracle for both sides.
      double direct = 0.0;
      for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) {
        const auto eb = edge_ball(g, e, r);
        direct += f(eb, canonical_class(eb));
      }
      direct /= static_cast<double>(n);
      const double scale = std::max({std::abs(gap.lhs), std::abs(gap.rhs), 1e-300});
      const double rel = std::max({gap.relative_gap(), std::abs(gap.lhs - direct) / scale,
                                   std::abs(gap.rhs - direct) / scale});
      worst = std::max(worst, g.half_edge_count() == 0 ? 0.0 : rel);
      good += g.half_edge_count() == 0 || rel <= kUnimodularGap;
      ++total;
    }
  }
  return {good == total,
          fmt("%d/%d graph-function pairs with lhs = rhs = direct sum to %.0e (max %.2e)", good,
              total, kUnimodularGap, worst)};
}

Outcome criterion_kesten_mckay() {
  KestenMckayParams p;
  p.ks_tolerance = kKestenMckayKs;
  const auto r = exp_kesten_mckay(p, Seed{kSeed});
  const double ks = check_value(r, "ks_distance");
  return {ks <= kKestenMckayKs && r.pass() && r.wall_clock_s < kKestenMckaySeconds,
          summarize(r) + fmt(", %.1f s < %.0f s", r.wall_clock_s, kKestenMckaySeconds)};
}

long double gw_oracle(long double d) {
  long double q = 0.0L;
  for (int i = 0; i < 1000000; ++i) {
    const long double next = std::exp(-d * std::exp(-d * q));
    if (std::fabs(next - q) < 1e-19L) return next;
    q = next;
  }
  return q;
}

Outcome criterion_gw_kernel() {
  GwKernelParams p;
  p.tolerance = kGwTolerance;
  const auto r = exp_gw_kernel(p, Seed{kSeed});
  double oracle_gap = 0.0;
  for (double d : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const auto km = gw_kernel_mass(d);
    const long double q = gw_oracle(d);
    const long double mass = q + std::exp(-d * q) + d * q * std::exp(-d * q) - 1.0L;
    oracle_gap = std::max({oracle_gap, std::abs(km.q - static_cast<double>(q)),
                           std::abs(km.mass - static_cast<double>(mass))});
  }
  return {r.pass() && oracle_gap <= kGwOracle,
          summarize(r) + fmt(", fixed-point oracle gap %.2e <= %.0e", oracle_gap, kGwOracle)};
}

Outcome criterion_friedman() {
  FriedmanParams p;
  p.eps = kFriedmanEps;
  const auto r = exp_friedman(p, Seed{kSeed});
  return {r.pass() && r.wall_clock_s < kFriedmanSeconds,
          summarize(r) + fmt(", %.1f s < %.0f s", r.wall_clock_s, kFriedmanSeconds)};
}

Outcome criterion_er_edges() {
  ErEdgesParams p;
  p.eps = kErEps;
  p.lambda1_tolerance = kErLambda1;
  const auto r = exp_er_edges(p, Seed{kSeed});
  bool scatter = false;
  for (const auto& a : r.artifacts) scatter |= a.name == "scatter.csv" && a.content.size() > 6;
  return {r.pass() && scatter, summarize(r) + (scatter ? ", scatter CSV written" : ", no scatter")};
}

Outcome criterion_schreier_fixed_points() {
  BsConvergenceParams p;
  p.ensemble = "schreier";
  p.limit = "character-triviality";
  p.n_list = {10000};
  p.seeds = 5;
  p.max_word_length = 3;
  p.fixed_point_tolerance = kFixedPointFraction;
  const auto r = exp_bs_convergence(p, Seed{kSeed});
  return {r.pass(), summarize(r)};
}

Outcome criterion_strong_convergence() {
  StrongConvergenceParams p;
  p.gap_tolerance = kStrongGap;
  p.lower_bound_tolerance = kStrongLowerBound;
  const auto r = exp_strong_convergence(p, Seed{kSeed});
  return {r.pass(), summarize(r)};
}

Outcome criterion_distance_profile() {
  DistanceProfileParams p;
  p.max_fraction = kDistanceFraction;
  p.control_min_fraction = kDistanceControl;
  const auto r = exp_distance_profile(p, Seed{kSeed});
  return {r.pass() && r.wall_clock_s < kDistanceSeconds,
          summarize(r) + fmt(", %.1f s < %.0f s", r.wall_clock_s, kDistanceSeconds)};
}

Outcome criterion_cover_spectrum() {
  CoverSpectrumParams p;
  p.base = "theta3";
  p.eps = kCoverEps;
  p.old_tolerance = kCoverOld;
  const auto r = exp_cover_spectrum(p, Seed{kSeed});
  return {r.pass(), summarize(r)};
}

}  // namespace
}  // namespace glim

int main() {
  using glim::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"ihara-bass", glim::criterion_ihara_bass},
      {"a2b-correspondence", glim::criterion_a2b},
      {"unimodularity", glim::criterion_unimodularity},
      {"kesten-mckay", glim::criterion_kesten_mckay},
      {"gw-kernel-mass", glim::criterion_gw_kernel},
      {"friedman", glim::criterion_friedman},
      {"er-nb-edges", glim::criterion_er_edges},
      {"schreier-fixed-points", glim::criterion_schreier_fixed_points},
      {"strong-convergence", glim::criterion_strong_convergence},
      {"distance-profile", glim::criterion_distance_profile},
      {"lift-spectra", glim::criterion_cover_spectrum},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
