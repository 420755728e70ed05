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

#include <atomic>
#include <cmath>
#include <filesystem>
#include <limits>

#include "glim/experiments/experiments.hpp"
#include "glim/experiments/registry.hpp"
#include "glim/experiments/report.hpp"
#include "glim/generators/ensembles.hpp"
#include "glim/graph/graph_io.hpp"
#include "glim/spectral/eigensolvers.hpp"
#include "glim/spectral/operators.hpp"
#include "support/test_support.hpp"

namespace glim {
namespace {

using json = nlohmann::json;

const Check& check(const ExperimentReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("missing check " + name);
}

TEST(Report, RelationsAndGating) {
  EXPECT_TRUE(evaluate_relation(1.0, "<=", 1.0));
  EXPECT_FALSE(evaluate_relation(1.1, "<=", 1.0));
  EXPECT_TRUE(evaluate_relation(2.0, ">=", 1.0));
  EXPECT_FALSE(evaluate_relation(std::numeric_limits<double>::quiet_NaN(), "<=", 1.0));
  EXPECT_FALSE(evaluate_relation(std::numeric_limits<double>::quiet_NaN(), ">=", 1.0));
  ExperimentReport r;
  r.name = "t";
  r.add_check("a", 0.5, "<=", 1.0);
  r.add_check("b", 5.0, "<=", 1.0, false);
  EXPECT_TRUE(r.pass());
  r.add_check("c", std::numeric_limits<double>::infinity(), "<=", 1.0);
  EXPECT_FALSE(r.pass());
  const auto j = r.to_json();
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_TRUE(j["checks"][2]["value"].is_null());
  EXPECT_EQ(j["checks"][1]["gating"], false);
}

TEST(Report, WriteWithArtifacts) {
  const auto dir = std::filesystem::temp_directory_path() / "glim_report_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ExperimentReport r;
  r.name = "t";
  r.artifacts.push_back({"scatter.csv", "re,im\n1,0\n"});
  const auto paths = write_report(dir / "out.json", r);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].filename(), "out.scatter.csv");
  EXPECT_EQ(read_file(paths[0]), "re,im\n1,0\n");
  EXPECT_EQ(json::parse(read_file(dir / "out.json"))["name"], "t");
  std::filesystem::remove_all(dir);
}

TEST(Parallel, ResultsStoredByIndex) {
  const auto v = parallel_trials<std::size_t>(50, 4, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(v[i], i * i);
  EXPECT_THROW(run_indexed(10, 3,
                           [](std::size_t i) {
                             if (i == 7) throw std::runtime_error("boom");
                           }),
               std::runtime_error);
  std::atomic<int> count{0};
  run_indexed(20, 1, [&](std::size_t) { ++count; });
  EXPECT_EQ(count.load(), 20);
  EXPECT_EQ(median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
}

TEST(Nullity, MatchesDenseRank) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const auto g = erdos_renyi(300, 1.0 + static_cast<double>(s), Seed{s});
    const auto eig = eig_dense_symmetric(adjacency(g).to_dense_real());
    std::size_t zeros = 0;
    for (double x : eig) zeros += std::abs(x) < 1e-8;
    std::size_t core = 0;
    EXPECT_EQ(adjacency_nullity(g, 1e-9, &core), zeros);
    EXPECT_LE(core, g.vertex_count());
  }
}

TEST(Nullity, PathsAndCycles) {
  // P_n has nullity 1 for odd n and 0 for even n; C_n has nullity 2 when 4 | n.
  for (std::size_t n = 2; n < 12; ++n) {
    std::vector<EdgeSpec> e;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      e.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), {}});
    }
    EXPECT_EQ(adjacency_nullity(MarkedGraph::from_edges(n, e)), n % 2);
  }
  for (std::size_t n = 3; n < 13; ++n) {
    EXPECT_EQ(adjacency_nullity(testing::cycle_graph(n)), n % 4 == 0 ? 2u : 0u);
  }
}

TEST(KestenMckayExperiment, SmallRunIsConsistentAndDeterministic) {
  KestenMckayParams p;
  p.n = 600;
  p.ks_tolerance = 0.1;
  p.moment_tolerance = 0.2;
  const auto a = exp_kesten_mckay(p, Seed{5}, {1});
  const auto b = exp_kesten_mckay(p, Seed{5}, {2});
  EXPECT_EQ(a.to_json()["aggregate"], b.to_json()["aggregate"]);
  EXPECT_LE(check(a, "moment_route_gap").value, 1e-8);
  EXPECT_TRUE(a.pass());
  ASSERT_EQ(a.artifacts.size(), 1u);
  EXPECT_EQ(a.artifacts[0].name, "esd.svg");
}

TEST(GwKernelExperiment, SmallRun) {
  GwKernelParams p;
  p.n = 1000;
  p.trials = 3;
  p.tolerance = 0.03;
  const auto r = exp_gw_kernel(p, Seed{2}, {});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.trials.size(), 3u);
}

TEST(FriedmanExperiment, SmallRun) {
  FriedmanParams p;
  p.n = 300;
  p.trials = 3;
  p.eps = 0.5;
  const auto r = exp_friedman(p, Seed{3}, {});
  EXPECT_EQ(r.trials.size(), 3u);
  EXPECT_LE(check(r, "nb_route_gap").value, 1e-6);
  EXPECT_FALSE(check(r, "nb_route_gap").gating);
  for (const auto& t : r.trials) {
    // The deflated radius is the larger of mu_2 and |mu_min|.
    EXPECT_DOUBLE_EQ(t["lambda2"].get<double>(),
                     std::max(t["second_eigenvalue"].get<double>(), -t["lambda_min"].get<double>()));
  }
}

TEST(ErEdgesExperiment, SmallRunEmitsScatter) {
  ErEdgesParams p;
  p.n = 400;
  p.trials = 2;
  p.scatter_n = 150;
  p.pass_fraction = 0.0;
  const auto r = exp_er_edges(p, Seed{4}, {});
  ASSERT_EQ(r.artifacts.size(), 1u);
  EXPECT_EQ(r.artifacts[0].content.substr(0, 6), "re,im\n");
  EXPECT_FALSE(check(r, "adjacency_top_vs_sqrt_max_degree").gating);
}

TEST(StrongConvergenceExperiment, LowerBoundsNeverViolated) {
  StrongConvergenceParams p;
  p.n_list = {100, 400};
  p.trials = 2;
  p.lower_bound_power = 6;
  const auto r = exp_strong_convergence(p, Seed{6}, {});
  EXPECT_LE(check(r, "rigorous_lower_bound_violation").value, 1e-9);
  EXPECT_EQ(r.trials.size(), 2u);
  EXPECT_EQ(r.trials[0]["by_n"].size(), 2u);
}

TEST(StrongConvergenceExperiment, SingleGeneratorHasNoGap) {
  StrongConvergenceParams p;
  p.element = parse_element("cycle", 1);
  p.n_list = {200, 800};
  p.trials = 2;
  p.lower_bound_power = 6;
  p.gap_tolerance = 0.05;
  const auto r = exp_strong_convergence(p, Seed{6}, {});
  EXPECT_LE(check(r, "rigorous_lower_bound_violation").value, 1e-9);
  EXPECT_LE(check(r, "max_gap_at_largest_n").value, 0.05);
}

TEST(AlonBoppanaExperiment, HoldsForUniformAndCycleReps) {
  for (const char* rep : {"uniform", "cycles"}) {
    AlonBoppanaParams p;
    p.rep = rep;
    p.n = 500;
    p.l_max = 5;
    const auto r = exp_alon_boppana_bound(p, Seed{7}, {});
    EXPECT_TRUE(r.pass()) << rep;
    EXPECT_LE(check(r, "bound_minus_norm_power").value, 1e-9);
  }
  AlonBoppanaParams p;
  p.element = AlgebraElement::identity(2);
  p.n = 50;
  p.l_max = 2;
  EXPECT_TRUE(exp_alon_boppana_bound(p, Seed{7}, {}).pass());
}

TEST(DistanceProfileExperiment, UniformPassesAndCyclesFail) {
  DistanceProfileParams p;
  p.n = 20000;
  p.sources = 5;
  const auto r = exp_distance_profile(p, Seed{8}, {});
  EXPECT_TRUE(r.pass());
  // Every generator shifts by one: the graph is a cycle with diameter n / 2.
  p.rep = "cycles";
  const auto c = exp_distance_profile(p, Seed{8}, {});
  EXPECT_GT(check(c, "max_far_fraction").value, 0.5);
  EXPECT_FALSE(c.pass());
}

TEST(CoverSpectrumExperiment, BasesAndOldSpectrum) {
  for (const char* base : {"theta3", "fig3", "bouquet2"}) {
    CoverSpectrumParams p;
    p.base = base;
    p.n = 150;
    p.trials = 2;
    p.eps = 0.5;
    const auto r = exp_cover_spectrum(p, Seed{9}, {});
    EXPECT_LE(check(r, "max_old_distance").value, 1e-8) << base;
    EXPECT_LE(check(r, "max_invariance_residual").value, 1e-8) << base;
  }
  EXPECT_THROW(named_base_graph("/nonexistent/base.glim"), std::runtime_error);
}

TEST(CoverTreeNorm, RegularAndTreeBases) {
  EXPECT_NEAR(cover_tree_norm(named_base_graph("theta3"), 12), 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(cover_tree_norm(named_base_graph("bouquet2"), 12), 2.0 * std::sqrt(3.0), 1e-12);
  // A tree is its own universal cover; the path P_3 has norm sqrt(2).
  const std::vector<EdgeSpec> e = {{0, 1, {}}, {1, 2, {}}};
  double lower = 0.0;
  const double est = cover_tree_norm(MarkedGraph::from_edges(3, e), 16, &lower);
  EXPECT_LE(lower, std::sqrt(2.0) + 1e-12);
  EXPECT_NEAR(est, std::sqrt(2.0), 0.05);
}

TEST(BsConvergenceExperiment, ErdosRenyiAgainstGaltonWatson) {
  BsConvergenceParams p;
  p.ensemble = "erdos-renyi";
  p.n_list = {2000};
  p.r = 1;
  p.limit = "PoissonGW";
  p.gw_samples = 20000;
  p.tv_tolerance = 0.08;
  const auto r = exp_bs_convergence(p, Seed{10}, {});
  EXPECT_TRUE(r.pass());
}

TEST(BsConvergenceExperiment, SchreierFixedPoints) {
  BsConvergenceParams p;
  p.ensemble = "schreier";
  p.n_list = {3000};
  p.limit = "character-triviality";
  p.seeds = 2;
  p.fixed_point_tolerance = 0.02;
  const auto r = exp_bs_convergence(p, Seed{11}, {});
  EXPECT_TRUE(r.pass());
  EXPECT_FALSE(check(r, "median_tv_to_tree").gating);
}

TEST(BsConvergenceExperiment, UnknownLimitRejected) {
  BsConvergenceParams p;
  p.limit = "bogus";
  EXPECT_THROW(exp_bs_convergence(p, Seed{1}, {}), std::invalid_argument);
}

TEST(Registry, PresetsAndOverrides) {
  EXPECT_EQ(experiment_presets().size(), 9u);
  for (const auto& preset : experiment_presets()) {
    EXPECT_EQ(preset.defaults["seed"], 1) << preset.name;
    EXPECT_FALSE(preset.summary.empty());
  }
  EXPECT_THROW(find_preset("nope"), std::invalid_argument);
  EXPECT_THROW(run_experiment("cover-spectrum", {{"bogus", 1}}), std::invalid_argument);
  EXPECT_THROW(run_experiment("cover-spectrum", {{"n", "ten"}}), std::invalid_argument);
  const json overrides = {{"n", 100}, {"trials", 2}, {"seed", 3}};
  const auto a = run_experiment("cover-spectrum", overrides, {1});
  const auto b = run_experiment("cover-spectrum", overrides, {1});
  EXPECT_EQ(a.seed, 3u);
  EXPECT_EQ(a.parameters["n"], 100);
  EXPECT_EQ(a.to_json()["trials"], b.to_json()["trials"]);
}

TEST(Registry, ParseElement) {
  EXPECT_LE(AlgebraElement::distance(parse_element("adjacency", 2), AlgebraElement::adjacency(2)),
            0.0);
  EXPECT_LE(AlgebraElement::distance(parse_element("identity", 3), AlgebraElement::identity(3)),
            0.0);
  const auto j = to_json(AlgebraElement::adjacency(2));
  EXPECT_LE(AlgebraElement::distance(parse_element(j, 2), AlgebraElement::adjacency(2)), 0.0);
  EXPECT_THROW(parse_element("nonsense", 2), std::invalid_argument);
}

}  // namespace
}  // namespace glim
