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

#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "glim/generators/ensembles.hpp"
#include "glim/graph/ball.hpp"
#include "glim/graph/canonical.hpp"
#include "glim/graph/graph_io.hpp"
#include "glim/graph/marked_graph.hpp"
#include "glim/graph/neighborhood.hpp"
#include "support/test_support.hpp"

namespace glim {
namespace {

using testing::TestRng;

TEST(BuildGraph, SingleEdge) {
  const std::vector<EdgeSpec> e = {{0, 1, {}}};
  const auto g = build_graph(2, e);
  EXPECT_EQ(g.half_edge_count(), 2u);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 1u);
  EXPECT_FALSE(g.has_marks());
}

TEST(BuildGraph, LoopHasDegreeTwo) {
  const std::vector<EdgeSpec> e = {{0, 0, {}}};
  const auto g = build_graph(1, e);
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(g.half_edge_count(), 2u);
}

TEST(BuildGraph, TwoComponentDegrees) {
  const auto g = testing::two_component_graph();
  EXPECT_EQ(g.degrees(), (std::vector<std::size_t>{3, 2, 2, 3, 1, 1}));
}

TEST(BuildGraph, OutOfRangeVertexThrows) {
  const std::vector<EdgeSpec> e = {{0, 2, {}}};
  EXPECT_THROW(build_graph(2, e), std::out_of_range);
}

TEST(BuildGraph, MarksAreHermitian) {
  const std::vector<EdgeSpec> e = {{0, 1, Mark{0.5, 2.0}}, {1, 2, {}}};
  const auto g = build_graph(3, e);
  ASSERT_TRUE(g.has_marks());
  EXPECT_EQ(g.mark(0), Mark(0.5, 2.0));
  EXPECT_EQ(g.mark(1), Mark(0.5, -2.0));
  EXPECT_EQ(g.mark(2), Mark(1.0, 0.0));
  EXPECT_TRUE(g.has_hermitian_marks());
}

TEST(GraphProperties, InvolutionAndHandshake) {
  TestRng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + testing::uniform(rng, 15);
    const auto g = testing::random_multigraph(n, testing::uniform(rng, 3 * n + 1), rng, false);
    std::size_t total = 0;
    for (VertexId v = 0; v < n; ++v) {
      total += g.degree(v);
      for (HalfEdgeId e : g.out_half_edges(v)) EXPECT_EQ(g.source(e), v);
    }
    EXPECT_EQ(total, g.half_edge_count());
    for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) {
      EXPECT_EQ(MarkedGraph::partner(MarkedGraph::partner(e)), e);
      EXPECT_NE(MarkedGraph::partner(e), e);
      EXPECT_EQ(g.target(e), g.source(MarkedGraph::partner(e)));
    }
  }
}

TEST(Ball, RadiusZeroIsSingleVertex) {
  const auto g = testing::complete_graph(5);
  const auto b = ball(g, 3, 0);
  EXPECT_EQ(b.size(), 1u);
  EXPECT_EQ(b.graph.edge_count(), 0u);
  EXPECT_EQ(b.origin[0], 3u);
}

TEST(Ball, PendantVertexRadiusOne) {
  const auto g = testing::two_component_graph();
  const auto b = ball(g, 4, 1);
  EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(b.graph.edge_count(), 1u);
  EXPECT_EQ(b.graph.degree(RootedBall::center), 1u);
}

TEST(Ball, RegularTreeCount) {
  const auto tree = regular_tree_ball(3, 3);
  EXPECT_EQ(tree.size(), 1u + 3u + 6u + 12u);
  const auto b = ball(tree.graph, RootedBall::center, 2);
  EXPECT_EQ(b.size(), 10u);
}

TEST(Ball, InducedKeepsEdgesBetweenBoundaryVertices) {
  // In a triangle the two neighbours of the root are adjacent.
  const auto g = testing::cycle_graph(3);
  const auto b = ball(g, 0, 1);
  EXPECT_EQ(b.size(), 3u);
  EXPECT_EQ(b.graph.edge_count(), 3u);
}

TEST(Canonical, RelabelledTriangleMatches) {
  const auto g = testing::cycle_graph(3);
  TestRng rng(5);
  const auto h = testing::relabel(g, testing::random_permutation(3, rng), rng);
  EXPECT_EQ(canonical_class(ball(g, 0, 2)), canonical_class(ball(h, 2, 2)));
}

TEST(Canonical, TwoComponentClasses) {
  const auto g = testing::two_component_graph();
  auto cls = [&](VertexId v) { return canonical_class(ball(g, v, 10)); };
  EXPECT_EQ(cls(0), cls(3));
  EXPECT_EQ(cls(1), cls(2));
  EXPECT_EQ(cls(4), cls(5));
  EXPECT_NE(cls(0), cls(1));
  EXPECT_NE(cls(0), cls(4));
  EXPECT_NE(cls(1), cls(4));
}

TEST(Canonical, PathEndAndMiddleDiffer) {
  const std::vector<EdgeSpec> e = {{0, 1, {}}, {1, 2, {}}};
  const auto g = build_graph(3, e);
  const auto end = ball(g, 0, 3);
  const auto mid = ball(g, 1, 3);
  EXPECT_FALSE(testing::brute_force_rooted_isomorphic(end, mid));
  EXPECT_NE(canonical_class(end), canonical_class(mid));
}

TEST(Canonical, MarksDistinguish) {
  const std::vector<EdgeSpec> a = {{0, 1, Mark{1.0, 0.0}}};
  const std::vector<EdgeSpec> b = {{0, 1, Mark{2.0, 0.0}}};
  EXPECT_NE(canonical_class(ball(build_graph(2, a), 0, 1)),
            canonical_class(ball(build_graph(2, b), 0, 1)));
}

TEST(Canonical, OrientationOfMarksMatters) {
  const std::vector<EdgeSpec> e = {{0, 1, Mark{0.0, 1.0}}};
  const auto g = build_graph(2, e);
  // Rooted at 0 the outgoing mark is i, at 1 it is -i.
  EXPECT_NE(canonical_class(ball(g, 0, 1)), canonical_class(ball(g, 1, 1)));
}

TEST(CanonicalProperty, InvariantUnderRelabelling) {
  TestRng rng(2024);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + testing::uniform(rng, 12);
    const std::size_t m = testing::uniform(rng, 2 * n + 2);
    const bool marked = t % 3 == 0;
    const auto g = testing::random_multigraph(n, m, rng, t % 2 == 0, true, marked);
    const auto perm = testing::random_permutation(n, rng);
    const auto h = testing::relabel(g, perm, rng);
    const auto v = static_cast<VertexId>(testing::uniform(rng, n));
    const auto r = static_cast<std::uint32_t>(testing::uniform(rng, 4));
    const auto a = canonical_class(ball(g, v, r));
    const auto b = canonical_class(ball(h, perm[v], r));
    ASSERT_TRUE(a.exact);
    EXPECT_EQ(a, b) << "trial " << t;
  }
}

TEST(CanonicalProperty, AgreesWithBruteForceOracle) {
  TestRng rng(77);
  std::size_t distinct = 0;
  std::size_t equal = 0;
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = 2 + testing::uniform(rng, 5);
    auto g = testing::random_multigraph(n, n - 1 + testing::uniform(rng, 3), rng, true);
    auto h = testing::random_multigraph(n, g.edge_count(), rng, true);
    if (t % 4 == 0) h = testing::relabel(g, testing::random_permutation(n, rng), rng);
    const auto r = static_cast<std::uint32_t>(1 + testing::uniform(rng, 3));
    const auto a = ball(g, 0, r);
    const auto b = ball(h, static_cast<VertexId>(testing::uniform(rng, n)), r);
    const bool iso = testing::brute_force_rooted_isomorphic(a, b);
    EXPECT_EQ(iso, canonical_class(a) == canonical_class(b)) << "trial " << t;
    (iso ? equal : distinct) += 1;
  }
  EXPECT_GT(equal, 50u);
  EXPECT_GT(distinct, 50u);
}

TEST(Canonical, LargeBallFallsBackToHash) {
  const auto tree = regular_tree_ball(3, 6);
  const auto cls = canonical_class(tree);
  EXPECT_FALSE(cls.exact);
  EXPECT_EQ(cls, canonical_class(regular_tree_ball(3, 6)));
}

TEST(Neighborhood, TwoComponentUniformOverThreeClasses) {
  const auto d = neighborhood_distribution(testing::two_component_graph(), 10);
  ASSERT_EQ(d.entries.size(), 3u);
  for (const auto& e : d.entries) EXPECT_NEAR(e.weight, 1.0 / 3.0, 1e-15);
}

TEST(Neighborhood, CycleHasOneClass) {
  const auto d = neighborhood_distribution(testing::cycle_graph(5), 1);
  ASSERT_EQ(d.entries.size(), 1u);
  EXPECT_DOUBLE_EQ(d.entries[0].weight, 1.0);
}

TEST(Neighborhood, HighGirthRegularGraphMatchesTree) {
  // The Petersen graph has girth 5, so radius-1 balls are stars.
  const std::vector<EdgeSpec> e = {{0, 1, {}}, {1, 2, {}}, {2, 3, {}}, {3, 4, {}}, {4, 0, {}},
                                   {0, 5, {}}, {1, 6, {}}, {2, 7, {}}, {3, 8, {}}, {4, 9, {}},
                                   {5, 7, {}}, {7, 9, {}}, {9, 6, {}}, {6, 8, {}}, {8, 5, {}}};
  const auto g = build_graph(10, e);
  const auto d = neighborhood_distribution(g, 1);
  ASSERT_EQ(d.entries.size(), 1u);
  const auto tree = regular_tree_ball(3, 2);
  EXPECT_EQ(d.entries[0].cls, canonical_class(ball(tree.graph, RootedBall::center, 1)));
}

TEST(NeighborhoodProperty, WeightsAreMultiplesOfOneOverN) {
  TestRng rng(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + testing::uniform(rng, 20);
    const auto g = testing::random_multigraph(n, testing::uniform(rng, 2 * n), rng, false);
    const auto d = neighborhood_distribution(g, static_cast<std::uint32_t>(t % 3));
    double total = 0.0;
    std::size_t count = 0;
    for (const auto& e : d.entries) {
      total += e.weight;
      count += e.count;
      EXPECT_NEAR(e.weight * static_cast<double>(n), static_cast<double>(e.count), 1e-9);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_EQ(count, n);
  }
}

TEST(Neighborhood, TotalVariation) {
  const auto a = neighborhood_distribution(testing::cycle_graph(6), 1);
  const auto b = neighborhood_distribution(testing::two_component_graph(), 1);
  EXPECT_DOUBLE_EQ(total_variation(a, a), 0.0);
  EXPECT_NEAR(total_variation(a, b), 1.0, 1e-15);
  EXPECT_NEAR(total_variation(a, b), total_variation(b, a), 1e-15);
}

TEST(Unimodularity, ConstantGivesAverageDegree) {
  const auto g = testing::two_component_graph();
  const auto gap = unimodularity_gap(
      g, [](const EdgeRootedBall&, const RootedBallClass&) { return 1.0; }, 1);
  EXPECT_NEAR(gap.lhs, 12.0 / 6.0, 1e-15);
  EXPECT_NEAR(gap.rhs, 12.0 / 6.0, 1e-15);
}

TEST(Unimodularity, HeadDegreeMatchesHandSum) {
  const auto g = testing::two_component_graph();
  const auto f = [](const EdgeRootedBall& b, const RootedBallClass&) {
    return static_cast<double>(b.graph.degree(b.graph.target(b.root)));
  };
  const auto gap = unimodularity_gap(g, f, 2);
  double direct = 0.0;
  for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) {
    direct += static_cast<double>(g.degree(g.target(e)));
  }
  direct /= 6.0;
  EXPECT_NEAR(gap.lhs, direct, 1e-12);
  EXPECT_NEAR(gap.rhs, direct, 1e-12);
  EXPECT_LE(gap.relative_gap(), 1e-12);
}

TEST(Unimodularity, RootMarkOnMarkedGraph) {
  TestRng rng(8);
  const auto g = testing::random_multigraph(9, 14, rng, true, true, true);
  const auto f = [](const EdgeRootedBall& b, const RootedBallClass&) {
    const Mark m = b.graph.mark(b.root);
    return m.real() + 2.0 * m.imag() + 3.0;
  };
  const auto gap = unimodularity_gap(g, f, 1);
  double direct = 0.0;
  for (HalfEdgeId e = 0; e < g.half_edge_count(); ++e) {
    direct += g.mark(e).real() + 2.0 * g.mark(e).imag() + 3.0;
  }
  EXPECT_NEAR(gap.lhs, direct / 9.0, 1e-12);
  EXPECT_LE(gap.relative_gap(), 1e-12);
}

TEST(Distances, SingleVertex) {
  const auto g = build_graph(1, std::vector<EdgeSpec>{});
  EXPECT_EQ(bfs_distances(g, 0), std::vector<std::uint32_t>{0});
}

TEST(Distances, OtherComponentUnreachable) {
  const auto d = bfs_distances(testing::two_component_graph(), 0);
  EXPECT_EQ(d[4], kUnreachable);
  EXPECT_EQ(d[5], kUnreachable);
  EXPECT_EQ(d[3], 1u);
}

TEST(Distances, SixCycle) {
  auto d = bfs_distances(testing::cycle_graph(6), 2);
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d, (std::vector<std::uint32_t>{0, 1, 1, 2, 2, 3}));
}

TEST(Components, CountAndConnectivity) {
  std::size_t count = 0;
  connected_components(testing::two_component_graph(), &count);
  EXPECT_EQ(count, 2u);
  EXPECT_FALSE(is_connected(testing::two_component_graph()));
  EXPECT_TRUE(is_connected(testing::cycle_graph(7)));
}

TEST(GraphIo, RoundTripIsByteIdentical) {
  TestRng rng(19);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + testing::uniform(rng, 10);
    const auto g =
        testing::random_multigraph(n, testing::uniform(rng, 20), rng, false, true, t % 2 == 0);
    const std::string text = to_glim_string(g);
    const auto back = from_glim_string(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(to_glim_string(back), text);
  }
}

TEST(GraphIo, CommentsAndBlankLinesIgnored) {
  const auto g = from_glim_string("# example\nglim v1 3 2\n\n0 1\n# mid\n1 2\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(GraphIo, MalformedInputsThrow) {
  for (const char* text : {"", "graph v1 2 1\n0 1\n", "glim v1 2 2\n0 1\n", "glim v1 2 1\n0 5\n",
                           "glim v1 2 1\n0 x\n", "glim v1 2 1\n0 1 0.5\n",
                           "glim v1 3 2\n0 1 1 0\n1 2\n", "glim v1 2 1\n0 1\n1 0\n"}) {
    EXPECT_THROW(from_glim_string(text), ParseError) << text;
  }
}

TEST(GraphIo, AtomicWriteAndLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "glim_graph_core_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "g.glim";
  save_glim(path, testing::two_component_graph());
  EXPECT_EQ(load_glim(path), testing::two_component_graph());
  EXPECT_THROW(load_glim(dir / "missing.glim"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace glim
