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

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "glim/generators/ensembles.hpp"
#include "glim/graph/ball.hpp"
#include "glim/graph/canonical.hpp"
#include "glim/group/algebra.hpp"
#include "glim/spectral/eigensolvers.hpp"
#include "glim/spectral/operators.hpp"

namespace glim {
namespace {

void BM_CanonicalClass(benchmark::State& state) {
  const auto g = random_regular(10000, 4, Seed{1});
  const auto r = static_cast<std::uint32_t>(state.range(0));
  VertexId v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_class(ball(g, v, r)));
    v = (v + 1) % 10000;
  }
}
BENCHMARK(BM_CanonicalClass)->Arg(1)->Arg(2)->Arg(3);

void BM_LanczosDeflated(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = adjacency(random_regular(n, 4, Seed{2}));
  const std::vector<Eigen::VectorXcd> ones = {Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(n)) /
                                              std::sqrt(static_cast<double>(n))};
  for (auto _ : state) benchmark::DoNotOptimize(eig_extreme_symmetric(a, 1, ones));
}
BENCHMARK(BM_LanczosDeflated)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_NonBacktrackingMatvec(benchmark::State& state) {
  const auto b = non_backtracking(random_regular(static_cast<std::size_t>(state.range(0)), 4, Seed{3}));
  std::vector<double> x(b.dim(), 1.0), y(b.dim());
  for (auto _ : state) {
    b.apply(std::span<const double>(x), std::span<double>(y));
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(b.nnz()));
}
BENCHMARK(BM_NonBacktrackingMatvec)->Arg(10000)->Arg(100000);

void BM_AlgebraPower(benchmark::State& state) {
  const auto a = AlgebraElement::adjacency(2);
  const auto l = state.range(0);
  for (auto _ : state) {
    AlgebraElement p = AlgebraElement::identity(2);
    for (std::int64_t i = 0; i < l; ++i) p = alg_mul(p, a);
    benchmark::DoNotOptimize(p.support_size());
  }
}
BENCHMARK(BM_AlgebraPower)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace glim

BENCHMARK_MAIN();
