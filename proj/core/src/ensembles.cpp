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

#include "glim/generators/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace glim {
namespace {

bool is_simple(const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [u, v] : edges) {
    if (u == v) return false;
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return false;
  }
  return true;
}

}  // namespace

MarkedGraph random_regular(std::size_t n, std::size_t d, Seed seed, const RegularOptions& options) {
  if (options.model == RegularModel::kPermutation && d % 2 != 0) {
    throw std::invalid_argument("permutation model needs even d");
  }
  if (options.model == RegularModel::kPairing && (n * d) % 2 != 0) {
    throw std::invalid_argument("pairing model needs n*d even");
  }
  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    edges.clear();
    if (options.model == RegularModel::kPermutation) {
      for (std::size_t i = 0; i < d / 2; ++i) {
        const auto sigma = rng.permutation(n);
        for (std::uint32_t x = 0; x < n; ++x) edges.emplace_back(x, sigma[x]);
      }
    } else {
      std::vector<VertexId> stubs;
      stubs.reserve(n * d);
      for (std::uint32_t v = 0; v < n; ++v) {
        for (std::size_t k = 0; k < d; ++k) stubs.push_back(v);
      }
      rng.shuffle(stubs);
      for (std::size_t i = 0; i < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    if (!options.simple || is_simple(edges)) return MarkedGraph::from_half_edges(n, edges);
  }
  throw BudgetError("no simple regular graph after " + std::to_string(options.max_attempts) +
                    " attempts");
}

MarkedGraph erdos_renyi(std::size_t n, double d, Seed seed) {
  if (!(d > 0.0)) throw std::invalid_argument("erdos_renyi needs d > 0");
  const double p = std::min(1.0, d / static_cast<double>(n));
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n < 2) return MarkedGraph::from_half_edges(n, edges);
  Rng rng(seed);
  // Walk the pairs (v, w), w < v, in order, skipping geometric gaps.
  std::uint64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const std::uint64_t skip = rng.geometric(p);
    if (skip == UINT64_MAX) break;
    w += 1 + static_cast<std::int64_t>(skip);
    while (v < n && w >= static_cast<std::int64_t>(v)) {
      w -= static_cast<std::int64_t>(v);
      ++v;
    }
    if (v < n) edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
  }
  return MarkedGraph::from_half_edges(n, edges);
}

MarkedGraph zd_box_percolation(std::size_t dim, std::size_t n, double p, Seed seed,
                               const MarkSampler& marks, std::size_t max_vertices) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  const std::size_t side = 2 * n + 1;
  std::size_t count = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    if (count > max_vertices / side) throw BudgetError("percolation box exceeds vertex budget");
    count *= side;
  }
  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Mark> half_marks;
  std::vector<std::size_t> coord(dim, 0);
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t stride = 1;
    for (std::size_t k = 0; k < dim; ++k) {
      if (coord[k] + 1 < side && rng.bernoulli(p)) {
        edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(v + stride));
        if (marks) {
          const Mark m = marks(rng);
          half_marks.push_back(m);
          half_marks.push_back(std::conj(m));
        }
      }
      stride *= side;
    }
    for (std::size_t k = 0; k < dim; ++k) {
      if (++coord[k] < side) break;
      coord[k] = 0;
    }
  }
  return MarkedGraph::from_half_edges(count, edges, half_marks);
}

RootedBall galton_watson_poisson(double d, std::uint32_t depth, Seed seed,
                                 std::size_t max_vertices) {
  if (!(d > 0.0)) throw std::invalid_argument("offspring mean must be positive");
  Rng rng(seed);
  RootedBall b;
  b.radius = depth;
  b.distance = {0};
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t head = 0; head < b.distance.size(); ++head) {
    if (b.distance[head] == depth) continue;
    const std::uint64_t k = rng.poisson(d);
    if (b.distance.size() + k > max_vertices) throw BudgetError("Galton-Watson tree exceeds budget");
    for (std::uint64_t c = 0; c < k; ++c) {
      const auto child = static_cast<VertexId>(b.distance.size());
      b.distance.push_back(b.distance[head] + 1);
      edges.emplace_back(static_cast<VertexId>(head), child);
    }
  }
  const std::size_t n = b.distance.size();
  b.graph = MarkedGraph::from_half_edges(n, edges);
  b.origin.resize(n);
  for (std::size_t v = 0; v < n; ++v) b.origin[v] = static_cast<VertexId>(v);
  b.boundary.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) b.boundary[v] = b.distance[v] == depth;
  return b;
}

RootedBall regular_tree_ball(std::size_t d, std::uint32_t depth) {
  RootedBall b;
  b.radius = depth;
  b.distance = {0};
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t head = 0; head < b.distance.size(); ++head) {
    if (b.distance[head] == depth) continue;
    const std::size_t k = head == 0 ? d : d - 1;
    for (std::size_t c = 0; c < k; ++c) {
      const auto child = static_cast<VertexId>(b.distance.size());
      b.distance.push_back(b.distance[head] + 1);
      edges.emplace_back(static_cast<VertexId>(head), child);
    }
  }
  const std::size_t n = b.distance.size();
  b.graph = MarkedGraph::from_half_edges(n, edges);
  b.origin.resize(n);
  for (std::size_t v = 0; v < n; ++v) b.origin[v] = static_cast<VertexId>(v);
  b.boundary.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) b.boundary[v] = d > 0 && b.distance[v] == depth;
  return b;
}

PermutationRep uniform_rep(std::size_t n, int d, Seed seed) {
  Rng rng(seed);
  std::vector<Permutation> perms;
  perms.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) perms.push_back(rng.permutation(n));
  return PermutationRep(n, std::move(perms));
}

std::vector<Word> free_generating_set(int d) {
  std::vector<Word> s;
  for (int i = 1; i <= d; ++i) {
    s.push_back(Word{i});
    s.push_back(Word{-i});
  }
  return s;
}

MarkedGraph schreier_graph(const PermutationRep& rep, const std::vector<Word>& S) {
  std::map<Word, std::size_t> mult;
  for (const Word& s : S) ++mult[s];
  for (const auto& [s, k] : mult) {
    const auto it = mult.find(s.inverse());
    if (it == mult.end() || it->second != k) {
      throw std::invalid_argument("generating set is not symmetric at " + s.to_string());
    }
  }
  // Pair the k-th occurrence of s with the k-th occurrence of s^-1.
  std::vector<std::pair<Word, bool>> forward;  // (word, self-inverse)
  std::map<Word, std::size_t> pending;         // partners still expected
  for (const Word& s : S) {
    const Word inv = s.inverse();
    if (s == inv) {
      forward.emplace_back(s, true);
    } else if (pending[s] > 0) {
      --pending[s];
    } else {
      forward.emplace_back(s, false);
      ++pending[inv];
    }
  }
  const std::size_t n = rep.n();
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Mark> marks;
  edges.reserve(forward.size() * n);
  marks.reserve(2 * forward.size() * n);
  std::size_t pair_index = 0;
  for (const auto& [s, self_inverse] : forward) {
    const Mark m = self_inverse ? Mark{0.0, 0.0}
                                : Mark{0.0, static_cast<double>(++pair_index)};
    for (std::uint32_t x = 0; x < n; ++x) {
      edges.emplace_back(x, rep.act(s, x));
      marks.push_back(m);
      marks.push_back(std::conj(m));
    }
  }
  return MarkedGraph::from_half_edges(n, edges, marks);
}

std::vector<std::string> ensemble_names() {
  return {"regular", "regular-perm", "erdos-renyi", "percolation", "schreier"};
}

MarkedGraph sample_ensemble(const std::string& name, const EnsembleParams& params, Seed seed) {
  const auto d_int = static_cast<std::size_t>(std::llround(params.d));
  if (name == "regular" || name == "regular-perm") {
    if (params.d != static_cast<double>(d_int)) throw std::invalid_argument("d must be an integer");
    RegularOptions o;
    o.model = name == "regular" ? RegularModel::kPairing : RegularModel::kPermutation;
    o.simple = params.simple;
    return random_regular(params.n, d_int, seed, o);
  }
  if (name == "erdos-renyi") return erdos_renyi(params.n, params.d, seed);
  if (name == "percolation") return zd_box_percolation(params.dim, params.n, params.p, seed);
  if (name == "schreier") {
    if (params.d != static_cast<double>(d_int)) throw std::invalid_argument("d must be an integer");
    if (d_int % 2 != 0) throw std::invalid_argument("schreier ensemble needs even degree");
    const int gens = static_cast<int>(d_int / 2);
    return schreier_graph(uniform_rep(params.n, gens, seed), free_generating_set(gens));
  }
  throw std::invalid_argument("unknown ensemble '" + name + "'");
}

}  // namespace glim
