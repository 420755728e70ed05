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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "glim/experiments/experiments.hpp"
#include "glim/generators/ensembles.hpp"
#include "glim/graph/neighborhood.hpp"

namespace glim {
namespace {

MarkedGraph unmarked(const MarkedGraph& g) {
  if (!g.has_marks()) return g;
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.edge_count());
  for (HalfEdgeId e = 0; e < g.half_edge_count(); e += 2) {
    edges.emplace_back(g.source(e), g.target(e));
  }
  return MarkedGraph::from_half_edges(g.vertex_count(), edges, {});
}

PermutationRep cycles_rep(std::size_t n, int gens) {
  Permutation shift(n);
  for (std::size_t x = 0; x < n; ++x) shift[x] = static_cast<std::uint32_t>((x + 1) % n);
  return PermutationRep(n, std::vector<Permutation>(gens, shift));
}

PermutationRep sample_rep(const std::string& kind, std::size_t n, int gens, Seed seed) {
  if (kind == "uniform") return uniform_rep(n, gens, seed);
  if (kind == "cycles") return cycles_rep(n, gens);
  throw std::invalid_argument("unknown rep '" + kind + "' (expected uniform or cycles)");
}

NeighborhoodDistribution tree_law(std::size_t d, std::uint32_t r) {
  RootedBall b = regular_tree_ball(d, r);
  b.boundary.assign(b.size(), false);
  return NeighborhoodDistribution::from_samples(r, {canonical_class(b)});
}

NeighborhoodDistribution gw_law(double d, std::uint32_t r, std::size_t samples, Seed seed,
                                std::size_t jobs) {
  std::vector<RootedBallClass> classes(samples);
  run_indexed(samples, jobs, [&](std::size_t i) {
    RootedBall b = galton_watson_poisson(d, r, seed.split(i));
    b.boundary.assign(b.size(), false);
    classes[i] = canonical_class(b);
  });
  return NeighborhoodDistribution::from_samples(r, std::move(classes));
}

int integer_degree(double d) {
  const double rd = std::round(d);
  if (rd != d || rd < 1) throw std::invalid_argument("d must be a positive integer here");
  return static_cast<int>(rd);
}

}  // namespace

ExperimentReport exp_bs_convergence(const BsConvergenceParams& p, Seed seed,
                                    const RunOptions& run) {
  const auto t0 = std::chrono::steady_clock::now();
  if (p.limit != "Td" && p.limit != "PoissonGW" && p.limit != "character-triviality") {
    throw std::invalid_argument("unknown limit_spec '" + p.limit +
                                "' (expected Td, PoissonGW or character-triviality)");
  }
  const bool schreier = p.ensemble == "schreier";
  if (p.limit == "character-triviality" && !schreier) {
    throw std::invalid_argument("character-triviality needs the schreier ensemble");
  }
  if (p.n_list.empty() || p.seeds == 0) throw std::invalid_argument("empty n_list or seeds");
  int gens = 0;
  if (schreier) {
    const int deg = integer_degree(p.d);
    if (deg % 2) throw std::invalid_argument("schreier ensemble needs even degree");
    gens = deg / 2;
  }

  ExperimentReport rep;
  rep.name = "bs-convergence";
  rep.seed = seed.value;
  rep.parameters = {{"ensemble", p.ensemble}, {"n_list", p.n_list}, {"d", p.d},
                    {"r", p.r}, {"limit", p.limit}, {"seeds", p.seeds},
                    {"rep", p.rep}, {"gw_samples", p.gw_samples},
                    {"max_word_length", p.max_word_length},
                    {"tv_tolerance", p.tv_tolerance},
                    {"fixed_point_tolerance", p.fixed_point_tolerance}};

  // Limit law; the character-triviality limit is the tree on 2g generators.
  NeighborhoodDistribution limit;
  if (p.limit == "PoissonGW") {
    limit = gw_law(p.d, p.r, p.gw_samples, seed.split(0x6770), run.jobs);
    rep.notes.push_back("Poisson GW law estimated from " + std::to_string(p.gw_samples) +
                        " Monte Carlo balls");
  } else {
    limit = tree_law(static_cast<std::size_t>(integer_degree(p.d)), p.r);
  }
  rep.notes.push_back("balls compared without marks");

  const std::vector<Word> words =
      schreier ? reduced_words(gens, p.max_word_length) : std::vector<Word>{};
  struct Trial {
    double tv = 0.0;
    double max_fraction = 0.0;
    std::string worst_word;
    std::size_t classes = 0;
    bool exact = true;
  };
  const std::size_t count = p.n_list.size() * p.seeds;
  const auto trials = parallel_trials<Trial>(count, run.jobs, [&](std::size_t t) {
    const std::size_t n = p.n_list[t / p.seeds];
    const Seed s = seed.split(t);
    MarkedGraph g;
    Trial out;
    if (schreier) {
      const PermutationRep rho = sample_rep(p.rep, n, gens, s);
      g = schreier_graph(rho, free_generating_set(gens));
      for (const Word& w : words) {
        if (w.is_identity()) continue;
        const double f = character_fraction(rho, w);
        if (f > out.max_fraction) {
          out.max_fraction = f;
          out.worst_word = w.to_string();
        }
      }
    } else {
      EnsembleParams ep;
      ep.n = n;
      ep.d = p.d;
      g = sample_ensemble(p.ensemble, ep, s);
    }
    const auto dist = neighborhood_distribution(unmarked(g), p.r);
    out.tv = total_variation(dist, limit);
    out.classes = dist.entries.size();
    out.exact = dist.all_exact();
    return out;
  });

  std::vector<double> tv_last, frac_last;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t n = p.n_list[t / p.seeds];
    nlohmann::json j = {{"n", n}, {"seed_index", t % p.seeds}, {"tv", trials[t].tv},
                        {"classes", trials[t].classes}, {"exact", trials[t].exact}};
    if (schreier) {
      j["max_fixed_point_fraction"] = trials[t].max_fraction;
      j["worst_word"] = trials[t].worst_word;
    }
    rep.trials.push_back(j);
    if (!trials[t].exact) rep.notes.push_back("some balls fell back to the refinement hash");
    if (t / p.seeds == p.n_list.size() - 1) {
      tv_last.push_back(trials[t].tv);
      frac_last.push_back(trials[t].max_fraction);
    }
  }
  rep.aggregate["median_tv"] = median(tv_last);
  rep.aggregate["limit_classes"] = limit.entries.size();
  if (p.limit == "character-triviality") {
    rep.aggregate["median_max_fixed_point_fraction"] = median(frac_last);
    rep.add_check("median_max_fixed_point_fraction", median(frac_last), "<=",
                  p.fixed_point_tolerance);
    rep.add_check("median_tv_to_tree", median(tv_last), "<=", p.tv_tolerance, false);
  } else {
    rep.add_check("median_tv", median(tv_last), "<=", p.tv_tolerance);
    if (schreier) {
      rep.aggregate["median_max_fixed_point_fraction"] = median(frac_last);
    }
  }
  std::sort(rep.notes.begin(), rep.notes.end());
  rep.notes.erase(std::unique(rep.notes.begin(), rep.notes.end()), rep.notes.end());
  rep.wall_clock_s = seconds_since(t0);
  return rep;
}

ExperimentReport exp_distance_profile(const DistanceProfileParams& p, Seed seed,
                                      const RunOptions& run) {
  const auto t0 = std::chrono::steady_clock::now();
  if (p.generators < 1) throw std::invalid_argument("need at least one generator");
  if (p.n < 2 || p.sources == 0) throw std::invalid_argument("need n >= 2 and sources >= 1");
  ExperimentReport rep;
  rep.name = "distance-profile";
  rep.seed = seed.value;
  rep.parameters = {{"generators", p.generators}, {"rep", p.rep}, {"n", p.n},
                    {"eps", p.eps}, {"control_eps", p.control_eps},
                    {"sources", p.sources}, {"max_fraction", p.max_fraction},
                    {"control_min_fraction", p.control_min_fraction}};

  const PermutationRep rho = sample_rep(p.rep, p.n, p.generators, seed.split(0));
  const MarkedGraph g = schreier_graph(rho, free_generating_set(p.generators));
  // Growth rate of the free group with free generators and inverses.
  const double beta = std::log(2.0 * p.generators - 1.0);
  std::size_t components = 0;
  const auto comp = connected_components(g, &components);
  std::vector<std::size_t> comp_size(components, 0);
  for (auto c : comp) ++comp_size[c];
  if (components > 1) {
    rep.notes.push_back("Schreier graph has " + std::to_string(components) +
                        " components; fractions and ln n use the source's component");
  }
  if (p.generators == 1) {
    rep.notes.push_back("one generator: beta = 0 makes the radius infinite");
  }

  Rng rng(seed.split(1));
  std::vector<VertexId> sources(p.sources);
  for (auto& v : sources) v = static_cast<VertexId>(rng.uniform_index(p.n));

  struct Trial {
    double fraction = 0.0;
    double control_fraction = 0.0;
    std::uint32_t eccentricity = 0;
  };
  const auto trials = parallel_trials<Trial>(p.sources, run.jobs, [&](std::size_t i) {
    const auto dist = bfs_distances(g, sources[i]);
    const double nc = static_cast<double>(comp_size[comp[sources[i]]]);
    const double radius = (1.0 + p.eps) * std::log(nc) / beta;
    const double control_radius = (1.0 + p.control_eps) * std::log(nc) / beta;
    std::size_t far = 0, control_far = 0;
    Trial out;
    for (auto d : dist) {
      if (d == kUnreachable) continue;
      out.eccentricity = std::max(out.eccentricity, d);
      if (d >= radius) ++far;
      if (d >= control_radius) ++control_far;
    }
    out.fraction = static_cast<double>(far) / nc;
    out.control_fraction = static_cast<double>(control_far) / nc;
    return out;
  });
  double max_fraction = 0.0, min_control = 1.0;
  for (std::size_t i = 0; i < p.sources; ++i) {
    rep.trials.push_back({{"source", sources[i]},
                          {"far_fraction", trials[i].fraction},
                          {"control_far_fraction", trials[i].control_fraction},
                          {"eccentricity", trials[i].eccentricity}});
    max_fraction = std::max(max_fraction, trials[i].fraction);
    min_control = std::min(min_control, trials[i].control_fraction);
  }
  rep.aggregate = {{"beta", beta},
                   {"components", components},
                   {"radius", (1.0 + p.eps) * std::log(static_cast<double>(p.n)) / beta},
                   {"control_radius",
                    (1.0 + p.control_eps) * std::log(static_cast<double>(p.n)) / beta},
                   {"max_far_fraction", max_fraction},
                   {"min_control_far_fraction", min_control}};
  rep.add_check("max_far_fraction", max_fraction, "<=", p.max_fraction);
  rep.add_check("min_control_far_fraction", min_control, ">=", p.control_min_fraction);
  rep.wall_clock_s = seconds_since(t0);
  return rep;
}

}  // namespace glim
