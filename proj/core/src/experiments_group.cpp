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
#include <complex>
#include <limits>
#include <stdexcept>

#include "glim/experiments/experiments.hpp"
#include "glim/generators/ensembles.hpp"
#include "glim/group/permutation_rep.hpp"
#include "glim/spectral/eigensolvers.hpp"

namespace glim {
namespace {

Eigen::VectorXcd ones_direction(std::size_t n) {
  return Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(n),
                                    1.0 / std::sqrt(static_cast<double>(n)));
}

// Norm of rho(a) on the orthogonal complement of the constants.
double restricted_norm(const AlgebraElement& a, const PermutationRep& rho, std::uint64_t seed) {
  ExtremeOptions opts;
  opts.seed = seed;
  return eig_extreme_symmetric(evaluate_rep(a, rho), 1, {ones_direction(rho.n())}, opts)
      .spectral_radius();
}

bool nonnegative_real(const AlgebraElement& a) {
  for (const auto& [w, c] : a.coefficients()) {
    if (c.imag() != 0.0 || c.real() < 0.0) return false;
  }
  return true;
}

PermutationRep make_rep(const std::string& kind, std::size_t n, int gens, Seed seed) {
  if (kind == "uniform") return uniform_rep(n, gens, seed);
  if (kind == "cycles") {
    Permutation shift(n);
    for (std::size_t x = 0; x < n; ++x) shift[x] = static_cast<std::uint32_t>((x + 1) % n);
    return PermutationRep(n, std::vector<Permutation>(gens, shift));
  }
  throw std::invalid_argument("unknown rep '" + kind + "' (expected uniform or cycles)");
}

// ||a^l||_2^(1/l) (1 - |S|^l / n)^(1/2l): a lower bound on the restricted
// norm whenever |S|^l < n. Returns the best such bound over l <= powers.
double finite_n_lower_bound(const NormEstimate& est, std::size_t support, std::size_t n) {
  double best = 0.0;
  for (std::size_t l = 1; l <= est.lower_bounds.size(); ++l) {
    const double loss = std::pow(static_cast<double>(support), static_cast<double>(l)) /
                        static_cast<double>(n);
    if (loss >= 1.0) break;
    best = std::max(best, est.lower_bounds[l - 1] * std::pow(1.0 - loss, 0.5 / l));
  }
  return best;
}

}  // namespace

ExperimentReport exp_strong_convergence(const StrongConvergenceParams& p, Seed seed,
                                        const RunOptions& run) {
  const auto t0 = std::chrono::steady_clock::now();
  const AlgebraElement& a = p.element;
  if (!a.is_self_adjoint()) throw std::invalid_argument("element must be self-adjoint");
  if (p.n_list.empty() || p.trials == 0) throw std::invalid_argument("empty n_list or trials");
  const int gens = a.generators();
  ExperimentReport rep;
  rep.name = "strong-convergence";
  rep.seed = seed.value;
  rep.parameters = {{"element", to_json(a)}, {"n_list", p.n_list}, {"trials", p.trials},
                    {"gap_tolerance", p.gap_tolerance},
                    {"decrease_fraction", p.decrease_fraction},
                    {"lower_bound_power", p.lower_bound_power},
                    {"lower_bound_tolerance", p.lower_bound_tolerance}};

  const NormEstimate est = operator_norm_estimate(a, p.lower_bound_power);
  if (est.truncated) rep.notes.push_back(est.warning);
  double target = est.extrapolated;
  if (AlgebraElement::distance(a, AlgebraElement::adjacency(gens)) == 0.0) {
    target = 2.0 * std::sqrt(2.0 * gens - 1.0);
    rep.notes.push_back("target is the analytic norm 2 sqrt(2d - 1) of the free adjacency");
  } else {
    rep.notes.push_back("target is the extrapolated l2-power estimate");
  }

  const std::size_t count = p.n_list.size() * p.trials;
  const auto norms = parallel_trials<double>(count, run.jobs, [&](std::size_t t) {
    const std::size_t n = p.n_list[t / p.trials];
    const Seed s = seed.split(t % p.trials).split(n);
    return restricted_norm(a, uniform_rep(n, gens, s), s.split(1).value);
  });

  std::size_t decreasing = 0;
  double worst_last_gap = 0.0;
  double worst_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.trials; ++i) {
    nlohmann::json j = {{"seed_index", i}};
    nlohmann::json per_n = nlohmann::json::array();
    for (std::size_t k = 0; k < p.n_list.size(); ++k) {
      const double norm = norms[k * p.trials + i];
      const double floor = finite_n_lower_bound(est, a.support_size(), p.n_list[k]);
      worst_violation = std::max(worst_violation, floor - norm);
      per_n.push_back({{"n", p.n_list[k]}, {"restricted_norm", norm},
                       {"gap", std::abs(norm - target)}, {"rigorous_lower_bound", floor}});
    }
    const double first = std::abs(norms[i] - target);
    const double last = std::abs(norms[(p.n_list.size() - 1) * p.trials + i] - target);
    if (p.n_list.size() >= 2 && last < first) ++decreasing;
    worst_last_gap = std::max(worst_last_gap, last);
    j["by_n"] = per_n;
    rep.trials.push_back(j);
  }
  const double lb = est.lower_bounds.size() >= p.lower_bound_power
                        ? est.lower_bounds[p.lower_bound_power - 1]
                        : est.best_lower_bound();
  const double lb_shortfall = target > 0 ? (target - lb) / target : 0.0;
  nlohmann::json lbs = est.lower_bounds;
  rep.aggregate = {{"target", target},
                   {"extrapolated", est.extrapolated},
                   {"l2_power_lower_bounds", lbs},
                   {"max_gap_at_largest_n", worst_last_gap},
                   {"decreasing_fraction",
                    p.n_list.size() >= 2 ? static_cast<double>(decreasing) / p.trials : 1.0},
                   {"lower_bound_relative_shortfall", lb_shortfall}};
  rep.add_check("max_gap_at_largest_n", worst_last_gap, "<=", p.gap_tolerance);
  if (p.n_list.size() >= 2) {
    rep.add_check("decreasing_fraction", static_cast<double>(decreasing) / p.trials, ">=",
                  p.decrease_fraction);
  }
  rep.add_check("rigorous_lower_bound_violation", worst_violation, "<=", 1e-9);
  rep.add_check("lower_bound_relative_shortfall", lb_shortfall, "<=", p.lower_bound_tolerance);
  rep.wall_clock_s = seconds_since(t0);
  return rep;
}

ExperimentReport exp_alon_boppana_bound(const AlonBoppanaParams& p, Seed seed,
                                        const RunOptions& run) {
  const auto t0 = std::chrono::steady_clock::now();
  const AlgebraElement& a = p.element;
  if (!a.is_self_adjoint()) throw std::invalid_argument("element must be self-adjoint");
  if (p.n < 2 || p.l_max == 0) throw std::invalid_argument("need n >= 2 and l_max >= 1");
  ExperimentReport rep;
  rep.name = "alon-boppana";
  rep.seed = seed.value;
  rep.parameters = {{"element", to_json(a)}, {"rep", p.rep}, {"n", p.n}, {"l_max", p.l_max}};

  const PermutationRep rho = make_rep(p.rep, p.n, a.generators(), seed.split(0));
  const SparseOperator op = evaluate_rep(a, rho);
  const double norm = restricted_norm(a, rho, seed.split(1).value);
  std::complex<double> s = 0.0;
  for (const auto& [w, c] : a.coefficients()) s += c;
  const double support = static_cast<double>(a.support_size());

  // sum_x ||rho(a)^l e_x||^2 = Tr rho(a)^(2l) for l = 1..l_max.
  std::vector<std::vector<double>> partial(p.n, std::vector<double>(p.l_max, 0.0));
  run_indexed(p.n, run.jobs, [&](std::size_t x) {
    std::vector<std::complex<double>> u(p.n, 0.0), v(p.n);
    u[x] = 1.0;
    for (std::size_t l = 0; l < p.l_max; ++l) {
      op.apply(u, v);
      u.swap(v);
      double sq = 0.0;
      for (const auto& z : u) sq += std::norm(z);
      partial[x][l] = sq;
    }
  });

  const bool positive = nonnegative_real(a);
  if (!positive) {
    rep.notes.push_back("coefficients are not all non-negative; trace step is informational");
  }
  double worst_norm_vs_trace = -1e300, worst_trace_vs_bound = -1e300;
  double worst_norm_vs_bound = -1e300;
  AlgebraElement power = a;
  for (std::size_t l = 1; l <= p.l_max; ++l) {
    if (l > 1) power = power * a;
    double trace = 0.0;
    for (std::size_t x = 0; x < p.n; ++x) trace += partial[x][l - 1];
    const double nd = static_cast<double>(p.n);
    const double restricted_trace = (trace - std::pow(std::abs(s), 2.0 * l)) / nd;
    const double l2sq = std::pow(l2_norm(power), 2.0);
    const double bound = l2sq * (1.0 - std::pow(support, static_cast<double>(l)) / nd);
    const double lhs = std::pow(norm, 2.0 * l);
    const double implied = bound > 0 ? std::pow(bound, 0.5 / l) : 0.0;
    worst_norm_vs_trace = std::max(worst_norm_vs_trace, (restricted_trace - lhs) / std::max(lhs, 1.0));
    worst_trace_vs_bound =
        std::max(worst_trace_vs_bound, (bound - restricted_trace) / std::max(l2sq, 1.0));
    worst_norm_vs_bound = std::max(worst_norm_vs_bound, (bound - lhs) / std::max(lhs, 1.0));
    rep.trials.push_back({{"l", l},
                          {"norm_power", lhs},
                          {"restricted_trace", restricted_trace},
                          {"bound", bound},
                          {"l2_norm_squared", l2sq},
                          {"implied_norm_lower_bound", implied}});
  }
  rep.aggregate = {{"restricted_norm", norm}, {"constant_eigenvalue", s.real()}};
  rep.add_check("bound_minus_norm_power", worst_norm_vs_bound, "<=", 1e-9);
  rep.add_check("trace_minus_norm_power", worst_norm_vs_trace, "<=", 1e-9);
  rep.add_check("bound_minus_trace", worst_trace_vs_bound, "<=", 1e-9, positive);
  rep.wall_clock_s = seconds_since(t0);
  return rep;
}

}  // namespace glim
