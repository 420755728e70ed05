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

#ifndef GLIM_GROUP_ALGEBRA_HPP_
#define GLIM_GROUP_ALGEBRA_HPP_

#include <complex>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "glim/group/word.hpp"

namespace glim {

/// Finitely supported element of the group algebra of the free group F_d.
class AlgebraElement {
 public:
  using Scalar = std::complex<double>;
  using Map = std::unordered_map<Word, Scalar, WordHash>;

  explicit AlgebraElement(int d = 1);

  static AlgebraElement identity(int d);
  static AlgebraElement word(int d, const Word& w, Scalar c = 1.0);
  /// Sum of the free generators and their inverses.
  static AlgebraElement adjacency(int d);

  int generators() const { return d_; }
  std::size_t support_size() const { return coeffs_.size(); }
  const Map& coefficients() const { return coeffs_; }
  Scalar coeff(const Word& w) const;
  /// Adds c to the coefficient of w; zero results are erased.
  void add(const Word& w, Scalar c);
  /// Terms sorted by word.
  std::vector<std::pair<Word, Scalar>> terms() const;
  /// Longest word in the support.
  std::size_t radius() const;

  AlgebraElement adjoint() const;
  bool is_self_adjoint(double tol = 1e-12) const;

  AlgebraElement& operator+=(const AlgebraElement& b);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(Scalar s, AlgebraElement a);

  /// Max coefficient difference over the union of supports.
  static double distance(const AlgebraElement& a, const AlgebraElement& b);

 private:
  int d_;
  Map coeffs_;
};

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_adjoint(const AlgebraElement& a);
/// Coefficient of the identity.
AlgebraElement::Scalar tau(const AlgebraElement& a);
double l2_norm(const AlgebraElement& a);

/// {"d": d, "terms": [[[letters...], [re, im]], ...]}.
nlohmann::json to_json(const AlgebraElement& a);
AlgebraElement algebra_from_json(const nlohmann::json& j);

struct NormEstimate {
  /// lower_bounds[l-1] = ||a^l||_2^(1/l); each is a lower bound on the norm
  /// in the left regular representation.
  std::vector<double> lower_bounds;
  std::vector<std::size_t> support_sizes;
  /// Extrapolation from the last two even powers assuming a c/l correction
  /// to the logarithm. Not a bound.
  double extrapolated = 0.0;
  bool truncated = false;
  std::string warning;
  /// True when a was not self-adjoint and a a* was used instead.
  bool symmetrized = false;

  double best_lower_bound() const;
};

/// Powers a^1..a^L. Stops early, with a warning, once the support of the
/// next power would exceed `support_budget`.
NormEstimate operator_norm_estimate(const AlgebraElement& a, std::size_t L,
                                    std::size_t support_budget = 1'000'000);

/// Rigorous upper bound sum |a_g|.
double l1_norm(const AlgebraElement& a);

/// Non-sharp diagnostic (r+1) ||a||_2 sqrt(|supp a|), r the longest word.
double haagerup_diagnostic_bound(const AlgebraElement& a);

}  // namespace glim

#endif  // GLIM_GROUP_ALGEBRA_HPP_
