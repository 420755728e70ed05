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

#ifndef GLIM_GROUP_PERMUTATION_REP_HPP_
#define GLIM_GROUP_PERMUTATION_REP_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "glim/group/algebra.hpp"
#include "glim/group/word.hpp"
#include "glim/spectral/sparse_operator.hpp"

namespace glim {

using Permutation = std::vector<std::uint32_t>;

/// Action of F_d on {0..n-1}: generator g_i acts by perms[i-1].
class PermutationRep {
 public:
  PermutationRep() = default;
  /// Throws std::invalid_argument unless every entry is a bijection of
  /// {0..n-1}.
  PermutationRep(std::size_t n, std::vector<Permutation> perms);

  static PermutationRep identity(std::size_t n, int d);

  std::size_t n() const { return n_; }
  int d() const { return static_cast<int>(perms_.size()); }
  const Permutation& perm(int i) const { return perms_.at(i - 1); }
  const std::vector<Permutation>& perms() const { return perms_; }

  /// Image of x under one letter.
  std::uint32_t act(int letter, std::uint32_t x) const;
  /// rho(w)(x); the rightmost letter acts first, so rho(uv) = rho(u) rho(v).
  std::uint32_t act(const Word& w, std::uint32_t x) const;
  Permutation permutation(const Word& w) const;

  friend bool operator==(const PermutationRep&, const PermutationRep&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Permutation> perms_;
  std::vector<Permutation> inverses_;
};

/// Text format: "perm v1 <n> <d>" then d lines of n integers.
void write_perm(std::ostream& out, const PermutationRep& rep);
PermutationRep read_perm(std::istream& in);

/// n x n matrix sum_w a_w P(w) with P(w)[rho(w)(x), x] = 1.
SparseOperator evaluate_rep(const AlgebraElement& a, const PermutationRep& rep);

/// Fraction of points fixed by rho(w). Throws for the identity word.
double character_fraction(const PermutationRep& rep, const Word& w);

/// sum_i a_i (x) P_i over blocks indexed e, g_1..g_d, g_1^-1..g_d^-1. The
/// index of (i, x) is i * n + x, so constant-on-fibre vectors are
/// phi (x) 1.
SparseOperator matrix_coeff_operator(const std::vector<Eigen::MatrixXcd>& blocks,
                                     const PermutationRep& rep);

}  // namespace glim

#endif  // GLIM_GROUP_PERMUTATION_REP_HPP_
