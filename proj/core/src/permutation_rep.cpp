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

#include "glim/group/permutation_rep.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace glim {

PermutationRep::PermutationRep(std::size_t n, std::vector<Permutation> perms)
    : n_(n), perms_(std::move(perms)) {
  if (perms_.size() > static_cast<std::size_t>(Word::kMaxGenerators)) {
    throw std::invalid_argument("too many generators");
  }
  inverses_.reserve(perms_.size());
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    const Permutation& p = perms_[i];
    if (p.size() != n_) throw std::invalid_argument("permutation has wrong length");
    Permutation inv(n_, static_cast<std::uint32_t>(n_));
    for (std::uint32_t x = 0; x < n_; ++x) {
      if (p[x] >= n_ || inv[p[x]] != n_) {
        throw std::invalid_argument("generator " + std::to_string(i + 1) +
                                    " is not a bijection");
      }
      inv[p[x]] = x;
    }
    inverses_.push_back(std::move(inv));
  }
}

PermutationRep PermutationRep::identity(std::size_t n, int d) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0u);
  return PermutationRep(n, std::vector<Permutation>(static_cast<std::size_t>(d), id));
}

std::uint32_t PermutationRep::act(int letter, std::uint32_t x) const {
  const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
  if (i >= perms_.size()) throw std::invalid_argument("letter beyond representation degree");
  return letter > 0 ? perms_[i][x] : inverses_[i][x];
}

std::uint32_t PermutationRep::act(const Word& w, std::uint32_t x) const {
  for (std::size_t i = w.size(); i-- > 0;) x = act(w.letter(i), x);
  return x;
}

Permutation PermutationRep::permutation(const Word& w) const {
  Permutation out(n_);
  for (std::uint32_t x = 0; x < n_; ++x) out[x] = act(w, x);
  return out;
}

void write_perm(std::ostream& out, const PermutationRep& rep) {
  out << "perm v1 " << rep.n() << ' ' << rep.d() << '\n';
  for (const auto& p : rep.perms()) {
    for (std::size_t x = 0; x < p.size(); ++x) out << (x ? " " : "") << p[x];
    out << '\n';
  }
}

PermutationRep read_perm(std::istream& in) {
  std::string magic, version;
  std::size_t n = 0;
  int d = 0;
  if (!(in >> magic >> version >> n >> d) || magic != "perm" || version != "v1" || d < 0) {
    throw std::runtime_error("expected header 'perm v1 <n> <d>'");
  }
  std::vector<Permutation> perms(static_cast<std::size_t>(d), Permutation(n));
  for (auto& p : perms) {
    for (auto& x : p) {
      long long v = 0;
      if (!(in >> v) || v < 0) throw std::runtime_error("truncated or negative permutation entry");
      x = static_cast<std::uint32_t>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw std::runtime_error("trailing data after permutations");
  return PermutationRep(n, std::move(perms));
}

SparseOperator evaluate_rep(const AlgebraElement& a, const PermutationRep& rep) {
  if (a.generators() > rep.d()) throw std::invalid_argument("representation has too few generators");
  std::vector<SparseOperator::Entry> entries;
  entries.reserve(a.support_size() * rep.n());
  for (const auto& [w, c] : a.terms()) {
    for (std::uint32_t x = 0; x < rep.n(); ++x) entries.push_back({rep.act(w, x), x, c});
  }
  return SparseOperator::from_entries(rep.n(), entries);
}

double character_fraction(const PermutationRep& rep, const Word& w) {
  if (w.is_identity()) throw std::invalid_argument("character fraction needs a non-identity word");
  if (rep.n() == 0) return 0.0;
  std::size_t fixed = 0;
  for (std::uint32_t x = 0; x < rep.n(); ++x) fixed += rep.act(w, x) == x;
  return static_cast<double>(fixed) / static_cast<double>(rep.n());
}

SparseOperator matrix_coeff_operator(const std::vector<Eigen::MatrixXcd>& blocks,
                                     const PermutationRep& rep) {
  const int d = rep.d();
  if (blocks.size() != static_cast<std::size_t>(2 * d + 1)) {
    throw std::invalid_argument("need 2d+1 coefficient blocks");
  }
  const auto k = static_cast<std::size_t>(blocks.front().rows());
  for (const auto& b : blocks) {
    if (static_cast<std::size_t>(b.rows()) != k || static_cast<std::size_t>(b.cols()) != k) {
      throw std::invalid_argument("coefficient blocks must be square of equal size");
    }
  }
  const std::size_t n = rep.n();
  std::vector<SparseOperator::Entry> entries;
  for (int slot = 0; slot <= 2 * d; ++slot) {
    const int letter = slot == 0 ? 0 : (slot <= d ? slot : -(slot - d));
    const auto& a = blocks[static_cast<std::size_t>(slot)];
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const auto c = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (c == std::complex<double>{}) continue;
        for (std::uint32_t x = 0; x < n; ++x) {
          const std::uint32_t y = letter == 0 ? x : rep.act(letter, x);
          entries.push_back({i * n + y, j * n + x, c});
        }
      }
    }
  }
  return SparseOperator::from_entries(k * n, entries);
}

}  // namespace glim
