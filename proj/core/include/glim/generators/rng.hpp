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

#ifndef GLIM_GENERATORS_RNG_HPP_
#define GLIM_GENERATORS_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace glim {

/// 64-bit seed with deterministic stream splitting.
struct Seed {
  std::uint64_t value = 0;

  /// Independent child seed for stream `stream`.
  Seed split(std::uint64_t stream) const;

  friend bool operator==(const Seed&, const Seed&) = default;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Mersenne twister with distribution code of our own, so draws are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(splitmix64(seed.value)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on {0, ..., n-1}; n > 0.
  std::uint64_t uniform_index(std::uint64_t n);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  bool bernoulli(double p) { return uniform01() < p; }
  std::uint64_t poisson(double mean);
  /// Failures before the first success in Bernoulli(p) trials, p in (0, 1].
  std::uint64_t geometric(double p);
  /// Uniform permutation of {0..n-1}.
  std::vector<std::uint32_t> permutation(std::size_t n);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform_index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace glim

#endif  // GLIM_GENERATORS_RNG_HPP_
