// Copyright 2026 The Clustval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLUSTVAL_RANDOM_H_
#define CLUSTVAL_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace clustval {

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of run `index` derived from `base_seed`:
//   Mix64(base_seed ^ Mix64(index)).
constexpr std::uint64_t DeriveSeed(std::uint64_t base_seed,
                                   std::uint64_t index) {
  return Mix64(base_seed ^ Mix64(index));
}

// Seeded generator whose output is identical on every platform. The standard
// distributions are implementation-defined, so sampling is done by hand on
// top of mt19937_64 (whose output sequence is fixed by the standard).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Uniform in [0, bound). `bound` must be positive.
  std::uint64_t UniformInt(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= limit) return x % bound;
    }
  }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[UniformInt(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace clustval

#endif  // CLUSTVAL_RANDOM_H_
