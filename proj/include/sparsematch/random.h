// Copyright 2026 The sparsematch Authors
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

#ifndef SPARSEMATCH_RANDOM_H_
#define SPARSEMATCH_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace sparsematch {

// Seeded 64-bit random source with a fixed, portable output sequence.
//
// The engine is std::mt19937_64, whose output is pinned by the standard.
// Bounded draws use rejection sampling on the raw 64-bit output rather than
// std::uniform_int_distribution, whose algorithm is implementation-defined.
// Two Rng objects built from the same seed therefore produce the same
// values on every conforming toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    // Largest multiple of bound representable, minus one.
    const std::uint64_t limit =
        UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    std::uint64_t x = next();
    while (x > limit) x = next();
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Uniform permutation of 0..n-1 by forward Fisher-Yates:
// for i = 0..n-2, swap slot i with slot i + below(n - i).
// n = 0 yields an empty permutation.
std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

}  // namespace sparsematch

#endif  // SPARSEMATCH_RANDOM_H_
