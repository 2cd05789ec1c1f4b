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

#ifndef SPARSEMATCH_ERRORS_H_
#define SPARSEMATCH_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sparsematch {

// Raised for an empty pattern.
class InvalidPattern : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised for out-of-range parameters (alphabet size, coupon rank, lengths).
class InvalidArguments : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the benchmark harness when two algorithms disagree on the
// occurrence set of one trial. Carries the trial seed that reproduces it.
class OracleMismatch : public std::runtime_error {
 public:
  OracleMismatch(const std::string& what, std::uint64_t seed)
      : std::runtime_error(what + " (reproduce with seed " +
                           std::to_string(seed) + ")"),
        seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

}  // namespace sparsematch

#endif  // SPARSEMATCH_ERRORS_H_
