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

#include "sparsematch/baselines.h"

#include <array>
#include <vector>

#include "sparsematch/errors.h"

namespace sparsematch {
namespace {

void require_pattern(ByteView pattern) {
  if (pattern.empty()) throw InvalidPattern("pattern must not be empty");
}

}  // namespace

BaselineResult naive_find_all(ByteView p, ByteView t) {
  require_pattern(p);
  BaselineResult r;
  const std::size_t n = p.size();
  if (t.size() < n) return r;
  for (std::size_t i = 0; i + n <= t.size(); ++i) {
    std::size_t k = 0;
    while (k < n) {
      ++r.text_comparisons;
      if (t[i + k] != p[k]) break;
      ++k;
    }
    if (k == n) r.offsets.push_back(i);
    ++r.total_shift;
    ++r.shifts;
  }
  return r;
}

BaselineResult horspool_find_all(ByteView p, ByteView t) {
  require_pattern(p);
  BaselineResult r;
  const std::size_t n = p.size();
  const std::size_t m = t.size();
  if (m < n) return r;

  std::array<std::size_t, kAlphabetSize> shift;
  shift.fill(n);
  for (std::size_t j = 0; j + 1 < n; ++j) shift[p[j]] = n - 1 - j;

  const Byte last = p[n - 1];
  std::size_t i = 0;
  while (i + n <= m) {
    const Byte c = t[i + n - 1];
    ++r.text_comparisons;
    if (c == last) {
      std::size_t k = 0;
      while (k + 1 < n) {
        ++r.text_comparisons;
        if (t[i + k] != p[k]) break;
        ++k;
      }
      if (k + 1 >= n) r.offsets.push_back(i);
    }
    r.total_shift += shift[c];
    ++r.shifts;
    i += shift[c];
  }
  return r;
}

BaselineResult kmp_find_all(ByteView p, ByteView t) {
  require_pattern(p);
  BaselineResult r;
  const std::size_t n = p.size();
  const std::size_t m = t.size();

  // border[k]: length of the longest proper border of p[0..k).
  std::vector<std::size_t> border(n + 1, 0);
  for (std::size_t k = 1, b = 0; k < n; ++k) {
    while (b > 0 && p[k] != p[b]) b = border[b];
    if (p[k] == p[b]) ++b;
    border[k + 1] = b;
  }

  std::size_t matched = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (;;) {
      ++r.text_comparisons;
      if (t[i] == p[matched]) {
        ++matched;
        break;
      }
      if (matched == 0) {
        ++r.total_shift;
        ++r.shifts;
        break;
      }
      r.total_shift += matched - border[matched];
      ++r.shifts;
      matched = border[matched];
    }
    if (matched == n) {
      r.offsets.push_back(i + 1 - n);
      r.total_shift += n - border[n];
      ++r.shifts;
      matched = border[n];
    }
  }
  return r;
}

}  // namespace sparsematch
