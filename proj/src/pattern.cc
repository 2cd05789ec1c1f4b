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

#include "sparsematch/pattern.h"

#include <limits>
#include <utility>

#include "sparsematch/errors.h"

namespace sparsematch {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Rightmost-longest selection over candidate spans [start, end].
class LongestSpan {
 public:
  void offer(std::size_t start, std::size_t end) {
    const std::size_t len = end - start + 1;
    if (len > len_ || (len == len_ && start > start_)) {
      len_ = len;
      start_ = start;
      end_ = end;
    }
  }

  bool empty() const { return len_ == 0; }
  std::size_t start() const { return start_; }
  std::size_t end() const { return end_; }

 private:
  std::size_t len_ = 0;
  std::size_t start_ = 0;
  std::size_t end_ = 0;
};

SparseDescriptor describe(ByteView p, std::size_t start, std::size_t end) {
  return SparseDescriptor{start, end, p[start], p[end]};
}

}  // namespace

std::size_t distinct_count(ByteView bytes) {
  std::array<bool, kAlphabetSize> seen{};
  std::size_t count = 0;
  for (Byte b : bytes) {
    if (!seen[b]) {
      seen[b] = true;
      ++count;
    }
  }
  return count;
}

Pattern::Pattern(ByteView bytes)
    : bytes_(bytes.begin(), bytes.end()), delta_(distinct_count(bytes)) {
  if (bytes_.empty()) throw InvalidPattern("pattern must not be empty");
}

ShiftTable::ShiftTable(ByteView pattern, std::size_t end_pos) {
  table_.fill(end_pos + 1);
  for (std::size_t j = 0; j < end_pos; ++j) table_[pattern[j]] = end_pos - j;
}

PreprocessedPattern preprocess(Pattern pattern) {
  const ByteView p = pattern.bytes();

  // last[c]: offset of the most recent occurrence of c seen so far.
  std::array<std::size_t, kAlphabetSize> last;
  last.fill(kNone);
  std::vector<Byte> seen;
  seen.reserve(pattern.delta());

  LongestSpan best;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Byte c = p[i];
    const std::size_t prev = last[c];
    // A span [last[x], i] is a 2-sparse pattern for (x, c) iff no c lies
    // strictly inside it, i.e. last[x] >= prev. For x == c this is the
    // span between consecutive occurrences of c.
    for (Byte x : seen) {
      if (prev == kNone || last[x] >= prev) best.offer(last[x], i);
    }
    best.offer(i, i);
    if (prev == kNone) seen.push_back(c);
    last[c] = i;
  }

  SparseDescriptor sparse = describe(p, best.start(), best.end());
  ShiftTable shifts(p, sparse.end_pos);
  return PreprocessedPattern(std::move(pattern), sparse, shifts);
}

PreprocessedPattern preprocess(ByteView bytes) {
  return preprocess(Pattern(bytes));
}

PreprocessedPattern preprocess(std::string_view bytes) {
  return preprocess(Pattern(bytes));
}

PairSparse sparse_pair_brute(ByteView p, Byte u, Byte v) {
  LongestSpan best;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p[s] != u) continue;
    for (std::size_t e = s; e < p.size(); ++e) {
      if (p[e] != v) continue;
      bool clean = true;
      for (std::size_t j = s + 1; j < e; ++j) {
        if (p[j] == u || p[j] == v) {
          clean = false;
          break;
        }
      }
      if (clean) best.offer(s, e);
    }
  }
  PairSparse out{u, v, std::nullopt, std::nullopt};
  if (!best.empty()) {
    out.start = best.start();
    out.end = best.end();
  }
  return out;
}

SparseDescriptor sparse_brute(ByteView p) {
  if (p.empty()) throw InvalidPattern("pattern must not be empty");
  std::array<bool, kAlphabetSize> present{};
  for (Byte b : p) present[b] = true;

  LongestSpan best;
  for (std::size_t u = 0; u < kAlphabetSize; ++u) {
    if (!present[u]) continue;
    for (std::size_t v = 0; v < kAlphabetSize; ++v) {
      if (!present[v]) continue;
      const PairSparse pair =
          sparse_pair_brute(p, static_cast<Byte>(u), static_cast<Byte>(v));
      if (pair.present()) best.offer(*pair.start, *pair.end);
    }
  }
  return describe(p, best.start(), best.end());
}

}  // namespace sparsematch
