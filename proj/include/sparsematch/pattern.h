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

#ifndef SPARSEMATCH_PATTERN_H_
#define SPARSEMATCH_PATTERN_H_

// Pattern preprocessing for the sparse-pattern search.
//
// A 2-sparse pattern for an ordered byte pair (u, v) is a substring of P
// that starts with u, ends with v, and contains neither u nor v strictly
// inside. sparse(P) is the longest such substring over all pairs, ties
// going to the one that starts furthest right. A single byte counts as a
// length-1 2-sparse pattern for the pair (c, c).
//
// All offsets are 0-based. For P = "abcabdacabdbb", sparse(P) = "bdacab"
// spans offsets [4, 9] (positions 5..10 when counted from 1).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sparsematch {

using Byte = std::uint8_t;
using ByteView = std::span<const Byte>;

inline constexpr std::size_t kAlphabetSize = 256;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const Byte*>(s.data()), s.size()};
}

// Number of distinct byte values in `bytes`.
std::size_t distinct_count(ByteView bytes);

// Owned, non-empty pattern bytes together with their distinct count.
class Pattern {
 public:
  // Throws InvalidPattern when `bytes` is empty.
  explicit Pattern(ByteView bytes);
  explicit Pattern(std::string_view bytes) : Pattern(as_bytes(bytes)) {}

  ByteView bytes() const { return bytes_; }
  std::size_t size() const { return bytes_.size(); }
  std::size_t delta() const { return delta_; }
  Byte operator[](std::size_t i) const { return bytes_[i]; }

 private:
  std::vector<Byte> bytes_;
  std::size_t delta_;
};

// Location of sparse(P) inside P.
struct SparseDescriptor {
  std::size_t start_pos = 0;
  std::size_t end_pos = 0;
  Byte start_char = 0;
  Byte end_char = 0;

  std::size_t length() const { return end_pos - start_pos + 1; }

  friend bool operator==(const SparseDescriptor&,
                         const SparseDescriptor&) = default;
};

// Anchored bad-character shifts: shift[c] = end_pos - j for the largest
// j < end_pos with P[j] == c, or end_pos + 1 when no such j exists.
//
// The entry for end_char doubles as the window shift after a match at
// end_pos; it equals L - 1 when start_char == end_char (1 when L == 1)
// and is >= L otherwise.
class ShiftTable {
 public:
  ShiftTable() { table_.fill(1); }
  ShiftTable(ByteView pattern, std::size_t end_pos);

  std::size_t operator[](Byte c) const { return table_[c]; }

 private:
  std::array<std::size_t, kAlphabetSize> table_;
};

// Immutable product of preprocessing; safe to share across threads.
class PreprocessedPattern {
 public:
  PreprocessedPattern(Pattern pattern, SparseDescriptor sparse,
                      ShiftTable shifts)
      : pattern_(std::move(pattern)), sparse_(sparse), shifts_(shifts) {}

  const Pattern& pattern() const { return pattern_; }
  const SparseDescriptor& sparse() const { return sparse_; }
  const ShiftTable& shifts() const { return shifts_; }

  ByteView bytes() const { return pattern_.bytes(); }
  std::size_t size() const { return pattern_.size(); }
  std::size_t sparse_length() const { return sparse_.length(); }

 private:
  Pattern pattern_;
  SparseDescriptor sparse_;
  ShiftTable shifts_;
};

// Rightmost longest 2-sparse pattern for one ordered pair (u, v).
struct PairSparse {
  Byte u = 0;
  Byte v = 0;
  std::optional<std::size_t> start;
  std::optional<std::size_t> end;

  bool present() const { return start.has_value(); }
  std::size_t length() const { return present() ? *end - *start + 1 : 0; }

  friend bool operator==(const PairSparse&, const PairSparse&) = default;
};

// Single left-to-right scan, O(n * delta). Throws InvalidPattern on an
// empty pattern.
PreprocessedPattern preprocess(Pattern pattern);
PreprocessedPattern preprocess(ByteView bytes);
PreprocessedPattern preprocess(std::string_view bytes);

// Reference oracles. They enumerate every substring directly from the
// definition and are meant for tests and diagnostics only.
PairSparse sparse_pair_brute(ByteView pattern, Byte u, Byte v);
inline PairSparse sparse_pair_brute(std::string_view pattern, char u,
                                    char v) {
  return sparse_pair_brute(as_bytes(pattern), static_cast<Byte>(u),
                           static_cast<Byte>(v));
}

// Throws InvalidPattern on an empty pattern.
SparseDescriptor sparse_brute(ByteView pattern);
inline SparseDescriptor sparse_brute(std::string_view pattern) {
  return sparse_brute(as_bytes(pattern));
}

}  // namespace sparsematch

#endif  // SPARSEMATCH_PATTERN_H_
