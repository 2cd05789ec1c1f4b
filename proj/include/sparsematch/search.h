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

#ifndef SPARSEMATCH_SEARCH_H_
#define SPARSEMATCH_SEARCH_H_

// Sliding-window search driven by the two ends of sparse(P).
//
// At window offset i the text byte under end_pos is inspected first.
//   Type-1: it differs from end_char; shift by shift[text byte].
//   Type-2: it matches but the byte under start_pos differs from
//           start_char; shift by shift[end_char].
//   Type-3: both match; the whole window is verified in a uniformly random
//           order (see random_match), the offset is reported on success, and the
//           window shifts by shift[end_char].

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sparsematch/pattern.h"
#include "sparsematch/random.h"

namespace sparsematch {

struct SearchConfig {
  std::uint64_t seed = 0;
  bool collect_stats = true;
};

// Counters follow the cost model "byte comparisons that touch the text".
struct SearchStats {
  std::uint64_t text_comparisons = 0;
  std::uint64_t type1_events = 0;
  std::uint64_t type2_events = 0;
  std::uint64_t type3_events = 0;
  std::uint64_t verifier_calls = 0;
  std::uint64_t verifier_comparisons = 0;
  std::uint64_t total_shift = 0;
  std::uint64_t matches = 0;
  // Window advance summed per event type.
  std::uint64_t type1_shift = 0;
  std::uint64_t type2_shift = 0;
  std::uint64_t type3_shift = 0;

  std::uint64_t events() const {
    return type1_events + type2_events + type3_events;
  }

  SearchStats& operator+=(const SearchStats& o);
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

using MatchList = std::vector<std::size_t>;

struct SearchResult {
  MatchList offsets;
  SearchStats stats;
};

enum class EventType : std::uint8_t { kType1 = 1, kType2 = 2, kType3 = 3 };

// One loop iteration of find_all: the window offset inspected, the event it
// produced and the shift applied afterwards.
struct WindowStep {
  std::size_t offset;
  EventType event;
  std::size_t shift;
};

SearchResult find_all(const PreprocessedPattern& pp, ByteView text,
                      const SearchConfig& cfg = {});

// Same as find_all, also appending every window step to `trace`.
SearchResult find_all_traced(const PreprocessedPattern& pp, ByteView text,
                             const SearchConfig& cfg,
                             std::vector<WindowStep>& trace);

// Compares p and q position by position in the order of a freshly drawn
// uniform permutation, stopping at the first mismatch. Adds the number of
// comparisons made to stats.verifier_comparisons and bumps
// stats.verifier_calls. Consumes `rng` exactly as the prefix of
// random_permutation(n, rng) that it visits.
//
// Throws InvalidArguments unless p.size() == q.size() >= 1.
bool random_match(ByteView p, ByteView q, Rng& rng, SearchStats& stats);

}  // namespace sparsematch

#endif  // SPARSEMATCH_SEARCH_H_
