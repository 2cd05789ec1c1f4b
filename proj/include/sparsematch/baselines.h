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

#ifndef SPARSEMATCH_BASELINES_H_
#define SPARSEMATCH_BASELINES_H_

// Classical reference matchers. All report overlapping occurrences and count
// byte comparisons against the text the same way find_all does.

#include <cstdint>

#include "sparsematch/pattern.h"
#include "sparsematch/search.h"

namespace sparsematch {

struct BaselineResult {
  MatchList offsets;
  std::uint64_t text_comparisons = 0;
  // Window advance summed over all moves, and the number of moves.
  std::uint64_t total_shift = 0;
  std::uint64_t shifts = 0;
};

// Every alignment, compared left to right until the first mismatch.
BaselineResult naive_find_all(ByteView pattern, ByteView text);

// Horspool: last window byte first, then the rest left to right. The shift
// is keyed on the text byte under the window's last position (offset n-1),
// not on end_pos as in find_all.
BaselineResult horspool_find_all(ByteView pattern, ByteView text);

// Knuth-Morris-Pratt with the failure function; continues through the
// failure link after a full match. Uses at most 2m-1 text comparisons.
BaselineResult kmp_find_all(ByteView pattern, ByteView text);

}  // namespace sparsematch

#endif  // SPARSEMATCH_BASELINES_H_
