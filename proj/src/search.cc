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

#include "sparsematch/search.h"

#include <numeric>
#include <utility>

#include "sparsematch/errors.h"

namespace sparsematch {
namespace {

// Lazy forward Fisher-Yates over a buffer that is the identity permutation
// on entry and is restored to it on exit, so each call costs time
// proportional to the comparisons made rather than to n.
class RandomOrderVerifier {
 public:
  explicit RandomOrderVerifier(std::size_t n) : perm_(n), swapped_with_(n) {
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  }

  bool verify(ByteView p, ByteView q, Rng& rng, SearchStats& stats) {
    const std::size_t n = perm_.size();
    std::size_t k = 0;
    bool equal = true;
    for (; k < n; ++k) {
      const std::size_t j = k + static_cast<std::size_t>(rng.below(n - k));
      std::swap(perm_[k], perm_[j]);
      swapped_with_[k] = j;
      const std::size_t pos = perm_[k];
      if (p[pos] != q[pos]) {
        equal = false;
        ++k;
        break;
      }
    }
    stats.verifier_comparisons += k;
    ++stats.verifier_calls;
    while (k > 0) {
      --k;
      std::swap(perm_[k], perm_[swapped_with_[k]]);
    }
    return equal;
  }

 private:
  std::vector<std::size_t> perm_;
  std::vector<std::size_t> swapped_with_;
};

template <typename OnStep>
SearchResult run_search(const PreprocessedPattern& pp, ByteView text,
                        const SearchConfig& cfg, OnStep&& on_step) {
  SearchResult result;
  const std::size_t n = pp.size();
  const std::size_t m = text.size();
  if (m < n) return result;

  const ByteView p = pp.bytes();
  const SparseDescriptor& sp = pp.sparse();
  const ShiftTable& shift = pp.shifts();
  const std::size_t match_shift = shift[sp.end_char];

  Rng rng(cfg.seed);
  RandomOrderVerifier verifier(n);
  SearchStats st;

  std::size_t i = 0;
  while (i + n <= m) {
    const Byte c = text[i + sp.end_pos];
    ++st.text_comparisons;
    std::size_t step;
    EventType event;
    if (c != sp.end_char) {
      event = EventType::kType1;
      step = shift[c];
      ++st.type1_events;
      st.type1_shift += step;
    } else {
      ++st.text_comparisons;
      if (text[i + sp.start_pos] != sp.start_char) {
        event = EventType::kType2;
        step = match_shift;
        ++st.type2_events;
        st.type2_shift += step;
      } else {
        event = EventType::kType3;
        step = match_shift;
        ++st.type3_events;
        st.type3_shift += step;
        const std::uint64_t before = st.verifier_comparisons;
        if (verifier.verify(p, text.subspan(i, n), rng, st)) {
          result.offsets.push_back(i);
          ++st.matches;
        }
        st.text_comparisons += st.verifier_comparisons - before;
      }
    }
    on_step(WindowStep{i, event, step});
    st.total_shift += step;
    i += step;
  }

  if (cfg.collect_stats) result.stats = st;
  return result;
}

}  // namespace

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  text_comparisons += o.text_comparisons;
  type1_events += o.type1_events;
  type2_events += o.type2_events;
  type3_events += o.type3_events;
  verifier_calls += o.verifier_calls;
  verifier_comparisons += o.verifier_comparisons;
  total_shift += o.total_shift;
  matches += o.matches;
  type1_shift += o.type1_shift;
  type2_shift += o.type2_shift;
  type3_shift += o.type3_shift;
  return *this;
}

SearchResult find_all(const PreprocessedPattern& pp, ByteView text,
                      const SearchConfig& cfg) {
  return run_search(pp, text, cfg, [](const WindowStep&) {});
}

SearchResult find_all_traced(const PreprocessedPattern& pp, ByteView text,
                             const SearchConfig& cfg,
                             std::vector<WindowStep>& trace) {
  return run_search(pp, text, cfg,
                    [&trace](const WindowStep& s) { trace.push_back(s); });
}

bool random_match(ByteView p, ByteView q, Rng& rng, SearchStats& stats) {
  if (p.size() != q.size() || p.empty()) {
    throw InvalidArguments("random_match needs two non-empty inputs of equal "
                           "length");
  }
  RandomOrderVerifier verifier(p.size());
  return verifier.verify(p, q, rng, stats);
}

}  // namespace sparsematch
