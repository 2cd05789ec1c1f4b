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
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sparsematch/errors.h"

namespace sparsematch {
namespace {

using Matcher = BaselineResult (*)(ByteView, ByteView);

struct Named {
  const char* name;
  Matcher fn;
};

constexpr std::array<Named, 3> kBaselines{{{"naive", &naive_find_all},
                                           {"horspool", &horspool_find_all},
                                           {"kmp", &kmp_find_all}}};

TEST(Baselines, SmallCases) {
  for (const Named& b : kBaselines) {
    SCOPED_TRACE(b.name);
    EXPECT_EQ(b.fn(as_bytes("aa"), as_bytes("aaa")).offsets, (MatchList{0, 1}));
    EXPECT_EQ(b.fn(as_bytes("ab"), as_bytes("abab")).offsets,
              (MatchList{0, 2}));
    EXPECT_EQ(b.fn(as_bytes("b"), as_bytes("abc")).offsets, (MatchList{1}));
    EXPECT_EQ(b.fn(as_bytes("aaa"), as_bytes("aaaaa")).offsets,
              (MatchList{0, 1, 2}));
    const std::string ex = "abcabdacabdbb";
    EXPECT_EQ(b.fn(as_bytes(ex), as_bytes(ex)).offsets, (MatchList{0}));
    EXPECT_TRUE(b.fn(as_bytes("abc"), as_bytes("ab")).offsets.empty());
    EXPECT_TRUE(b.fn(as_bytes("abc"), ByteView{}).offsets.empty());
  }
}

TEST(Baselines, RejectEmptyPattern) {
  for (const Named& b : kBaselines) {
    EXPECT_THROW(b.fn(ByteView{}, as_bytes("abc")), InvalidPattern) << b.name;
  }
}

TEST(Kmp, PeriodicComparisonCount) {
  const BaselineResult r = kmp_find_all(as_bytes("aaa"), as_bytes("aaaaa"));
  // One successful comparison per text byte; the border keeps the run.
  EXPECT_EQ(r.text_comparisons, 5u);
  EXPECT_LE(r.text_comparisons, 9u);
}

TEST(Naive, AtLeastOneComparisonPerAlignment) {
  const BaselineResult r = naive_find_all(as_bytes("xyz"), as_bytes("aaaaaa"));
  EXPECT_EQ(r.text_comparisons, 4u);
  EXPECT_EQ(r.shifts, 4u);
}

TEST(Baselines, FuzzAgreeWithOracle) {
  std::mt19937 gen(99);
  std::uniform_int_distribution<std::size_t> plen(1, 32);
  std::uniform_int_distribution<std::size_t> tlen(0, 1500);
  const std::array<std::size_t, 6> sigmas{1, 2, 4, 16, 64, 256};
  for (int iter = 0; iter < 900; ++iter) {
    const std::size_t sigma = sigmas[iter % sigmas.size()];
    const std::string p = testing::random_text(plen(gen), sigma, gen);
    std::string t = testing::random_text(tlen(gen), sigma, gen);
    if (t.size() >= p.size()) {
      t.replace(gen() % (t.size() - p.size() + 1), p.size(), p);
    }
    const auto expected = testing::occurrences(p, t);
    for (const Named& b : kBaselines) {
      const BaselineResult r = b.fn(as_bytes(p), as_bytes(t));
      ASSERT_EQ(r.offsets, expected) << b.name;
    }
    const BaselineResult k = kmp_find_all(as_bytes(p), as_bytes(t));
    if (!t.empty()) ASSERT_LE(k.text_comparisons, 2 * t.size() - 1);
  }
}

TEST(Horspool, ShiftAnchorsAtLastPatternByte) {
  // "ab" with text byte 'a' under the last slot shifts by 1; a byte not in
  // the pattern shifts by the full length.
  const BaselineResult r = horspool_find_all(as_bytes("ab"), as_bytes("zzzz"));
  EXPECT_EQ(r.shifts, 2u);
  EXPECT_EQ(r.total_shift, 4u);
}

}  // namespace
}  // namespace sparsematch
