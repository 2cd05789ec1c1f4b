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

#include <random>
#include <string>
#include <tuple>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sparsematch/errors.h"

namespace sparsematch {
namespace {

constexpr std::string_view kExample = "abcabdacabdbb";

Byte B(char c) { return static_cast<Byte>(c); }

std::string substring(std::string_view p, const SparseDescriptor& d) {
  return std::string(p.substr(d.start_pos, d.length()));
}

TEST(DistinctCount, Examples) {
  EXPECT_EQ(distinct_count(as_bytes(kExample)), 4u);
  EXPECT_EQ(distinct_count(as_bytes("aaaa")), 1u);
  EXPECT_EQ(distinct_count(as_bytes("abcd")), 4u);
  EXPECT_EQ(distinct_count(as_bytes("")), 0u);
}

TEST(Pattern, RejectsEmpty) {
  EXPECT_THROW(Pattern(std::string_view()), InvalidPattern);
  EXPECT_THROW(preprocess(std::string_view()), InvalidPattern);
  EXPECT_THROW(sparse_brute(std::string_view()), InvalidPattern);
}

// Offsets are 0-based; the 1-based locations in the worked example are one
// larger.
TEST(SparsePairBrute, WorkedExamplePairs) {
  struct Case {
    char u, v;
    std::size_t start;
    std::string_view text;
  };
  const Case cases[] = {
      {'a', 'a', 3, "abda"}, {'a', 'b', 8, "ab"},     {'a', 'c', 0, "abc"},
      {'a', 'd', 8, "abd"},  {'b', 'a', 4, "bda"},    {'b', 'b', 4, "bdacab"},
      {'b', 'c', 4, "bdac"}, {'b', 'd', 9, "bd"},     {'c', 'a', 7, "ca"},
      {'c', 'b', 7, "cab"},  {'c', 'c', 2, "cabdac"},
  };
  for (const Case& c : cases) {
    const PairSparse ps = sparse_pair_brute(kExample, c.u, c.v);
    ASSERT_TRUE(ps.present()) << c.u << c.v;
    EXPECT_EQ(*ps.start, c.start) << c.u << c.v;
    EXPECT_EQ(kExample.substr(*ps.start, ps.length()), c.text) << c.u << c.v;
  }
}

TEST(SparsePairBrute, AbsentPair) {
  const PairSparse ps = sparse_pair_brute("ab", 'b', 'a');
  EXPECT_FALSE(ps.present());
  EXPECT_EQ(ps.length(), 0u);
  EXPECT_FALSE(sparse_pair_brute("ab", 'a', 'z').present());
}

TEST(SparsePairBrute, SingleByteCountsForEqualPair) {
  const PairSparse ps = sparse_pair_brute("xay", 'a', 'a');
  ASSERT_TRUE(ps.present());
  EXPECT_EQ(*ps.start, 1u);
  EXPECT_EQ(ps.length(), 1u);
}

// "bdacab" [4,9], "cabdac" [2,7] and "dacabd" [5,10] all have length 6.
// The pair (d, d) is the rightmost of them, so it is sparse(P).
TEST(Preprocess, WorkedExampleTieGoesRightmost) {
  for (auto [u, v, start] : {std::tuple{'b', 'b', 4u}, {'c', 'c', 2u},
                             {'d', 'd', 5u}}) {
    const PairSparse ps = sparse_pair_brute(kExample, u, v);
    ASSERT_TRUE(ps.present());
    EXPECT_EQ(ps.length(), 6u);
    EXPECT_EQ(*ps.start, start);
  }

  const PreprocessedPattern pp = preprocess(kExample);
  const SparseDescriptor& sp = pp.sparse();
  EXPECT_EQ(substring(kExample, sp), "dacabd");
  EXPECT_EQ(sp.start_pos, 5u);
  EXPECT_EQ(sp.end_pos, 10u);
  EXPECT_EQ(sp.start_char, 'd');
  EXPECT_EQ(sp.end_char, 'd');
  EXPECT_EQ(sp.length(), 6u);
  EXPECT_EQ(pp.pattern().delta(), 4u);
  EXPECT_EQ(sp, sparse_brute(kExample));
}

TEST(Preprocess, WorkedExampleShifts) {
  const PreprocessedPattern pp = preprocess(kExample);
  const ShiftTable& s = pp.shifts();
  EXPECT_EQ(s[B('a')], 2u);
  EXPECT_EQ(s[B('b')], 1u);
  EXPECT_EQ(s[B('c')], 3u);
  EXPECT_EQ(s[B('d')], 5u);  // L - 1, start_char == end_char
  EXPECT_EQ(s[B('e')], 11u);
  EXPECT_EQ(s[0], 11u);
}

// With end_pos = 9 (the "bdacab" window) the anchored rule reproduces the
// worked example's shifts for a, c and d, and gives 5 for b and 10 for
// absent bytes.
TEST(ShiftTable, AnchoredAtExampleWindowEnd) {
  const ShiftTable s(as_bytes(kExample), 9);
  EXPECT_EQ(s[B('a')], 1u);
  EXPECT_EQ(s[B('c')], 2u);
  EXPECT_EQ(s[B('d')], 4u);
  EXPECT_EQ(s[B('b')], 5u);
  EXPECT_EQ(s[B('e')], 10u);
}

TEST(Preprocess, SingleByte) {
  const PreprocessedPattern pp = preprocess("a");
  EXPECT_EQ(pp.sparse(), (SparseDescriptor{0, 0, 'a', 'a'}));
  EXPECT_EQ(pp.sparse_length(), 1u);
  for (int c = 0; c < 256; ++c) EXPECT_EQ(pp.shifts()[Byte(c)], 1u);
  EXPECT_EQ(sparse_brute("z"), (SparseDescriptor{0, 0, 'z', 'z'}));
}

TEST(Preprocess, UnaryRun) {
  const PreprocessedPattern pp = preprocess("aaaa");
  EXPECT_EQ(pp.sparse(), (SparseDescriptor{2, 3, 'a', 'a'}));
  EXPECT_EQ(pp.shifts()[B('a')], 1u);
  EXPECT_EQ(pp.shifts()[B('b')], 4u);
  EXPECT_EQ(pp.shifts()[0xff], 4u);
}

TEST(Preprocess, AbabMatchesOracle) {
  // (a,a) "aba" [0,2] and (b,b) "bab" [1,3] tie; the later start wins.
  EXPECT_EQ(preprocess("abab").sparse(), sparse_brute("abab"));
  EXPECT_EQ(preprocess("abab").sparse(), (SparseDescriptor{1, 3, 'b', 'b'}));
}

TEST(Preprocess, RawBytes) {
  const std::string p("\x00\xff\x00\x7f", 4);
  const PreprocessedPattern pp = preprocess(as_bytes(p));
  EXPECT_EQ(pp.sparse(), sparse_brute(as_bytes(p)));
  EXPECT_EQ(pp.pattern().delta(), 3u);
}

class PreprocessProperty : public ::testing::TestWithParam<std::size_t> {};

// Fast path against the definition-level enumerator, plus every invariant
// of the descriptor and the shift table.
TEST_P(PreprocessProperty, AgreesWithBruteForce) {
  const std::size_t sigma = GetParam();
  std::mt19937 gen(static_cast<unsigned>(sigma) * 7919u + 1);
  std::uniform_int_distribution<std::size_t> len(1, 64);
  for (int iter = 0; iter < 400; ++iter) {
    const std::string p = testing::random_text(len(gen), sigma, gen);
    const ByteView pb = as_bytes(p);
    const PreprocessedPattern pp = preprocess(pb);
    const SparseDescriptor& sp = pp.sparse();
    SCOPED_TRACE(::testing::PrintToString(p));

    ASSERT_EQ(sp, sparse_brute(pb));
    ASSERT_LE(sp.start_pos, sp.end_pos);
    ASSERT_LT(sp.end_pos, p.size());
    ASSERT_EQ(pb[sp.start_pos], sp.start_char);
    ASSERT_EQ(pb[sp.end_pos], sp.end_char);
    ASSERT_GE(sp.length(), pp.pattern().delta());
    ASSERT_EQ(pp.pattern().delta(), distinct_count(pb));

    for (std::size_t j = sp.start_pos + 1; j < sp.end_pos; ++j) {
      ASSERT_NE(pb[j], sp.start_char);
      ASSERT_NE(pb[j], sp.end_char);
    }

    for (int c = 0; c < 256; ++c) {
      const std::size_t s = pp.shifts()[Byte(c)];
      ASSERT_EQ(s, testing::anchored_shift(p, sp.end_pos, Byte(c)));
      ASSERT_GE(s, 1u);
      ASSERT_LE(s, sp.end_pos + 1);
    }
    const std::size_t end_shift = pp.shifts()[sp.end_char];
    if (sp.length() == 1) {
      ASSERT_EQ(end_shift, 1u);
    } else if (sp.start_char == sp.end_char) {
      ASSERT_EQ(end_shift, sp.length() - 1);
    } else {
      ASSERT_GE(end_shift, sp.length());
    }
  }
}

// Maximality and rightmostness checked pair by pair.
TEST_P(PreprocessProperty, LongestAndRightmostOverAllPairs) {
  const std::size_t sigma = GetParam();
  std::mt19937 gen(static_cast<unsigned>(sigma) + 17u);
  std::uniform_int_distribution<std::size_t> len(1, 24);
  for (int iter = 0; iter < 60; ++iter) {
    const std::string p = testing::random_text(len(gen), sigma, gen);
    const SparseDescriptor sp = preprocess(p).sparse();
    SCOPED_TRACE(::testing::PrintToString(p));
    std::size_t best_start_at_l = 0;
    for (int u = 0; u < 256; ++u) {
      for (int v = 0; v < 256; ++v) {
        if (p.find(char(u)) == std::string::npos ||
            p.find(char(v)) == std::string::npos) {
          continue;
        }
        const PairSparse ps = sparse_pair_brute(as_bytes(p), Byte(u), Byte(v));
        ASSERT_LE(ps.length(), sp.length());
        if (ps.length() == sp.length()) {
          best_start_at_l = std::max(best_start_at_l, *ps.start);
        }
      }
    }
    ASSERT_EQ(sp.start_pos, best_start_at_l);
  }
}

INSTANTIATE_TEST_SUITE_P(Alphabets, PreprocessProperty,
                         ::testing::Values(1, 2, 4, 16, 256));

}  // namespace
}  // namespace sparsematch
