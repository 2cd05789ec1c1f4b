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

#ifndef SPARSEMATCH_EXPERIMENTS_H_
#define SPARSEMATCH_EXPERIMENTS_H_

// Monte-Carlo and closed-form checks of the expected-case behaviour, plus
// the CSV writers used by the command-line tool.
//
// Every trial t of a run seeded with s draws from its own Rng(s + t), so
// results do not depend on the order in which trials are evaluated.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparsematch/pattern.h"
#include "sparsematch/random.h"
#include "sparsematch/search.h"

namespace sparsematch {

// n bytes drawn independently and uniformly from {0, ..., sigma-1}.
// Throws InvalidArguments unless 1 <= sigma <= 256.
std::vector<Byte> random_string(std::size_t n, std::size_t sigma, Rng& rng);

struct SparseLenReport {
  std::size_t sigma = 0;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double mean_distinct = 0;
  double mean_sparse_len = 0;
  // sigma * ln(2 sigma / (2 sigma - mean_distinct + 1))
  double bound_value = 0;
  std::size_t min_sparse_len = 0;
  std::size_t lemma5_violations = 0;
};

// Preprocesses `trials` uniform random patterns of length n.
SparseLenReport estimate_sparse_len(std::size_t n, std::size_t sigma,
                                    std::size_t trials, std::uint64_t seed);

// sigma * ln(2 sigma / (2 sigma - delta + 1)).
double sparse_len_bound(std::size_t sigma, double delta);

// Exact expected number of uniform draws from sigma coupon types until r
// distinct types have been seen: sum_{i=0}^{r-1} sigma / (sigma - i).
// Throws InvalidArguments unless 1 <= r <= sigma.
double coupon_expectation(std::size_t sigma, std::size_t r);

struct WaitingTimeReport {
  std::size_t sigma = 0;
  std::size_t r = 0;
  double exact = 0;
  double simulated = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

WaitingTimeReport simulate_waiting_time(std::size_t sigma, std::size_t r,
                                        std::size_t trials,
                                        std::uint64_t seed);

enum class Algo { kSparse, kNaive, kHorspool, kKmp };

std::string_view algo_name(Algo a);
// Throws InvalidArguments for unknown names.
Algo parse_algo(std::string_view name);
// Comma-separated list, e.g. "sparse,kmp". Duplicates are rejected.
std::vector<Algo> parse_algo_list(std::string_view list);

struct BenchRow {
  Algo algo = Algo::kSparse;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t sigma = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  double mean_text_comparisons = 0;
  double comparisons_per_text_char = 0;
  double mean_shift = 0;
  std::uint64_t type1 = 0;
  std::uint64_t type2 = 0;
  std::uint64_t type3 = 0;
  std::uint64_t matches = 0;
  std::uint64_t wall_ns = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  // Mean |sparse(P)| over the generated patterns.
  double mean_sparse_len = 0;
};

// Runs each algorithm on `trials` random (P, T) pairs. Every trial is gated
// on the naive matcher: any disagreement throws OracleMismatch carrying the
// trial seed. Throws InvalidArguments for zero n, m, trials or bad sigma.
BenchReport bench_compare(std::size_t n, std::size_t m, std::size_t sigma,
                          std::size_t trials, std::uint64_t seed,
                          std::span<const Algo> algos);

// A find_all run together with the |sparse(P)| of the pattern it used.
struct SearchRun {
  SearchStats stats;
  std::size_t sparse_len = 0;
};

struct MeanShiftReport {
  double type1_mean = 0;
  double type2_mean = 0;
  double type3_mean = 0;
  std::uint64_t type1_events = 0;
  std::uint64_t type2_events = 0;
  std::uint64_t type3_events = 0;
  // Runs whose Type-2 or Type-3 mean shift fell below L - 1.
  std::size_t floor_violations = 0;
};

MeanShiftReport mean_shift_report(std::span<const SearchRun> runs);

// CSV output. Reals are printed with at most six fractional digits.
inline constexpr std::string_view kBenchCsvHeader =
    "algo,n,m,sigma,seed,trials,mean_text_comparisons,"
    "comparisons_per_text_char,mean_shift,type1,type2,type3,matches,wall_ns";
inline constexpr std::string_view kSparseLenCsvHeader =
    "sigma,n,trials,seed,mean_distinct,mean_sparse_len,bound_value,"
    "min_sparse_len,lemma5_violations";
inline constexpr std::string_view kCouponCsvHeader =
    "sigma,r,trials,seed,exact,simulated";

std::string format_real(double x);
void write_csv(std::ostream& out, const BenchReport& report);
void write_csv(std::ostream& out, const SparseLenReport& report);
void write_csv(std::ostream& out, const WaitingTimeReport& report);

}  // namespace sparsematch

#endif  // SPARSEMATCH_EXPERIMENTS_H_
