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

#include "sparsematch/experiments.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "sparsematch/baselines.h"
#include "sparsematch/errors.h"

namespace sparsematch {
namespace {

void require_sigma(std::size_t sigma) {
  if (sigma < 1 || sigma > kAlphabetSize) {
    throw InvalidArguments("sigma must be in [1, 256], got " +
                           std::to_string(sigma));
  }
}

void require_rank(std::size_t sigma, std::size_t r) {
  require_sigma(sigma);
  if (r < 1 || r > sigma) {
    throw InvalidArguments("coupon rank r must be in [1, sigma], got r=" +
                           std::to_string(r) +
                           " sigma=" + std::to_string(sigma));
  }
}

// Common shape of one algorithm's outcome on one trial.
struct TrialOutcome {
  MatchList offsets;
  std::uint64_t text_comparisons = 0;
  std::uint64_t total_shift = 0;
  std::uint64_t moves = 0;
  SearchStats stats;
};

TrialOutcome run_algo(Algo algo, const PreprocessedPattern& pp, ByteView text,
                      std::uint64_t seed) {
  TrialOutcome out;
  if (algo == Algo::kSparse) {
    SearchResult r = find_all(pp, text, SearchConfig{seed, true});
    out.offsets = std::move(r.offsets);
    out.text_comparisons = r.stats.text_comparisons;
    out.total_shift = r.stats.total_shift;
    out.moves = r.stats.events();
    out.stats = r.stats;
    return out;
  }
  BaselineResult r;
  switch (algo) {
    case Algo::kNaive:
      r = naive_find_all(pp.bytes(), text);
      break;
    case Algo::kHorspool:
      r = horspool_find_all(pp.bytes(), text);
      break;
    case Algo::kKmp:
      r = kmp_find_all(pp.bytes(), text);
      break;
    case Algo::kSparse:
      break;
  }
  out.offsets = std::move(r.offsets);
  out.text_comparisons = r.text_comparisons;
  out.total_shift = r.total_shift;
  out.moves = r.shifts;
  out.stats.matches = out.offsets.size();
  return out;
}

}  // namespace

std::vector<Byte> random_string(std::size_t n, std::size_t sigma, Rng& rng) {
  require_sigma(sigma);
  std::vector<Byte> s(n);
  for (Byte& b : s) b = static_cast<Byte>(rng.below(sigma));
  return s;
}

double sparse_len_bound(std::size_t sigma, double delta) {
  const double d = static_cast<double>(sigma);
  return d * std::log(2.0 * d / (2.0 * d - delta + 1.0));
}

SparseLenReport estimate_sparse_len(std::size_t n, std::size_t sigma,
                                    std::size_t trials, std::uint64_t seed) {
  require_sigma(sigma);
  if (n < 1) throw InvalidArguments("n must be >= 1");
  if (trials < 1) throw InvalidArguments("trials must be >= 1");

  SparseLenReport rep;
  rep.sigma = sigma;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  rep.min_sparse_len = std::numeric_limits<std::size_t>::max();

  std::uint64_t sum_distinct = 0;
  std::uint64_t sum_len = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed + t);
    const PreprocessedPattern pp = preprocess(ByteView(random_string(n, sigma, rng)));
    const std::size_t len = pp.sparse_length();
    const std::size_t delta = pp.pattern().delta();
    sum_distinct += delta;
    sum_len += len;
    rep.min_sparse_len = std::min(rep.min_sparse_len, len);
    if (len < delta) ++rep.lemma5_violations;
  }
  rep.mean_distinct = static_cast<double>(sum_distinct) / trials;
  rep.mean_sparse_len = static_cast<double>(sum_len) / trials;
  rep.bound_value = sparse_len_bound(sigma, rep.mean_distinct);
  return rep;
}

double coupon_expectation(std::size_t sigma, std::size_t r) {
  require_rank(sigma, r);
  double sum = 0;
  for (std::size_t i = 0; i < r; ++i) {
    sum += static_cast<double>(sigma) / static_cast<double>(sigma - i);
  }
  return sum;
}

WaitingTimeReport simulate_waiting_time(std::size_t sigma, std::size_t r,
                                        std::size_t trials,
                                        std::uint64_t seed) {
  require_rank(sigma, r);
  if (trials < 1) throw InvalidArguments("trials must be >= 1");

  WaitingTimeReport rep{sigma, r, coupon_expectation(sigma, r), 0, trials,
                        seed};
  std::uint64_t total_draws = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed + t);
    std::array<bool, kAlphabetSize> seen{};
    std::size_t distinct = 0;
    while (distinct < r) {
      ++total_draws;
      const auto c = rng.below(sigma);
      if (!seen[c]) {
        seen[c] = true;
        ++distinct;
      }
    }
  }
  rep.simulated = static_cast<double>(total_draws) / trials;
  return rep;
}

std::string_view algo_name(Algo a) {
  switch (a) {
    case Algo::kSparse:
      return "sparse";
    case Algo::kNaive:
      return "naive";
    case Algo::kHorspool:
      return "horspool";
    case Algo::kKmp:
      return "kmp";
  }
  return "?";
}

Algo parse_algo(std::string_view name) {
  for (Algo a : {Algo::kSparse, Algo::kNaive, Algo::kHorspool, Algo::kKmp}) {
    if (algo_name(a) == name) return a;
  }
  throw InvalidArguments("unknown algorithm '" + std::string(name) +
                         "' (expected sparse, naive, horspool or kmp)");
}

std::vector<Algo> parse_algo_list(std::string_view list) {
  std::vector<Algo> algos;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const Algo a = parse_algo(list.substr(pos, comma - pos));
    if (std::find(algos.begin(), algos.end(), a) != algos.end()) {
      throw InvalidArguments("duplicate algorithm '" +
                             std::string(algo_name(a)) + "'");
    }
    algos.push_back(a);
    pos = comma + 1;
  }
  return algos;
}

BenchReport bench_compare(std::size_t n, std::size_t m, std::size_t sigma,
                          std::size_t trials, std::uint64_t seed,
                          std::span<const Algo> algos) {
  require_sigma(sigma);
  if (n < 1 || m < 1 || trials < 1) {
    throw InvalidArguments("n, m and trials must be >= 1");
  }
  if (algos.empty()) throw InvalidArguments("no algorithms selected");

  struct Acc {
    std::uint64_t comparisons = 0;
    std::uint64_t shift = 0;
    std::uint64_t moves = 0;
    SearchStats stats;
    std::uint64_t wall_ns = 0;
  };
  std::vector<Acc> acc(algos.size());
  std::uint64_t sum_sparse_len = 0;

  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + t;
    Rng rng(trial_seed);
    const std::vector<Byte> p = random_string(n, sigma, rng);
    const std::vector<Byte> text = random_string(m, sigma, rng);
    const PreprocessedPattern pp = preprocess(ByteView(p));
    sum_sparse_len += pp.sparse_length();

    const MatchList reference = naive_find_all(p, text).offsets;
    for (std::size_t a = 0; a < algos.size(); ++a) {
      const auto t0 = std::chrono::steady_clock::now();
      TrialOutcome out = run_algo(algos[a], pp, text, trial_seed);
      const auto t1 = std::chrono::steady_clock::now();
      if (out.offsets != reference) {
        throw OracleMismatch(std::string(algo_name(algos[a])) +
                                 " disagrees with the naive matcher on trial " +
                                 std::to_string(t),
                             trial_seed);
      }
      Acc& x = acc[a];
      x.comparisons += out.text_comparisons;
      x.shift += out.total_shift;
      x.moves += out.moves;
      x.stats += out.stats;
      x.wall_ns += static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
              .count());
    }
  }

  BenchReport rep;
  rep.mean_sparse_len = static_cast<double>(sum_sparse_len) / trials;
  for (std::size_t a = 0; a < algos.size(); ++a) {
    const Acc& x = acc[a];
    BenchRow row;
    row.algo = algos[a];
    row.n = n;
    row.m = m;
    row.sigma = sigma;
    row.seed = seed;
    row.trials = trials;
    row.mean_text_comparisons = static_cast<double>(x.comparisons) / trials;
    row.comparisons_per_text_char =
        row.mean_text_comparisons / static_cast<double>(m);
    row.mean_shift =
        x.moves == 0 ? 0.0 : static_cast<double>(x.shift) / x.moves;
    row.type1 = x.stats.type1_events;
    row.type2 = x.stats.type2_events;
    row.type3 = x.stats.type3_events;
    row.matches = x.stats.matches;
    row.wall_ns = x.wall_ns;
    rep.rows.push_back(row);
  }
  return rep;
}

MeanShiftReport mean_shift_report(std::span<const SearchRun> runs) {
  MeanShiftReport rep;
  std::uint64_t s1 = 0, s2 = 0, s3 = 0;
  for (const SearchRun& run : runs) {
    const SearchStats& st = run.stats;
    rep.type1_events += st.type1_events;
    rep.type2_events += st.type2_events;
    rep.type3_events += st.type3_events;
    s1 += st.type1_shift;
    s2 += st.type2_shift;
    s3 += st.type3_shift;
    const std::uint64_t floor = run.sparse_len - 1;
    if (st.type2_events > 0 && st.type2_shift < floor * st.type2_events) {
      ++rep.floor_violations;
    } else if (st.type3_events > 0 &&
               st.type3_shift < floor * st.type3_events) {
      ++rep.floor_violations;
    }
  }
  auto mean = [](std::uint64_t sum, std::uint64_t count) {
    return count == 0 ? 0.0 : static_cast<double>(sum) / count;
  };
  rep.type1_mean = mean(s1, rep.type1_events);
  rep.type2_mean = mean(s2, rep.type2_events);
  rep.type3_mean = mean(s3, rep.type3_events);
  return rep;
}

std::string format_real(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') {
    s.pop_back();
  }
  if (s == "-0.0") s = "0.0";
  return s;
}

void write_csv(std::ostream& out, const BenchReport& report) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRow& r : report.rows) {
    out << algo_name(r.algo) << ',' << r.n << ',' << r.m << ',' << r.sigma
        << ',' << r.seed << ',' << r.trials << ','
        << format_real(r.mean_text_comparisons) << ','
        << format_real(r.comparisons_per_text_char) << ','
        << format_real(r.mean_shift) << ',' << r.type1 << ',' << r.type2 << ','
        << r.type3 << ',' << r.matches << ',' << r.wall_ns << '\n';
  }
}

void write_csv(std::ostream& out, const SparseLenReport& r) {
  out << kSparseLenCsvHeader << '\n'
      << r.sigma << ',' << r.n << ',' << r.trials << ',' << r.seed << ','
      << format_real(r.mean_distinct) << ',' << format_real(r.mean_sparse_len)
      << ',' << format_real(r.bound_value) << ',' << r.min_sparse_len << ','
      << r.lemma5_violations << '\n';
}

void write_csv(std::ostream& out, const WaitingTimeReport& r) {
  out << kCouponCsvHeader << '\n'
      << r.sigma << ',' << r.r << ',' << r.trials << ',' << r.seed << ','
      << format_real(r.exact) << ',' << format_real(r.simulated) << '\n';
}

}  // namespace sparsematch
