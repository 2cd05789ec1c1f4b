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

#include "sparsematch/cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sparsematch/baselines.h"
#include "sparsematch/errors.h"
#include "sparsematch/experiments.h"
#include "sparsematch/pattern.h"
#include "sparsematch/search.h"

namespace sparsematch {
namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Byte> slurp(std::istream& in) {
  return std::vector<Byte>(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
}

std::vector<Byte> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read '" + path + "'");
  std::vector<Byte> bytes = slurp(f);
  if (f.bad()) throw InputError("error reading '" + path + "'");
  return bytes;
}

std::string escape_byte(Byte b) {
  if (b == '\\') return "\\\\";
  if (b >= 0x21 && b < 0x7f) return std::string(1, static_cast<char>(b));
  static const char* kHex = "0123456789abcdef";
  return std::string{'\\', 'x', kHex[b >> 4], kHex[b & 15]};
}

std::string escape_bytes(ByteView bytes) {
  std::string s;
  for (Byte b : bytes) s += escape_byte(b);
  return s;
}

struct PatternSource {
  std::string literal;
  std::string file;
  CLI::Option* literal_opt = nullptr;
  CLI::Option* file_opt = nullptr;

  void attach(CLI::App* cmd) {
    literal_opt = cmd->add_option("-p,--pattern", literal,
                                  "Pattern as literal bytes");
    file_opt = cmd->add_option("--pattern-file", file,
                               "Read the pattern bytes from a file");
    literal_opt->excludes(file_opt);
  }

  std::vector<Byte> load() const {
    if (literal_opt->count() > 0) {
      const ByteView b = as_bytes(literal);
      return {b.begin(), b.end()};
    }
    if (file_opt->count() > 0) return read_file(file);
    throw InvalidPattern("one of --pattern or --pattern-file is required");
  }
};

json stats_json(const SearchStats& s) {
  return json{{"text_comparisons", s.text_comparisons},
              {"type1_events", s.type1_events},
              {"type2_events", s.type2_events},
              {"type3_events", s.type3_events},
              {"verifier_calls", s.verifier_calls},
              {"verifier_comparisons", s.verifier_comparisons},
              {"total_shift", s.total_shift},
              {"matches", s.matches}};
}

struct SearchArgs {
  PatternSource pattern;
  std::string text_path = "-";
  std::string algo = "sparse";
  std::uint64_t seed = 0;
  bool json = false;
  bool count_only = false;
};

int run_search(const SearchArgs& a, std::istream& in, std::ostream& out) {
  const std::vector<Byte> p = a.pattern.load();
  const PreprocessedPattern pp = preprocess(ByteView(p));
  const std::vector<Byte> text =
      a.text_path == "-" ? slurp(in) : read_file(a.text_path);

  MatchList offsets;
  json stats;
  switch (parse_algo(a.algo)) {
    case Algo::kSparse: {
      SearchResult r = find_all(pp, text, SearchConfig{a.seed, true});
      offsets = std::move(r.offsets);
      stats = stats_json(r.stats);
      break;
    }
    case Algo::kNaive:
    case Algo::kHorspool:
    case Algo::kKmp: {
      const Algo algo = parse_algo(a.algo);
      BaselineResult r = algo == Algo::kNaive ? naive_find_all(p, text)
                         : algo == Algo::kHorspool
                             ? horspool_find_all(p, text)
                             : kmp_find_all(p, text);
      offsets = std::move(r.offsets);
      stats = json{{"text_comparisons", r.text_comparisons},
                   {"total_shift", r.total_shift},
                   {"matches", offsets.size()}};
      break;
    }
  }

  if (a.json) {
    out << json{{"algo", a.algo},
                {"seed", a.seed},
                {"count", offsets.size()},
                {"offsets", offsets},
                {"stats", stats}}
               .dump()
        << '\n';
  } else if (a.count_only) {
    out << offsets.size() << '\n';
  } else {
    for (std::size_t o : offsets) out << o << '\n';
  }
  return offsets.empty() ? kExitNoMatch : kExitMatch;
}

struct InspectArgs {
  PatternSource pattern;
  bool json = false;
};

int run_inspect(const InspectArgs& a, std::ostream& out) {
  const std::vector<Byte> p = a.pattern.load();
  const PreprocessedPattern pp = preprocess(ByteView(p));
  const SparseDescriptor& sp = pp.sparse();
  const ByteView sparse_bytes =
      pp.bytes().subspan(sp.start_pos, sp.length());

  std::array<bool, kAlphabetSize> present{};
  for (Byte b : p) present[b] = true;

  if (a.json) {
    json shifts = json::array();
    for (std::size_t c = 0; c < kAlphabetSize; ++c) {
      if (!present[c]) continue;
      const Byte b = static_cast<Byte>(c);
      shifts.push_back(json{{"byte", c},
                            {"char", escape_byte(b)},
                            {"shift", pp.shifts()[b]}});
    }
    out << json{{"n", pp.size()},
                {"delta", pp.pattern().delta()},
                {"sparse", escape_bytes(sparse_bytes)},
                {"start_pos", sp.start_pos},
                {"end_pos", sp.end_pos},
                {"start_char", sp.start_char},
                {"end_char", sp.end_char},
                {"length", sp.length()},
                {"shifts", shifts},
                {"shift_other", sp.end_pos + 1}}
               .dump()
        << '\n';
    return kExitMatch;
  }

  out << "sparse=" << escape_bytes(sparse_bytes) << " start=" << sp.start_pos
      << " end=" << sp.end_pos << " L=" << sp.length()
      << " delta=" << pp.pattern().delta() << '\n';
  out << "start_char=" << escape_byte(sp.start_char)
      << " end_char=" << escape_byte(sp.end_char) << " n=" << pp.size()
      << '\n';
  out << "shift";
  for (std::size_t c = 0; c < kAlphabetSize; ++c) {
    if (present[c]) {
      const Byte b = static_cast<Byte>(c);
      out << ' ' << escape_byte(b) << '=' << pp.shifts()[b];
    }
  }
  out << " other=" << sp.end_pos + 1 << '\n';
  return kExitMatch;
}

struct BenchArgs {
  std::size_t n = 16;
  std::size_t m = 100000;
  std::size_t sigma = 4;
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::string algos = "sparse,naive,horspool,kmp";
};

struct SparseLenArgs {
  std::size_t sigma = 16;
  std::size_t n = 256;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
};

struct CouponArgs {
  std::size_t sigma = 16;
  std::size_t r = 9;
  std::size_t trials = 100000;
  std::uint64_t seed = 0;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact byte-string matching with sparse-pattern preprocessing",
               "sparsematch"};
  app.require_subcommand(1);

  SearchArgs search;
  CLI::App* search_cmd =
      app.add_subcommand("search", "Print 0-based offsets of every occurrence");
  search.pattern.attach(search_cmd);
  search_cmd->add_option("input", search.text_path,
                         "Text file to search ('-' or omitted: stdin)");
  search_cmd->add_option("--algo", search.algo, "sparse|naive|horspool|kmp")
      ->check(CLI::IsMember({"sparse", "naive", "horspool", "kmp"}));
  search_cmd->add_option("--seed", search.seed, "Verifier seed");
  auto* json_flag = search_cmd->add_flag("--json", search.json,
                                         "Offsets and counters as JSON");
  search_cmd->add_flag("--count-only", search.count_only,
                       "Print only the number of occurrences")
      ->excludes(json_flag);

  InspectArgs inspect;
  CLI::App* inspect_cmd =
      app.add_subcommand("inspect", "Show the sparse pattern and shift table");
  inspect.pattern.attach(inspect_cmd);
  inspect_cmd->add_flag("--json", inspect.json, "Single JSON object");

  BenchArgs bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Compare algorithms on random inputs (CSV)");
  bench_cmd->add_option("--n", bench.n, "Pattern length")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--m", bench.m, "Text length")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--sigma", bench.sigma, "Alphabet size")
      ->check(CLI::Range(1, 256));
  bench_cmd->add_option("--trials", bench.trials, "Random (P, T) pairs")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithms");

  CLI::App* stats_cmd =
      app.add_subcommand("stats", "Monte-Carlo experiments (CSV)");
  stats_cmd->require_subcommand(1);

  SparseLenArgs sl;
  CLI::App* sl_cmd = stats_cmd->add_subcommand(
      "sparse-len", "Mean |sparse(P)| of random patterns vs the log bound");
  sl_cmd->add_option("--sigma", sl.sigma)->check(CLI::Range(1, 256));
  sl_cmd->add_option("--n", sl.n)->check(CLI::PositiveNumber);
  sl_cmd->add_option("--trials", sl.trials)->check(CLI::PositiveNumber);
  sl_cmd->add_option("--seed", sl.seed);

  CouponArgs cp;
  CLI::App* cp_cmd = stats_cmd->add_subcommand(
      "coupon", "Coupon-collector waiting time: exact vs simulated");
  cp_cmd->add_option("--sigma", cp.sigma)->check(CLI::Range(1, 256));
  cp_cmd->add_option("--r", cp.r)->check(CLI::PositiveNumber);
  cp_cmd->add_option("--trials", cp.trials)->check(CLI::PositiveNumber);
  cp_cmd->add_option("--seed", cp.seed);

  try {
    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitMatch;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitMatch;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (*search_cmd) return run_search(search, in, out);
    if (*inspect_cmd) return run_inspect(inspect, out);
    if (*bench_cmd) {
      const std::vector<Algo> algos = parse_algo_list(bench.algos);
      write_csv(out, bench_compare(bench.n, bench.m, bench.sigma,
                                   bench.trials, bench.seed, algos));
      return kExitMatch;
    }
    if (*sl_cmd) {
      write_csv(out, estimate_sparse_len(sl.n, sl.sigma, sl.trials, sl.seed));
      return kExitMatch;
    }
    if (*cp_cmd) {
      write_csv(out, simulate_waiting_time(cp.sigma, cp.r, cp.trials, cp.seed));
      return kExitMatch;
    }
  } catch (const std::exception& e) {
    err << "sparsematch: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace sparsematch
