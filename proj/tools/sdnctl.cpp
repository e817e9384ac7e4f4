// sdnctl: command-line front end for the codec, sorting, ranking, tree
// isomorphism and benchmark suites.
//
// Exit codes: 0 success (or isomorphic), 1 not isomorphic, 2 any error.

#include "sdn/codec.hpp"
#include "sdn/container.hpp"
#include "sdn/errors.hpp"
#include "sdn/memory.hpp"
#include "sdn/natural.hpp"
#include "sdn/rank.hpp"
#include "sdn/sort.hpp"
#include "sdn/tree.hpp"
#include "sdn/tree_iso.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sdn;

constexpr int kExitError = 2;

/// An error already formatted for the user.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot open " + path);
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Parses whitespace-separated decimal integers of any size.
std::vector<Natural> parse_integers(const std::string& text, const std::string& source) {
  std::vector<Natural> values;
  std::size_t line = 1;
  std::size_t line_start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      line_start = ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' && text[i] != '\n') {
      ++i;
    }
    const std::string token = text.substr(start, i - start);
    const auto bad = std::find_if(token.begin(), token.end(), [](char d) { return d < '0' || d > '9'; });
    if (bad != token.end()) {
      const std::size_t column = start - line_start + static_cast<std::size_t>(bad - token.begin()) + 1;
      throw UsageError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                       ": malformed integer '" + token + "'");
    }
    values.push_back(Natural::from_decimal(token));
  }
  return values;
}

std::vector<std::uint64_t> codeword_positions(const SdnSequence& s) {
  std::vector<std::uint64_t> p;
  p.reserve(s.count());
  for (const Codeword& cw : s) {
    p.push_back(cw.position);
  }
  return p;
}

std::vector<std::uint64_t> parse_queries(const std::string& path, const std::vector<std::uint64_t>& inline_queries,
                                         std::uint64_t k) {
  std::vector<std::uint64_t> q = inline_queries;
  if (!path.empty()) {
    for (const Natural& x : parse_integers(read_text(path), path)) {
      q.push_back(x.fits_u64() ? x.to_u64() : ~std::uint64_t{0});
    }
  }
  if (path.empty() && inline_queries.empty()) {
    q.resize(k);
    std::iota(q.begin(), q.end(), 0);
  }
  for (std::uint64_t i : q) {
    if (i >= k) {
      throw UsageError("query index " + std::to_string(i) + " is not below k = " + std::to_string(k));
    }
  }
  return q;
}

// ---------------------------------------------------------------- bench

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

/// Values of uniform width in [0, bit_width(N) + 1] filling N bits.
SdnSequence bench_sequence(Rng& rng, std::uint64_t n_bits) {
  std::vector<std::uint64_t> v;
  std::uint64_t bits = 0;
  const auto max_width = static_cast<unsigned>(std::bit_width(n_bits)) + 1;
  while (true) {
    const auto w = static_cast<unsigned>(uniform(rng, 0, max_width));
    const std::uint64_t x = w == 0 ? 0 : (std::uint64_t{1} << (w - 1)) | (rng() & low_mask(w - 1));
    if (bits + encoded_length(x) > n_bits) {
      break;
    }
    bits += encoded_length(x);
    v.push_back(x);
  }
  v.resize(v.size() + (n_bits - bits), 0);
  return SdnSequence::from_values(v);
}

/// Random recursive tree and a relabelled, child-shuffled copy.
std::pair<RootedTree, RootedTree> bench_trees(Rng& rng, std::uint64_t n) {
  std::vector<std::uint64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> a, b;
  for (std::uint64_t i = 1; i < n; ++i) {
    const std::uint64_t p = uniform(rng, 0, i - 1);
    a.emplace_back(p, i);
    b.emplace_back(perm[p], perm[i]);
  }
  std::shuffle(b.begin(), b.end(), rng);
  return {bp_from_tree(Tree(n, a), 0), bp_from_tree(Tree(n, b), perm[0])};
}

struct Row {
  std::string operation;
  std::uint64_t size;
  std::uint64_t k;
  std::uint64_t wall_ns;
  std::int64_t peak_aux_bits;
  std::string result;
};

template <class Fn>
Row measure(int runs, Fn&& fn) {
  std::vector<std::uint64_t> times;
  Row row{};
  for (int r = 0; r < runs; ++r) {
    memory::PeakScope scope;
    const auto t0 = std::chrono::steady_clock::now();
    row.result = fn(row);
    const auto t1 = std::chrono::steady_clock::now();
    times.push_back(static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    row.peak_aux_bits = std::max(row.peak_aux_bits, scope.peak_bits());
  }
  std::sort(times.begin(), times.end());
  row.wall_ns = times[times.size() / 2];
  return row;
}

int cmd_bench(const std::string& suite, std::vector<std::uint64_t> sizes, std::uint64_t seed, int runs) {
  if (suite != "sort" && suite != "rank" && suite != "iso") {
    throw UsageError("unknown suite '" + suite + "' (expected sort, rank or iso)");
  }
  if (sizes.empty()) {
    for (unsigned e = 16; e <= 22; ++e) {
      sizes.push_back(std::uint64_t{1} << e);
    }
  }
  if (runs < 1) {
    throw UsageError("--runs must be at least 1");
  }
  Rng rng(seed);
  std::vector<Row> rows;
  for (std::uint64_t size : sizes) {
    if (suite == "sort") {
      const SdnSequence s = bench_sequence(rng, size);
      SdnSorter sorter;
      Row row = measure(runs, [&](Row&) {
        const SdnSequence out = sorter.sort(s);
        return "sorted";
      });
      row.operation = "sort";
      row.k = s.count();
      rows.push_back(row);
    } else if (suite == "rank") {
      const SdnSequence s = bench_sequence(rng, size);
      SdnSorter sorter;
      Row row = measure(runs, [&](Row&) {
        const auto r = build_rank(s, {}, &sorter);
        return "packets=" + std::to_string(r.packets());
      });
      row.operation = "rank-build";
      row.k = s.count();
      rows.push_back(row);
    } else {
      if (size == 0) {
        throw UsageError("tree sizes must be positive");
      }
      const auto [a, b] = bench_trees(rng, size);
      Row row = measure(runs, [&](Row& r) {
        IsoStats stats;
        const bool iso = rooted_isomorphic(a, b, {}, &stats);
        r.k = stats.rounds;
        return iso ? "isomorphic" : "not-isomorphic";
      });
      row.operation = "tree-iso";
      rows.push_back(row);
    }
    rows.back().size = size;
  }
  std::printf("operation,N_or_n,k,wall_ns,peak_aux_bits,result\n");
  for (const Row& r : rows) {
    std::printf("%s,%llu,%llu,%llu,%lld,%s\n", r.operation.c_str(), static_cast<unsigned long long>(r.size),
                static_cast<unsigned long long>(r.k), static_cast<unsigned long long>(r.wall_ns),
                static_cast<long long>(r.peak_aux_bits), r.result.c_str());
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::printf("# %s %llu->%llu: time ratio %.3f, size ratio %.3f, peak_aux_bits/size %.3f\n",
                rows[i].operation.c_str(), static_cast<unsigned long long>(rows[i - 1].size),
                static_cast<unsigned long long>(rows[i].size), double(rows[i].wall_ns) / double(rows[i - 1].wall_ns),
                double(rows[i].size) / double(rows[i - 1].size), double(rows[i].peak_aux_bits) / double(rows[i].size));
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-delimiting number toolkit: codec, sorting, ranking and tree isomorphism"};
  app.require_subcommand(1);

  std::string input = "-", output, queries_path, tree_a, tree_b, suite;
  std::vector<std::uint64_t> queries, sizes;
  unsigned tau = 0;
  bool rooted = false, colored = false, no_early_exit = false;
  std::uint64_t seed = 1;
  int runs = 5;

  auto* encode_cmd = app.add_subcommand("encode", "Encode decimal integers into an SDN1 container");
  encode_cmd->add_option("input", input, "Text file of whitespace-separated integers ('-' for stdin)");
  encode_cmd->add_option("-o,--output", output, "Container file to write")->required();

  auto* decode_cmd = app.add_subcommand("decode", "Print the integers of an SDN1 container");
  decode_cmd->add_option("input", input, "Container file")->required();

  auto* sort_cmd = app.add_subcommand("sort", "Stably sort a container");
  sort_cmd->add_option("input", input, "Container file")->required();
  sort_cmd->add_option("-o,--output", output, "Container file to write")->required();
  sort_cmd->add_option("--tau", tau, "Table parameter (0 = automatic)");

  auto* dense_cmd = app.add_subcommand("dense-rank", "Dense rank of sequence elements, one per line");
  auto* rank_cmd = app.add_subcommand("rank", "Rank (number of smaller elements), one per line");
  for (auto* cmd : {dense_cmd, rank_cmd}) {
    cmd->add_option("input", input, "Container file")->required();
    cmd->add_option("-q,--query", queries, "Element indices to rank (default: all)");
    cmd->add_option("--queries", queries_path, "File of element indices");
    cmd->add_option("--tau", tau, "Table parameter (0 = automatic)");
  }

  auto* iso_cmd = app.add_subcommand("tree-iso", "Decide whether two trees are isomorphic");
  iso_cmd->add_option("first", tree_a, "First tree file")->required();
  iso_cmd->add_option("second", tree_b, "Second tree file")->required();
  iso_cmd->add_flag("--rooted", rooted, "Compare as rooted trees (edge lists need a root line)");
  iso_cmd->add_flag("--colored", colored, "Compare node colors as well");
  iso_cmd->add_flag("--no-early-exit", no_early_exit, "Process every level even after a mismatch");

  auto* bench_cmd = app.add_subcommand("bench", "Run a scaling benchmark and print CSV");
  bench_cmd->add_option("--suite", suite, "sort, rank or iso")->required();
  bench_cmd->add_option("--sizes", sizes, "N (bits) or n (nodes) values; default 2^16..2^22")->delimiter(',');
  bench_cmd->add_option("--seed", seed, "Generator seed");
  bench_cmd->add_option("--runs", runs, "Runs per size; the median is reported");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (encode_cmd->parsed()) {
      const auto values = parse_integers(read_text(input), input == "-" ? "<stdin>" : input);
      const SdnSequence s = SdnSequence::from_naturals(values);
      write_container_file(output, s);
      std::printf("N=%llu k=%llu\n", static_cast<unsigned long long>(s.size_bits()),
                  static_cast<unsigned long long>(s.count()));
    } else if (decode_cmd->parsed()) {
      const SdnSequence s = read_container_file(input);
      std::string line;
      for (const Codeword& cw : s) {
        if (!line.empty()) {
          line.push_back(' ');
        }
        line += s.decode_at(cw.position).value.to_decimal();
      }
      std::printf("%s\n", line.c_str());
    } else if (sort_cmd->parsed()) {
      const SdnSequence s = read_container_file(input);
      write_container_file(output, sort(s, SortConfig{tau, SortConfig{}.insertion_cutoff}));
    } else if (dense_cmd->parsed() || rank_cmd->parsed()) {
      const SdnSequence s = read_container_file(input);
      const auto q = parse_queries(queries_path, queries, s.count());
      const auto pos = codeword_positions(s);
      if (dense_cmd->parsed()) {
        const auto r = build_dense_rank(s, RankConfig{tau});
        for (auto i : q) {
          std::printf("%llu\n", static_cast<unsigned long long>(r.rank_at(s, pos[i])));
        }
      } else {
        const auto r = build_rank(s, RankConfig{tau});
        for (auto i : q) {
          std::printf("%llu\n", static_cast<unsigned long long>(r.rank_at(s, pos[i])));
        }
      }
    } else if (iso_cmd->parsed()) {
      const Tree a = read_tree_file(tree_a);
      const Tree b = read_tree_file(tree_b);
      IsoOptions opts;
      opts.colored = colored;
      opts.early_exit = !no_early_exit;
      if (rooted) {
        for (const auto& [t, name] : {std::pair{&a, &tree_a}, std::pair{&b, &tree_b}}) {
          if (!t->has_root()) {
            throw UsageError(*name + ": --rooted needs a \"root r\" line");
          }
        }
      }
      const bool iso = rooted ? rooted_isomorphic(a, b, opts) : unrooted_isomorphic(a, b, opts);
      std::printf("%s\n", iso ? "isomorphic" : "not-isomorphic");
      return iso ? 0 : 1;
    } else if (bench_cmd->parsed()) {
      return cmd_bench(suite, sizes, seed, runs);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sdnctl: %s\n", e.what());
    return kExitError;
  }
  return 0;
}
