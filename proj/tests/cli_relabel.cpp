// Feeds sdnctl tree-iso random trees against relabeled, edge-shuffled copies
// and expects exit 0 for every pair. Every third pair is compared rooted and
// every third colored. Usage: sdn_cli_relabel <sdnctl> <work dir> [pairs]

#include "oracles.hpp"

#include "sdn/tree.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: sdn_cli_relabel <sdnctl> <work dir> [pairs]\n";
    return 2;
  }
  const std::string sdnctl = argv[1];
  const std::filesystem::path dir = argv[2];
  const int pairs = argc > 3 ? std::atoi(argv[3]) : 200;
  std::filesystem::create_directories(dir);

  oracle::Rng rng(20240611);
  int failures = 0;
  for (int i = 0; i < pairs; ++i) {
    const std::uint64_t n = oracle::uniform(rng, 1, 400);
    auto pt = oracle::random_tree(rng, n, oracle::random_shape(rng));
    std::string flags;
    if (i % 3 == 1) {
      flags = " --rooted";
    } else if (i % 3 == 2) {
      oracle::random_colors(rng, pt, oracle::uniform(rng, 1, 4));
      flags = " --colored";
    }
    sdn::Tree a = oracle::to_tree(pt);
    const sdn::Tree b = oracle::relabeled(rng, a);
    const auto fa = dir / "a.txt";
    const auto fb = dir / "b.txt";
    write_file(fa, sdn::format_edge_list(a));
    write_file(fb, sdn::format_edge_list(b));
    const std::string cmd = "\"" + sdnctl + "\" tree-iso \"" + fa.string() + "\" \"" + fb.string() + "\"" +
                            flags + " > /dev/null";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code != 0) {
      ++failures;
      std::cerr << "pair " << i << " (n=" << n << flags << "): exit " << code << "\n";
      std::filesystem::copy_file(fa, dir / ("fail_" + std::to_string(i) + "_a.txt"),
                                 std::filesystem::copy_options::overwrite_existing);
      std::filesystem::copy_file(fb, dir / ("fail_" + std::to_string(i) + "_b.txt"),
                                 std::filesystem::copy_options::overwrite_existing);
    }
  }
  std::cout << pairs - failures << "/" << pairs << " relabeled pairs reported isomorphic\n";
  return failures == 0 ? 0 : 1;
}
