#include "sdn/tree.hpp"

#include "sdn/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace sdn {

namespace {

constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 30;

struct Token {
  std::string_view text;
  std::uint64_t line;
  std::uint64_t column;
};

using Line = std::vector<Token>;

std::string where(std::uint64_t line, std::uint64_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::uint64_t line_no = 1;
  std::size_t i = 0;
  while (i <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', i), text.size());
    Line line;
    std::size_t j = i;
    while (j < eol) {
      while (j < eol && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) {
        ++j;
      }
      const std::size_t start = j;
      while (j < eol && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') {
        ++j;
      }
      if (j > start) {
        line.push_back({text.substr(start, j - start), line_no, start - i + 1});
      }
    }
    if (!line.empty()) {
      lines.push_back(std::move(line));
    }
    i = eol + 1;
    ++line_no;
  }
  return lines;
}

std::uint64_t parse_uint(const Token& t) {
  std::uint64_t v = 0;
  const char* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec == std::errc::result_out_of_range) {
    throw InvalidInput(where(t.line, t.column) + "integer '" + std::string(t.text) + "' is too large");
  }
  if (ec != std::errc() || ptr != end) {
    throw InvalidInput(where(t.line, t.column) + "expected a nonnegative integer, found '" +
                       std::string(t.text) + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_colors(const Line& line, std::uint64_t n) {
  if (line.size() != n) {
    throw InvalidInput(where(line.front().line, line.front().column) + "expected " + std::to_string(n) +
                       " colors, found " + std::to_string(line.size()));
  }
  std::vector<std::uint64_t> colors;
  colors.reserve(n);
  for (const Token& t : line) {
    const std::uint64_t c = parse_uint(t);
    if (c >= n) {
      throw InvalidInput(where(t.line, t.column) + "color " + std::to_string(c) + " is not below n = " +
                         std::to_string(n));
    }
    colors.push_back(c);
  }
  return colors;
}

void reject_extra(const std::vector<Line>& lines, std::size_t used) {
  if (lines.size() > used) {
    const Token& t = lines[used].front();
    throw InvalidInput(where(t.line, t.column) + "unexpected content '" + std::string(t.text) + "'");
  }
}

Tree parse_parens(const std::vector<Line>& lines) {
  std::string parens;
  for (const Token& t : lines[0]) {
    for (std::size_t i = 0; i < t.text.size(); ++i) {
      const char c = t.text[i];
      if (c != '(' && c != ')') {
        throw InvalidInput(where(t.line, t.column + i) + "expected '(' or ')', found '" + std::string(1, c) + "'");
      }
      parens.push_back(c);
    }
  }
  BalancedParens bp;
  try {
    bp = BalancedParens::from_string(parens);
  } catch (const InvalidInput& e) {
    throw InvalidInput(where(lines[0].front().line, lines[0].front().column) + e.what());
  }
  std::vector<std::uint64_t> colors;
  std::size_t used = 1;
  if (lines.size() > 1) {
    colors = parse_colors(lines[1], bp.nodes());
    used = 2;
  }
  reject_extra(lines, used);
  return tree_from_bp(bp, colors);
}

Tree parse_edges(const std::vector<Line>& lines) {
  const Line& first = lines[0];
  if (first.size() != 1) {
    throw InvalidInput(where(first[1].line, first[1].column) + "the first line must hold only the node count");
  }
  const std::uint64_t n = parse_uint(first[0]);
  if (n == 0 || n > kMaxNodes) {
    throw InvalidInput(where(first[0].line, first[0].column) + "node count must lie in [1, 2^30]");
  }
  if (lines.size() < n) {
    const Token& t = lines.back().back();
    throw InvalidInput(where(t.line, t.column + t.text.size()) + "expected " + std::to_string(n - 1) +
                       " edge lines, found " + std::to_string(lines.size() - 1));
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    const Line& line = lines[i];
    if (line.size() != 2 || line[0].text == "root") {
      throw InvalidInput(where(line[0].line, line[0].column) + "expected an edge \"u v\"");
    }
    const std::uint64_t u = parse_uint(line[0]);
    const std::uint64_t v = parse_uint(line[1]);
    for (const auto& [x, t] : {std::pair{u, &line[0]}, std::pair{v, &line[1]}}) {
      if (x >= n) {
        throw InvalidInput(where(t->line, t->column) + "node " + std::to_string(x) + " is not below n = " +
                           std::to_string(n));
      }
    }
    edges.emplace_back(u, v);
  }
  Tree tree(n, edges);
  std::size_t used = n;
  if (used < lines.size() && lines[used][0].text == "root") {
    const Line& line = lines[used];
    if (line.size() != 2) {
      throw InvalidInput(where(line[0].line, line[0].column) + "expected \"root r\"");
    }
    const std::uint64_t r = parse_uint(line[1]);
    if (r >= n) {
      throw InvalidInput(where(line[1].line, line[1].column) + "root " + std::to_string(r) +
                         " is not below n = " + std::to_string(n));
    }
    tree.set_root(r);
    ++used;
  }
  if (used < lines.size()) {
    tree.set_colors(parse_colors(lines[used], n));
    ++used;
  }
  reject_extra(lines, used);
  return tree;
}

} // namespace

Tree::Tree(std::uint64_t n, std::span<const std::pair<std::uint64_t, std::uint64_t>> edges) {
  if (n == 0 || n > kMaxNodes) {
    throw InvalidInput("node count must lie in [1, 2^30]");
  }
  if (edges.size() != n - 1) {
    throw InvalidInput("a tree on " + std::to_string(n) + " nodes has " + std::to_string(n - 1) +
                       " edges, found " + std::to_string(edges.size()));
  }
  offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") leaves [0, n)");
    }
    if (u == v) {
      throw InvalidInput("self loop at node " + std::to_string(u));
    }
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    offsets_[i + 1] += offsets_[i];
  }
  adjacency_.resize(offsets_[n]);
  std::vector<std::uint64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    adjacency_[fill[u]++] = static_cast<std::uint32_t>(v);
    adjacency_[fill[v]++] = static_cast<std::uint32_t>(u);
  }

  // n - 1 edges and connected means acyclic.
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::uint64_t reached = 1;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    for (std::uint32_t v : neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != n) {
    throw InvalidInput("the edges contain a cycle and leave " + std::to_string(n - reached) +
                       " nodes unreachable from node 0");
  }
}

void Tree::set_root(std::uint64_t r) {
  if (r >= size()) {
    throw InvalidInput("root " + std::to_string(r) + " is not a node");
  }
  root_ = r;
}

void Tree::set_colors(std::vector<std::uint64_t> colors) {
  if (colors.size() != size()) {
    throw InvalidInput("expected " + std::to_string(size()) + " colors, found " + std::to_string(colors.size()));
  }
  for (std::uint64_t c : colors) {
    if (c >= size()) {
      throw InvalidInput("color " + std::to_string(c) + " is not below n = " + std::to_string(size()));
    }
  }
  colors_ = std::move(colors);
}

RootedTree bp_from_tree(const Tree& tree, std::uint64_t root) {
  const std::uint64_t n = tree.size();
  if (root >= n) {
    throw InvalidInput("root " + std::to_string(root) + " is not a node");
  }
  BitSequence bits(2 * n);
  RootedTree out;
  if (tree.colored()) {
    out.colors.reserve(n);
  }
  struct Frame {
    std::uint32_t node;
    std::uint32_t parent;
    std::uint64_t next;  // index into the adjacency of node
  };
  std::vector<Frame> stack;
  std::uint64_t pos = 0;
  auto enter = [&](std::uint32_t u, std::uint32_t parent) {
    bits.set(pos++);
    if (tree.colored()) {
      out.colors.push_back(tree.colors()[u]);
    }
    stack.push_back({u, parent, 0});
  };
  // The root is its own parent marker; no neighbor of the root equals it.
  enter(static_cast<std::uint32_t>(root), static_cast<std::uint32_t>(root));
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto adj = tree.neighbors(f.node);
    if (f.next == adj.size()) {
      ++pos;  // close parenthesis
      stack.pop_back();
      continue;
    }
    const std::uint32_t v = adj[f.next++];
    if (v != f.parent) {
      enter(v, f.node);  // invalidates f
    }
  }
  out.parens = BalancedParens(std::move(bits));
  return out;
}

RootedTree bp_from_tree(const Tree& tree) {
  if (!tree.has_root()) {
    throw PreconditionViolation("rooted operation on a tree without a designated root");
  }
  return bp_from_tree(tree, tree.root());
}

Tree tree_from_bp(const BalancedParens& parens, std::span<const std::uint64_t> colors) {
  const std::uint64_t n = parens.nodes();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  edges.reserve(n - 1);
  std::vector<std::uint64_t> open;
  std::uint64_t id = 0;
  for (std::uint64_t i = 0; i < parens.size(); ++i) {
    if (parens.is_open(i)) {
      if (!open.empty()) {
        edges.emplace_back(open.back(), id);
      }
      open.push_back(id++);
    } else {
      open.pop_back();
    }
  }
  Tree tree(n, edges);
  tree.set_root(0);
  if (!colors.empty()) {
    tree.set_colors({colors.begin(), colors.end()});
  }
  return tree;
}

Tree parse_tree(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) {
    throw InvalidInput(where(1, 1) + "empty tree description");
  }
  const char first = lines[0][0].text[0];
  return first == '(' || first == ')' ? parse_parens(lines) : parse_edges(lines);
}

Tree read_tree_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidInput("cannot open " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_tree(text.str());
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

std::string format_edge_list(const Tree& tree) {
  std::ostringstream out;
  out << tree.size() << '\n';
  for (std::uint64_t u = 0; u < tree.size(); ++u) {
    for (std::uint32_t v : tree.neighbors(u)) {
      if (u < v) {
        out << u << ' ' << v << '\n';
      }
    }
  }
  if (tree.has_root()) {
    out << "root " << tree.root() << '\n';
  }
  if (tree.colored()) {
    for (std::uint64_t u = 0; u < tree.size(); ++u) {
      out << (u ? " " : "") << tree.colors()[u];
    }
    out << '\n';
  }
  return out.str();
}

} // namespace sdn
