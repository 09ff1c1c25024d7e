#include "lapspec/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lapspec {

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("build_graph: vertex count must be >= 1, got " + std::to_string(n));

  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("build_graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") is a self-loop");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("build_graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") has an endpoint outside [0, " + std::to_string(n) + ")");
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  Graph g;
  g.n = n;
  g.edges = std::move(normalized);
  g.adjacency.assign(n, {});
  g.degrees.assign(n, 0);
  for (const auto& [u, v] : g.edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
    ++g.degrees[u];
    ++g.degrees[v];
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Matrix laplacian(const Graph& g) {
  Matrix L = Matrix::Zero(g.n, g.n);
  for (int v = 0; v < g.n; ++v) L(v, v) = g.degrees[v];
  for (const auto& [u, v] : g.edges) {
    L(u, v) = -1.0;
    L(v, u) = -1.0;
  }
  return L;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n;
}

bool is_tree(const Graph& g) { return g.edge_count() == g.n - 1 && is_connected(g); }

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

std::vector<long> parse_ints(const std::string& line, int line_no, std::size_t expected) {
  std::istringstream iss(line);
  std::vector<long> out;
  long value;
  while (iss >> value) out.push_back(value);
  std::string trailing;
  if (!iss.eof() || out.size() != expected) {
    iss.clear();
    throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": expected " +
                                std::to_string(expected) + " integers, got \"" + line + "\"");
  }
  return out;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    if (n < 0) {
      const auto header = parse_ints(line, line_no, 2);
      n = header[0];
      m = header[1];
      if (n < 1 || m < 0)
        throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": bad header \"" + line + "\"");
      continue;
    }
    const auto pair = parse_ints(line, line_no, 2);
    if (static_cast<long>(edges.size()) == m)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": more edges than the header's m = " + std::to_string(m));
    edges.emplace_back(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
  }
  if (n < 0) throw std::invalid_argument("edge list: missing \"n m\" header");
  if (static_cast<long>(edges.size()) != m)
    throw std::invalid_argument("edge list: header says m = " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));
  return build_graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open edge list file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace lapspec
