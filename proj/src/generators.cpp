#include "lapspec/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lapspec {

int StarlikeSpec::vertex_count() const {
  return 1 + std::accumulate(branch_lengths.begin(), branch_lengths.end(), 0);
}

StarlikeSpec make_starlike_spec(std::vector<int> lengths) {
  if (lengths.size() < 3)
    throw std::invalid_argument("starlike spec needs at least 3 branches, got " + std::to_string(lengths.size()));
  for (int len : lengths) {
    if (len < 1) throw std::invalid_argument("starlike spec: branch length must be >= 1, got " + std::to_string(len));
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return StarlikeSpec{std::move(lengths)};
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

Graph star(int k) {
  if (k < 1) throw std::invalid_argument("star: leaf count must be >= 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(k);
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return build_graph(k + 1, edges);
}

Graph starlike(const StarlikeSpec& spec) {
  if (spec.branch_count() < 3) throw std::invalid_argument("starlike: spec must have k >= 3 branches");
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int len : spec.branch_lengths) {
    int prev = 0;
    for (int step = 0; step < len; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return build_graph(next, edges);
}

Graph comet(int length, int branches) {
  if (length < 1) throw std::invalid_argument("comet: length must be >= 1");
  if (branches < 3) throw std::invalid_argument("comet: needs at least 3 branches");
  std::vector<int> lens(branches, 1);
  lens[0] = length;
  return starlike(make_starlike_spec(lens));
}

Graph claw_chain(int m) {
  if (m < 1) throw std::invalid_argument("claw_chain: m must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    const int c = 4 * i;
    edges.emplace_back(c, c + 1);
    edges.emplace_back(c, c + 2);
    edges.emplace_back(c, c + 3);
    if (i + 1 < m) edges.emplace_back(c, c + 4);
  }
  return build_graph(4 * m, edges);
}

Graph counterexample_graph(int m, int ell) {
  if (m < 1) throw std::invalid_argument("counterexample_graph: m must be >= 1");
  if (ell < 1) throw std::invalid_argument("counterexample_graph: ell must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    const int c = 3 * i;
    edges.emplace_back(c, c + 1);
    edges.emplace_back(c, c + 2);
    if (i + 1 < m) edges.emplace_back(c, c + 3);
  }
  const int branch0 = 3 * m;                    // leaf end of the comet branch
  edges.emplace_back(3 * (m - 1), branch0);     // chain's last center
  for (int j = 0; j + 1 < ell; ++j) edges.emplace_back(branch0 + j, branch0 + j + 1);
  const int center = 3 * m + ell;
  edges.emplace_back(branch0 + ell - 1, center);
  for (int t = 1; t <= 4; ++t) edges.emplace_back(center, center + t);
  return build_graph(3 * m + ell + 5, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int n = g.n * h.n;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.n) * h.edges.size() + static_cast<std::size_t>(h.n) * g.edges.size());
  for (int a = 0; a < g.n; ++a)
    for (const auto& [b, b2] : h.edges) edges.emplace_back(a * h.n + b, a * h.n + b2);
  for (const auto& [a, a2] : g.edges)
    for (int b = 0; b < h.n; ++b) edges.emplace_back(a * h.n + b, a2 * h.n + b);
  return build_graph(n, edges);
}

Graph lattice(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("lattice: n and d must be >= 1");
  Graph g = path(n);
  const Graph p = g;
  for (int i = 1; i < d; ++i) g = cartesian_product(g, p);
  return g;
}

Graph prufer_decode(const std::vector<int>& seq, int n) {
  if (n < 2) throw std::invalid_argument("prufer_decode: n must be >= 2");
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("prufer_decode: sequence length must be n-2 = " + std::to_string(n - 2) + ", got " +
                                std::to_string(seq.size()));
  for (int s : seq) {
    if (s < 0 || s >= n)
      throw std::invalid_argument("prufer_decode: entry " + std::to_string(s) + " outside [0, " + std::to_string(n) +
                                  ")");
  }

  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];

  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return build_graph(n, edges);
}

std::vector<int> prufer_sequence_from_rank(std::uint64_t rank, int n) {
  const int len = n - 2;
  std::vector<int> seq(std::max(len, 0));
  for (int i = len - 1; i >= 0; --i) {
    seq[i] = static_cast<int>(rank % n);
    rank /= n;
  }
  return seq;
}

std::uint64_t prufer_sequence_count(int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
  return total;
}

}  // namespace lapspec
