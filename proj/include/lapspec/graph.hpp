#ifndef LAPSPEC_GRAPH_HPP
#define LAPSPEC_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "lapspec/types.hpp"

namespace lapspec {

// Undirected simple graph on vertices 0..n-1. Built once via build_graph (or a
// generator) and treated as an immutable value afterwards; safe to share
// across threads.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;   // normalized u < v, lexicographically sorted
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
  std::vector<int> degrees;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool operator==(const Graph&) const = default;
};

// Validates endpoints, rejects self-loops, collapses duplicate pairs.
// Throws std::invalid_argument naming the offending pair.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// L = D - A, dense symmetric. Row sums are exactly zero (integer entries).
Matrix laplacian(const Graph& g);

bool is_connected(const Graph& g);

// Connected and |edges| = n - 1.
bool is_tree(const Graph& g);

// Edge-list text format: optional '#' comment lines, one header line "n m",
// then exactly m lines "u v" (0-based decimal). Parse errors report the
// 1-based line number.
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

// Emits "n m" then the edges sorted lexicographically, newline-terminated.
std::string serialize_edge_list(const Graph& g);

}  // namespace lapspec

#endif
