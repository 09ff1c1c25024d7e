#ifndef LAPSPEC_GENERATORS_HPP
#define LAPSPEC_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "lapspec/graph.hpp"

namespace lapspec {

// Starlike tree S(n1, ..., nk): k >= 3 branches of the given lengths hanging
// from a single central vertex. Lengths are kept sorted non-increasing.
struct StarlikeSpec {
  std::vector<int> branch_lengths;

  int branch_count() const { return static_cast<int>(branch_lengths.size()); }
  int vertex_count() const;
  bool operator==(const StarlikeSpec&) const = default;
};

// Validates (k >= 3, all lengths >= 1) and canonicalizes to non-increasing order.
StarlikeSpec make_starlike_spec(std::vector<int> lengths);

// P_n: vertex i adjacent to i+1.
Graph path(int n);

// K_{1,k}: center 0, leaves 1..k.
Graph star(int k);

// Center is vertex 0; branch i occupies consecutive indices from the vertex
// next to the center out to the leaf.
Graph starlike(const StarlikeSpec& spec);

// S(length, 1, ..., 1) with `branches` branches total (one long, rest length 1).
Graph comet(int length, int branches);

// m claws; claw i occupies vertices 4i..4i+3 (center first), centers joined
// in a path 4i -- 4(i+1). n = 4m.
Graph claw_chain(int m);

// m copies of K_{1,2} with centers chained, the last center joined to the leaf
// end of the length-ell branch of a comet S(ell,1,1,1,1). Vertex order:
// copy i at 3i (center), 3i+1, 3i+2; branch vertices 3m..3m+ell-1 running from
// the chain toward the comet; comet center 3m+ell; comet leaves follow.
// n = 3m + ell + 5.
Graph counterexample_graph(int m, int ell);

// Vertex (a, b) -> a * h.n + b; (a,b) ~ (a',b') iff a = a' and b ~ b', or
// b = b' and a ~ a'.
Graph cartesian_product(const Graph& g, const Graph& h);

// d-fold Cartesian product of P_n with itself, row-major vertex order
// (first coordinate most significant).
Graph lattice(int n, int d);

// Unique labeled tree for a Pruefer sequence of length n-2 over [0, n).
Graph prufer_decode(const std::vector<int>& seq, int n);

// Base-n digits of rank, most significant first; bijection onto sequences.
std::vector<int> prufer_sequence_from_rank(std::uint64_t rank, int n);
std::uint64_t prufer_sequence_count(int n);  // n^(n-2)

}  // namespace lapspec

#endif
