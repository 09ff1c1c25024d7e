#ifndef LAPSPEC_ANALYSIS_HPP
#define LAPSPEC_ANALYSIS_HPP

#include <vector>

#include "lapspec/eigensolver.hpp"
#include "lapspec/graph.hpp"

namespace lapspec {

// Eigenvalue count m_G(I) for the interval (lo, hi) with the given endpoint
// closures. Membership at a closed endpoint uses the shared eq_tolerance();
// at an open endpoint a value within tolerance counts as outside.
int count_in_interval(const Spectrum& s, double lo, double hi, bool closed_lo, bool closed_hi);

// m_G([x, inf)).
int count_at_least(const Spectrum& s, double x);

// m_G(lambda): eigenvalues within eq_tolerance()*max(1,|lambda|) of lambda.
int multiplicity(const Spectrum& s, double lambda);

// Sl(T) = 1 - (#{deg > 2} - m_T([4,inf))) / n. Trees only.
double starlikeliness(const Graph& g, const Spectrum& s);

struct Localization {
  int vertex;     // argmax_j |phi_{j,k}|, ties broken by smallest index
  double value;   // |phi| at the argmax
  double margin;  // gap to the second largest |phi| (value itself when n = 1)
  bool tied;      // another vertex matches the maximum to ~1e-12
};

Localization localization_vertex(const Spectrum& s, int k);

// Pendant path hanging off a junction of degree > 2: vertices[0] is adjacent
// to the junction, vertices.back() is the leaf, interior degrees are 2.
struct BranchPath {
  int junction;
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const BranchPath&) const = default;
};

// All maximal branching paths, ordered by leaf index. Empty when no vertex
// has degree > 2 (e.g. the whole graph is a path).
std::vector<BranchPath> branching_paths(const Graph& g);

struct DecayStep {
  double ratio;  // |phi_{i_{j+1}}| / |phi_{i_j}|
  bool defined;  // false for the 0/0 case (both magnitudes at numerical zero)
};

struct DecayCertificate {
  double lambda;
  BranchPath branch;
  double gamma;  // 2 / (lambda - 2)
  std::vector<DecayStep> ratios;
  bool pass;
  bool strict;       // every step strictly decreased
  bool zero_branch;  // all components below 1e-10
};

// Checks the branch decay law for an eigenpair with lambda >= 4:
//  - lambda > 4: every defined step ratio <= gamma + 1e-10 and
//    |phi_{i_j}| <= gamma^(j-1) |phi_{i_1}| + 1e-10;
//  - lambda = 4 (within tolerance): strictly decreasing magnitudes, or an
//    all-zero branch (reported, not failed).
// Throws for lambda below 4 - tolerance.
DecayCertificate verify_decay(const Spectrum& s, int k, const BranchPath& b);

enum class Regime { oscillatory, boundary, exponential };

// Behavior of eigenvector components along a path, from the recursion
// r^2 + (lambda - 2) r + 1 = 0 with discriminant lambda (lambda - 4).
struct BranchBehavior {
  double lambda;
  double discriminant;
  Regime regime;
  double r1, r2;  // real roots (lambda >= 4); double root at the boundary
  double omega;   // oscillation frequency for 0 < lambda < 4, else NaN
};

BranchBehavior branch_behavior(double lambda);

}  // namespace lapspec

#endif
