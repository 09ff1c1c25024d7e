#include "lapspec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lapspec {

namespace {
double endpoint_tol(double e) { return std::isfinite(e) ? eq_tolerance() * std::max(1.0, std::abs(e)) : 0.0; }
}  // namespace

int count_in_interval(const Spectrum& s, double lo, double hi, bool closed_lo, bool closed_hi) {
  if (lo > hi) throw std::invalid_argument("count_in_interval: lo > hi");
  const double tlo = endpoint_tol(lo);
  const double thi = endpoint_tol(hi);
  int count = 0;
  for (Index k = 0; k < s.size(); ++k) {
    const double lam = s.eigenvalues(k);
    const bool above = closed_lo ? lam >= lo - tlo : lam > lo + tlo;
    const bool below = closed_hi ? lam <= hi + thi : lam < hi - thi;
    if (above && below) ++count;
  }
  return count;
}

int count_at_least(const Spectrum& s, double x) {
  return count_in_interval(s, x, std::numeric_limits<double>::infinity(), true, true);
}

int multiplicity(const Spectrum& s, double lambda) {
  const double tol = eq_tolerance() * std::max(1.0, std::abs(lambda));
  int count = 0;
  for (Index k = 0; k < s.size(); ++k)
    if (std::abs(s.eigenvalues(k) - lambda) <= tol) ++count;
  return count;
}

double starlikeliness(const Graph& g, const Spectrum& s) {
  if (!is_tree(g)) throw std::invalid_argument("starlikeliness: input graph is not a tree");
  const int high = static_cast<int>(std::count_if(g.degrees.begin(), g.degrees.end(), [](int d) { return d > 2; }));
  return 1.0 - static_cast<double>(high - count_at_least(s, 4.0)) / g.n;
}

Localization localization_vertex(const Spectrum& s, int k) {
  if (k < 0 || k >= s.size()) throw std::invalid_argument("localization_vertex: eigen index out of range");
  const Index n = s.size();
  Index arg = 0;
  double best = -1.0, second = 0.0;
  for (Index j = 0; j < n; ++j) {
    const double v = std::abs(s.eigenvectors(j, k));
    if (v > best) {
      second = best;
      best = v;
      arg = j;
    } else if (v > second) {
      second = v;
    }
  }
  const bool tied = n > 1 && second >= best - 1e-12 * std::max(1.0, best);
  return {static_cast<int>(arg), best, n > 1 ? best - second : best, tied};
}

std::vector<BranchPath> branching_paths(const Graph& g) {
  std::vector<BranchPath> out;
  for (int leaf = 0; leaf < g.n; ++leaf) {
    if (g.degrees[leaf] != 1) continue;
    std::vector<int> chain{leaf};
    int prev = leaf;
    int cur = g.adjacency[leaf][0];
    while (g.degrees[cur] == 2) {
      chain.push_back(cur);
      const int next = g.adjacency[cur][0] == prev ? g.adjacency[cur][1] : g.adjacency[cur][0];
      prev = cur;
      cur = next;
    }
    if (g.degrees[cur] <= 2) continue;  // other end is a leaf: the graph is a path
    std::reverse(chain.begin(), chain.end());
    out.push_back({cur, std::move(chain)});
  }
  return out;  // leaves visited in ascending order
}

DecayCertificate verify_decay(const Spectrum& s, int k, const BranchPath& b) {
  if (k < 0 || k >= s.size()) throw std::invalid_argument("verify_decay: eigen index out of range");
  const double lambda = s.eigenvalues(k);
  const bool at_four = eigenvalues_equal(4.0, lambda);
  if (!at_four && lambda < 4.0)
    throw std::invalid_argument("verify_decay: eigenvalue " + std::to_string(lambda) + " is below 4");

  DecayCertificate cert;
  cert.lambda = lambda;
  cert.branch = b;
  cert.gamma = 2.0 / (lambda - 2.0);

  const int len = b.length();
  std::vector<double> mag(len);
  for (int j = 0; j < len; ++j) mag[j] = std::abs(s.eigenvectors(b.vertices[j], k));

  cert.zero_branch = std::all_of(mag.begin(), mag.end(), [](double v) { return v < kZeroBranchTol; });
  cert.strict = true;
  for (int j = 0; j + 1 < len; ++j) {
    // both magnitudes at numerical zero: the 0/0 case, flagged not failed
    const bool defined = mag[j] >= kZeroBranchTol || mag[j + 1] >= kZeroBranchTol;
    cert.ratios.push_back({defined ? mag[j + 1] / mag[j] : 0.0, defined});
    if (!(mag[j + 1] < mag[j])) cert.strict = false;
  }
  if (cert.zero_branch) cert.strict = false;

  if (at_four) {
    cert.pass = cert.zero_branch || len < 2 || cert.strict;
    return cert;
  }

  bool ok = true;
  for (const auto& step : cert.ratios)
    if (step.defined && step.ratio > cert.gamma + kDecaySlack) ok = false;
  double envelope = mag.empty() ? 0.0 : mag[0];
  for (int j = 1; j < len; ++j) {
    envelope *= cert.gamma;
    if (mag[j] > envelope + kDecaySlack) ok = false;
  }
  cert.pass = ok;
  return cert;
}

BranchBehavior branch_behavior(double lambda) {
  if (lambda < 0) throw std::invalid_argument("branch_behavior: lambda must be >= 0");
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  BranchBehavior b;
  b.lambda = lambda;
  b.discriminant = lambda * (lambda - 4.0);
  b.omega = nan;
  if (lambda == 0.0 || lambda == 4.0) {
    b.regime = Regime::boundary;
    b.r1 = b.r2 = (2.0 - lambda) / 2.0;  // double root: 1 at 0, -1 at 4
  } else if (lambda < 4.0) {
    b.regime = Regime::oscillatory;
    b.r1 = b.r2 = nan;
    b.omega = std::atan2(std::sqrt(lambda * (4.0 - lambda)), 2.0 - lambda);
  } else {
    b.regime = Regime::exponential;
    const double root = std::sqrt(b.discriminant);
    b.r1 = (2.0 - lambda + root) / 2.0;
    b.r2 = (2.0 - lambda - root) / 2.0;
  }
  return b;
}

}  // namespace lapspec
