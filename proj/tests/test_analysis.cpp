#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lapspec/analysis.hpp"
#include "lapspec/closed_form.hpp"
#include "lapspec/generators.hpp"
#include "lapspec/verify.hpp"

using namespace lapspec;

namespace {
Spectrum solve(const Graph& g) { return eig_symmetric<double>(laplacian(g)); }
}  // namespace

TEST_CASE("count_in_interval") {
  CHECK(count_at_least(solve(star(3)), 4.0) == 1);
  for (int n : {2, 5, 30}) CHECK(count_at_least(solve(path(n)), 4.0) == 0);
  CHECK(count_at_least(solve(claw_chain(5)), 4.0) == 5);

  const Spectrum s = solve(claw_chain(2));
  CHECK(count_in_interval(s, 0.0, std::numeric_limits<double>::infinity(), true, true) == s.size());

  // eigenvalue exactly 4: inside [4, inf), outside (4, inf)
  CHECK(count_in_interval(s, 4.0, 100.0, true, true) == 2);
  CHECK(count_in_interval(s, 4.0, 100.0, false, true) == 1);
  CHECK_THROWS_AS(count_in_interval(s, 1.0, 0.0, true, true), std::invalid_argument);
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(solve(star(3)), 1.0) == 2);
  for (int m : {1, 2, 3, 5}) CHECK(multiplicity(solve(claw_chain(m)), 4.0) == 1);
  CHECK(multiplicity(solve(lattice(2, 3)), 4.0) == 3);
}

TEST_CASE("starlikeliness") {
  for (const auto& lens : {std::vector<int>{1, 1, 1}, {3, 2, 1}, {5, 5, 5, 5}})
    CHECK(starlikeliness(starlike(make_starlike_spec(lens)), solve(starlike(make_starlike_spec(lens)))) == 1.0);
  CHECK(starlikeliness(path(12), solve(path(12))) == 1.0);
  CHECK(starlikeliness(claw_chain(5), solve(claw_chain(5))) == 1.0);
  const Graph cycle = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(starlikeliness(cycle, solve(cycle)), std::invalid_argument);
}

TEST_CASE("localization_vertex") {
  const Localization claw_top = localization_vertex(solve(star(3)), 3);
  CHECK(claw_top.vertex == 0);
  CHECK_FALSE(claw_top.tied);

  // starlike trees localize the top eigenvector at the center, strictly
  std::mt19937 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const StarlikeSpec spec = random_starlike_spec(rng, 3, 8, 12);
    const Spectrum s = solve(starlike(spec));
    const Localization loc = localization_vertex(s, static_cast<int>(s.size()) - 1);
    CHECK(loc.vertex == 0);
    CHECK(loc.margin > 0.0);
  }

  // ties are reported: the claw-chain eigenvector at 4 is constant on centers
  const Spectrum s = solve(claw_chain(5));
  CHECK(std::abs(s.eigenvalues(15) - 4.0) <= 4e-8);
  const Localization at4 = localization_vertex(s, 15);
  CHECK(at4.tied);
  CHECK(at4.vertex % 4 == 0);  // smallest-index center

  CHECK_THROWS_AS(localization_vertex(s, 20), std::invalid_argument);
}

TEST_CASE("counterexample localization avoids the degree-5 vertex") {
  const Graph g = counterexample_graph(5, 5);
  const Spectrum s = solve(g);
  const Localization loc = localization_vertex(s, static_cast<int>(s.size()) - 1);
  CHECK(g.degrees[loc.vertex] == 4);
}

TEST_CASE("branching_paths") {
  const auto claw_branches = branching_paths(starlike(make_starlike_spec({3, 1, 1})));
  REQUIRE(claw_branches.size() == 3);
  int len3 = 0, len1 = 0;
  for (const auto& b : claw_branches) {
    if (b.length() == 3) ++len3;
    if (b.length() == 1) ++len1;
    CHECK(b.junction == 0);
  }
  CHECK(len3 == 1);
  CHECK(len1 == 2);

  CHECK(branching_paths(path(10)).empty());
  CHECK(branching_paths(path(1)).empty());
  CHECK(branching_paths(path(2)).empty());

  const auto chain_branches = branching_paths(claw_chain(2));
  CHECK(chain_branches.size() == 6);
  for (const auto& b : chain_branches) CHECK(b.length() == 1);

  // structural invariants, ordered by leaf index
  const Graph g = counterexample_graph(3, 4);
  const auto branches = branching_paths(g);
  int prev_leaf = -1;
  for (const auto& b : branches) {
    CHECK(g.degrees[b.junction] > 2);
    const int leaf = b.vertices.back();
    CHECK(g.degrees[leaf] == 1);
    CHECK(leaf > prev_leaf);
    prev_leaf = leaf;
    for (int j = 0; j + 1 < b.length(); ++j) CHECK(g.degrees[b.vertices[j]] == 2);
    // i1 adjacent to the junction, consecutive vertices adjacent
    const auto& adj = g.adjacency[b.vertices.front()];
    CHECK(std::find(adj.begin(), adj.end(), b.junction) != adj.end());
  }
}

TEST_CASE("verify_decay at lambda = 4 on claw chains: strict decrease, leaf = center/3") {
  for (int m : {2, 3, 5}) {
    const Graph g = claw_chain(m);
    const Spectrum s = solve(g);
    const int k4 = 3 * m;
    REQUIRE(std::abs(s.eigenvalues(k4) - 4.0) <= 4e-8);
    for (const auto& b : branching_paths(g)) {
      const DecayCertificate cert = verify_decay(s, k4, b);
      CHECK(cert.pass);
      CHECK(cert.strict);
      CHECK_FALSE(cert.zero_branch);
      // two-value eigenvector: leaf component is a third of the center's
      const double leaf = std::abs(s.eigenvectors(b.vertices.back(), k4));
      const double center = std::abs(s.eigenvectors(b.junction, k4));
      CHECK(std::abs(leaf - center / 3.0) <= 1e-9);
    }
  }
}

TEST_CASE("verify_decay above 4 bounds every step by gamma") {
  const Graph g = starlike(make_starlike_spec({5, 1, 1}));
  const Spectrum s = solve(g);
  const int top = static_cast<int>(s.size()) - 1;
  REQUIRE(s.eigenvalues(top) > 4.0);
  const double gamma = 2.0 / (s.eigenvalues(top) - 2.0);
  for (const auto& b : branching_paths(g)) {
    const DecayCertificate cert = verify_decay(s, top, b);
    CHECK(cert.pass);
    CHECK(cert.gamma == gamma);
    for (const auto& step : cert.ratios) {
      CHECK(step.defined);
      CHECK(step.ratio <= gamma + kDecaySlack);
    }
  }
}

TEST_CASE("verify_decay flags the all-zero branch at lambda = 4") {
  // synthetic spectrum: eigenvalue exactly 4 with a vanishing branch
  Spectrum s;
  s.eigenvalues.resize(1);
  s.eigenvalues << 4.0;
  s.eigenvectors = Matrix::Zero(5, 1);
  s.eigenvectors(0, 0) = 1.0;
  BranchPath b{0, {1, 2, 3, 4}};
  const DecayCertificate cert = verify_decay(s, 0, b);
  CHECK(cert.pass);
  CHECK(cert.zero_branch);
  CHECK_FALSE(cert.strict);
}

TEST_CASE("verify_decay rejects eigenvalues below 4") {
  const Spectrum s = solve(starlike(make_starlike_spec({2, 2, 1})));
  const auto branches = branching_paths(starlike(make_starlike_spec({2, 2, 1})));
  CHECK_THROWS_AS(verify_decay(s, 0, branches.front()), std::invalid_argument);
}

TEST_CASE("branch_behavior") {
  const BranchBehavior exp5 = branch_behavior(5.0);
  CHECK(exp5.regime == Regime::exponential);
  CHECK(std::abs(exp5.r1 - (-3.0 + std::sqrt(5.0)) / 2.0) <= 1e-15);
  CHECK(std::abs(exp5.r2 - (-3.0 - std::sqrt(5.0)) / 2.0) <= 1e-15);

  const BranchBehavior osc2 = branch_behavior(2.0);
  CHECK(osc2.regime == Regime::oscillatory);
  CHECK(std::abs(osc2.omega - std::numbers::pi / 2.0) <= 1e-15);

  const BranchBehavior b4 = branch_behavior(4.0);
  CHECK(b4.regime == Regime::boundary);
  CHECK(b4.r1 == -1.0);
  CHECK(b4.r2 == -1.0);
  CHECK(b4.discriminant == 0.0);

  CHECK(branch_behavior(0.0).regime == Regime::boundary);
  CHECK(branch_behavior(0.0).r1 == 1.0);
  CHECK_THROWS_AS(branch_behavior(-0.1), std::invalid_argument);

  // regime flips exactly at 4; real roots multiply to 1
  CHECK(branch_behavior(4.0 - 1e-12).regime == Regime::oscillatory);
  CHECK(branch_behavior(4.0 + 1e-12).regime == Regime::exponential);
  for (double lam : {4.5, 5.0, 7.1, 40.0}) {
    const BranchBehavior b = branch_behavior(lam);
    CHECK(b.r1 > -1.0);
    CHECK(b.r1 < 0.0);
    CHECK(b.r2 < -1.0);
    CHECK(std::abs(b.r1 * b.r2 - 1.0) <= 1e-12);
  }
  // oscillatory frequency satisfies tan(omega) = sqrt(lambda(4-lambda)) / (2-lambda)
  for (double lam : {0.5, 1.0, 3.0, 3.9}) {
    const BranchBehavior b = branch_behavior(lam);
    CHECK(b.regime == Regime::oscillatory);
    CHECK(b.omega > 0.0);
    CHECK(b.omega < std::numbers::pi);
    CHECK(std::abs(std::tan(b.omega) - std::sqrt(lam * (4.0 - lam)) / (2.0 - lam)) <= 1e-9);
  }
}
