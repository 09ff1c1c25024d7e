#include "lapspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace lapspec {

BoundCheck make_bound_check(std::string name, double lhs, double rhs, std::string context) {
  BoundCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.holds = lhs <= rhs + kBoundSlack;
  c.margin = rhs - lhs;
  c.context = std::move(context);
  return c;
}

namespace {

std::string spec_label(const StarlikeSpec& spec) {
  std::string out = "S(";
  for (std::size_t i = 0; i < spec.branch_lengths.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.branch_lengths[i]);
  }
  return out + ")";
}

int count_high_degree(const Graph& g) {
  return static_cast<int>(std::count_if(g.degrees.begin(), g.degrees.end(), [](int d) { return d > 2; }));
}

}  // namespace

std::vector<BoundCheck> check_starlike_bounds(const StarlikeSpec& spec, const Spectrum& s) {
  const int n = spec.vertex_count();
  if (s.size() != n)
    throw std::invalid_argument("check_starlike_bounds: spectrum size " + std::to_string(s.size()) +
                                " does not match spec vertex count " + std::to_string(n));
  constexpr double pi = std::numbers::pi;
  const int k = spec.branch_count();
  const double lam_max = s.eigenvalues(n - 1);
  const double lam_second = s.eigenvalues(n - 2);
  const double n1 = spec.branch_lengths.front();
  const double nk = spec.branch_lengths.back();
  const std::string ctx = spec_label(spec);

  std::vector<BoundCheck> checks;
  checks.push_back(make_bound_check("das_upper", lam_max, k + 1 + 1.0 / (k - 1), ctx));
  checks.push_back(make_bound_check("das_second_lower", 2 + 2 * std::cos(2 * pi / (2 * nk + 1)), lam_second, ctx));
  checks.push_back(make_bound_check("das_second_upper", lam_second, 2 + 2 * std::cos(2 * pi / (2 * n1 + 1)), ctx));
  checks.push_back(make_bound_check("grone_merris_lower", k + 1.0, lam_max, ctx));
  return checks;
}

std::vector<BoundCheck> check_general_bounds(const Graph& g, const Spectrum& s) {
  if (!is_connected(g)) throw std::invalid_argument("check_general_bounds: graph must be connected");
  const std::string ctx = "n=" + std::to_string(g.n);
  std::vector<BoundCheck> checks;
  checks.push_back(make_bound_check("count_ge4_vs_high_degree", count_at_least(s, 4.0), count_high_degree(g), ctx));
  if (g.edge_count() > 0) {
    const int d1 = *std::max_element(g.degrees.begin(), g.degrees.end());
    const double lam_max = s.eigenvalues(s.size() - 1);
    checks.push_back(make_bound_check("grone_merris_lower", d1 + 1.0, lam_max, ctx));
    // Stevanovic needs d1 >= 2 (fails for a single edge); stated for trees.
    if (is_tree(g) && d1 >= 2)
      checks.push_back(
          make_bound_check("stevanovic_upper", lam_max, d1 + 2 * std::sqrt(d1 - 1.0), ctx + " tree-only bound"));
  }
  return checks;
}

std::vector<BoundCheck> check_guo(const Spectrum& s, int n) {
  if (s.size() != n) throw std::invalid_argument("check_guo: spectrum size does not match n");
  std::vector<BoundCheck> checks;
  checks.reserve(n);
  for (int j = 0; j < n; ++j) {
    const int ceil_bound = (n + (n - j) - 1) / (n - j);
    checks.push_back(
        make_bound_check("guo_j" + std::to_string(j), s.eigenvalues(j), ceil_bound, "n=" + std::to_string(n)));
  }
  return checks;
}

namespace {

Matrix permuted_laplacian(const Graph& g, const std::vector<int>& order) {
  const Matrix L = laplacian(g);
  const int n = g.n;
  Matrix P(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P(i, j) = L(order[i], order[j]);
  return P;
}

}  // namespace

PerturbationSetup perturbation_check(const Graph& g, const BlockPartition& partition,
                                     std::optional<int> eigen_index) {
  const int l1 = static_cast<int>(partition.g1.size());
  const int l2 = static_cast<int>(partition.path.size());
  const int l3 = static_cast<int>(partition.g3.size());
  if (l1 < 1 || l2 < 1 || l3 < 1)
    throw std::invalid_argument("perturbation_check: all three blocks must be non-empty");

  std::vector<int> order;
  order.reserve(g.n);
  order.insert(order.end(), partition.g1.begin(), partition.g1.end());
  order.insert(order.end(), partition.path.begin(), partition.path.end());
  order.insert(order.end(), partition.g3.begin(), partition.g3.end());
  if (static_cast<int>(order.size()) != g.n)
    throw std::invalid_argument("perturbation_check: partition does not cover the vertex set");
  {
    std::vector<char> seen(g.n, 0);
    for (int v : order) {
      if (v < 0 || v >= g.n || seen[v])
        throw std::invalid_argument("perturbation_check: partition is not a permutation of the vertices");
      seen[v] = 1;
    }
  }

  const Matrix L = permuted_laplacian(g, order);
  // Path block: tridiagonal, all diagonals 2 (every path vertex has degree 2
  // in the full graph).
  for (int i = 0; i < l2; ++i) {
    for (int j = 0; j < l2; ++j) {
      const double want = i == j ? 2.0 : (std::abs(i - j) == 1 ? -1.0 : 0.0);
      if (L(l1 + i, l1 + j) != want)
        throw std::invalid_argument("perturbation_check: path block is not the expected tridiagonal at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  // E1: single -1 in the top-right corner (first path vertex -- last g1 vertex).
  for (int i = 0; i < l2; ++i) {
    for (int j = 0; j < l1; ++j) {
      const double want = (i == 0 && j == l1 - 1) ? -1.0 : 0.0;
      if (L(l1 + i, j) != want)
        throw std::invalid_argument("perturbation_check: coupling E1 is not a single corner entry");
    }
  }
  // E2: single -1 in the top-right corner (first g3 vertex -- last path vertex).
  for (int i = 0; i < l3; ++i) {
    for (int j = 0; j < l2; ++j) {
      const double want = (i == 0 && j == l2 - 1) ? -1.0 : 0.0;
      if (L(l1 + l2 + i, l1 + j) != want)
        throw std::invalid_argument("perturbation_check: coupling E2 is not a single corner entry");
    }
  }
  // No direct g1 -- g3 edges.
  for (int i = 0; i < l3; ++i)
    for (int j = 0; j < l1; ++j)
      if (L(l1 + l2 + i, j) != 0.0)
        throw std::invalid_argument("perturbation_check: blocks g1 and g3 are directly coupled");

  const Matrix top_left = L.topLeftCorner(l1 + l2, l1 + l2);
  const Spectrum sub = eig_symmetric<double>(top_left);

  double lambda_tilde = 0;
  if (eigen_index) {
    if (*eigen_index < 0 || *eigen_index >= sub.size())
      throw std::invalid_argument("perturbation_check: eigen index out of range");
    lambda_tilde = sub.eigenvalues(*eigen_index);
    if (lambda_tilde <= 4.0)
      throw std::invalid_argument("perturbation_check: selected subgraph eigenvalue is not above 4");
  } else {
    lambda_tilde = sub.eigenvalues(sub.size() - 1);
    if (lambda_tilde <= 4.0)
      throw std::invalid_argument("perturbation_check: no subgraph eigenvalue above 4");
  }

  PerturbationSetup setup;
  setup.l1 = l1;
  setup.l2 = l2;
  setup.l3 = l3;
  setup.partition = partition;
  setup.lambda_tilde = lambda_tilde;
  setup.gamma_tilde = 2.0 / (lambda_tilde - 2.0);
  setup.bound = std::pow(setup.gamma_tilde, l2);

  const Spectrum full = eig_symmetric<double>(laplacian(g));
  double gap = std::numeric_limits<double>::infinity();
  double matched = 0;
  for (Index k = 0; k < full.size(); ++k) {
    const double d = std::abs(full.eigenvalues(k) - lambda_tilde);
    if (d < gap) {
      gap = d;
      matched = full.eigenvalues(k);
    }
  }
  setup.matched_lambda = matched;
  setup.gap = gap;
  setup.holds = gap <= setup.bound + kPerturbationSlack;
  return setup;
}

namespace {

bool claw_partition_rec(const Graph& g, std::vector<char>& used, int covered) {
  if (covered == g.n) return true;
  int u = 0;
  while (used[u]) ++u;
  used[u] = 1;

  // u as a claw center
  std::vector<int> free;
  for (int w : g.adjacency[u])
    if (!used[w]) free.push_back(w);
  const int fn = static_cast<int>(free.size());
  for (int a = 0; a < fn; ++a)
    for (int b = a + 1; b < fn; ++b)
      for (int c = b + 1; c < fn; ++c) {
        used[free[a]] = used[free[b]] = used[free[c]] = 1;
        if (claw_partition_rec(g, used, covered + 4)) return true;
        used[free[a]] = used[free[b]] = used[free[c]] = 0;
      }

  // u as a leaf of some unused neighbor acting as center
  for (int center : g.adjacency[u]) {
    if (used[center]) continue;
    used[center] = 1;
    std::vector<int> others;
    for (int w : g.adjacency[center])
      if (!used[w]) others.push_back(w);
    const int on = static_cast<int>(others.size());
    for (int a = 0; a < on; ++a)
      for (int b = a + 1; b < on; ++b) {
        used[others[a]] = used[others[b]] = 1;
        if (claw_partition_rec(g, used, covered + 4)) return true;
        used[others[a]] = used[others[b]] = 0;
      }
    used[center] = 0;
  }

  used[u] = 0;
  return false;
}

}  // namespace

bool is_claw_spanned(const Graph& g) {
  if (g.n % 4 != 0) return false;
  std::vector<char> used(g.n, 0);
  return claw_partition_rec(g, used, 0);
}

BoundCheck verify_eigenvalue4_structure(const Graph& g, const Spectrum& s) {
  if (!is_tree(g)) throw std::invalid_argument("verify_eigenvalue4_structure: graph must be a tree");
  const int mult = multiplicity(s, 4.0);
  if (mult == 0) throw std::invalid_argument("verify_eigenvalue4_structure: no eigenvalue 4 present");
  const bool ok = mult == 1 && g.n % 4 == 0;
  return make_bound_check("eigenvalue4_structure", ok ? 0.0 : 1.0, 0.0,
                          "n=" + std::to_string(g.n) + " mult(4)=" + std::to_string(mult));
}

namespace {

std::uint64_t count_sine_sum_solutions(const std::vector<double>& sin2, int d, int depth, double partial) {
  // partial sums are nonnegative and increasing: prune past 1.
  if (partial > 1.0 + kLatticeSumTol) return 0;
  if (depth == d) return std::abs(partial - 1.0) <= kLatticeSumTol ? 1 : 0;
  std::uint64_t count = 0;
  for (double t : sin2) count += count_sine_sum_solutions(sin2, d, depth + 1, partial + t);
  return count;
}

}  // namespace

std::uint64_t lattice_multiplicity_4(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("lattice_multiplicity_4: n and d must be >= 1");
  double work = 1;
  for (int i = 0; i < d; ++i) work *= n;
  if (work > static_cast<double>(std::uint64_t(1) << 31))
    throw std::invalid_argument("lattice_multiplicity_4: n^d too large to enumerate");
  constexpr double pi = std::numbers::pi;
  std::vector<double> sin2(n);
  for (int j = 0; j < n; ++j) {
    const double sj = std::sin(j * pi / (2.0 * n));
    sin2[j] = sj * sj;
  }
  return count_sine_sum_solutions(sin2, d, 0, 0.0);
}

BoundCheck verify_counterexample(int m, int ell) {
  const Graph g = counterexample_graph(m, ell);
  const Spectrum s = eig_symmetric<double>(laplacian(g));
  const Localization loc = localization_vertex(s, static_cast<int>(s.size()) - 1);
  const int deg = g.degrees[loc.vertex];
  return make_bound_check("counterexample_localization", deg == 4 ? 0.0 : 1.0, 0.0,
                          "m=" + std::to_string(m) + " ell=" + std::to_string(ell) + " argmax_vertex=" +
                              std::to_string(loc.vertex) + " degree=" + std::to_string(deg));
}

SweepPredicate predicate_eig4_claw_spanned() {
  return {"eig4-claws", [](const Graph& g, const Spectrum& s) -> SweepOutcome {
            if (multiplicity(s, 4.0) == 0) return {false, true};
            return {true, is_claw_spanned(g)};
          }};
}

SweepPredicate predicate_eig4_iff_claw_spanned() {
  return {"eig4-iff-claws", [](const Graph& g, const Spectrum& s) -> SweepOutcome {
            const bool has4 = multiplicity(s, 4.0) > 0;
            const bool spanned = is_claw_spanned(g);
            if (!has4 && !spanned) return {false, true};
            return {true, has4 == spanned};
          }};
}

SweepPredicate predicate_count_bound() {
  return {"count-bound", [](const Graph& g, const Spectrum& s) -> SweepOutcome {
            return {true, count_at_least(s, 4.0) <= count_high_degree(g)};
          }};
}

SweepPredicate predicate_guo() {
  return {"guo", [](const Graph& g, const Spectrum& s) -> SweepOutcome {
            for (const auto& c : check_guo(s, g.n))
              if (!c.holds) return {true, false};
            return {true, true};
          }};
}

SweepPredicate predicate_eig4_structure() {
  return {"eig4-structure", [](const Graph& g, const Spectrum& s) -> SweepOutcome {
            const int mult = multiplicity(s, 4.0);
            if (mult == 0) return {false, true};
            return {true, mult == 1 && g.n % 4 == 0};
          }};
}

SweepReport enumerate_prufer_sweep(int n, const SweepPredicate& predicate, int jobs) {
  if (n < 2 || n > 9)
    throw std::invalid_argument("enumerate_prufer_sweep: n must be in [2, 9], got " + std::to_string(n));
  if (jobs < 1) jobs = 1;
  const std::uint64_t total = prufer_sequence_count(n);
  jobs = static_cast<int>(std::min<std::uint64_t>(jobs, total));

  struct Partial {
    std::uint64_t applicable = 0;
    std::uint64_t violations = 0;
    std::vector<std::uint64_t> ranks;
  };
  std::vector<Partial> partials(jobs);

  auto worker = [&](int w) {
    const std::uint64_t begin = total * w / jobs;
    const std::uint64_t end = total * (w + 1) / jobs;
    Partial& p = partials[w];
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      const Graph g = prufer_decode(prufer_sequence_from_rank(rank, n), n);
      const Spectrum s = eig_symmetric<double>(laplacian(g));
      const SweepOutcome out = predicate.eval(g, s);
      if (out.applicable) ++p.applicable;
      if (out.applicable && !out.pass) {
        ++p.violations;
        if (p.ranks.size() < SweepReport::kMaxListedViolations) p.ranks.push_back(rank);
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  SweepReport report;
  report.n = n;
  report.predicate = predicate.name;
  report.total = total;
  for (const auto& p : partials) {
    report.applicable += p.applicable;
    report.violations += p.violations;
    for (std::uint64_t r : p.ranks) {
      if (report.violating_ranks.size() < SweepReport::kMaxListedViolations)
        report.violating_ranks.push_back(r);
    }
  }
  report.truncated = report.violations > report.violating_ranks.size();
  return report;
}

StarlikeSpec random_starlike_spec(std::mt19937& rng, int k_min, int k_max, int max_len) {
  std::uniform_int_distribution<int> k_dist(k_min, k_max);
  std::uniform_int_distribution<int> len_dist(1, max_len);
  const int k = k_dist(rng);
  std::vector<int> lens(k);
  for (int& len : lens) len = len_dist(rng);
  return make_starlike_spec(std::move(lens));
}

Graph random_prufer_tree(std::mt19937& rng, int n_min, int n_max) {
  std::uniform_int_distribution<int> n_dist(n_min, n_max);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> v_dist(0, n - 1);
  std::vector<int> seq(std::max(n - 2, 0));
  for (int& s : seq) s = v_dist(rng);
  return prufer_decode(seq, n);
}

PerturbationFamilySample random_perturbation_family(std::mt19937& rng, int l2_min, int l2_max) {
  const StarlikeSpec spec = random_starlike_spec(rng, 4, 7, 6);
  std::uniform_int_distribution<int> l2_dist(l2_min, l2_max);
  std::uniform_int_distribution<int> star_dist(2, 5);
  const int n1 = spec.vertex_count();
  const int l2 = l2_dist(rng);
  const int star_leaves = star_dist(rng);

  const Graph g1 = starlike(spec);
  std::vector<std::pair<int, int>> edges = g1.edges;
  const int attach = n1 - 1;  // a leaf of the last branch
  edges.emplace_back(attach, n1);
  for (int j = 0; j + 1 < l2; ++j) edges.emplace_back(n1 + j, n1 + j + 1);
  const int star_center = n1 + l2;
  edges.emplace_back(n1 + l2 - 1, star_center);
  for (int t = 1; t <= star_leaves; ++t) edges.emplace_back(star_center, star_center + t);

  PerturbationFamilySample sample;
  sample.graph = build_graph(n1 + l2 + star_leaves + 1, edges);
  for (int v = 0; v < n1; ++v) sample.partition.g1.push_back(v);
  for (int v = n1; v < n1 + l2; ++v) sample.partition.path.push_back(v);
  for (int v = n1 + l2; v < sample.graph.n; ++v) sample.partition.g3.push_back(v);
  return sample;
}

}  // namespace lapspec
