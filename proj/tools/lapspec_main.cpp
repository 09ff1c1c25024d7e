// lapspec: generate graph families, compute Laplacian spectra, analyze
// localization/decay, and run the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapspec/closed_form.hpp"
#include "lapspec/report.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream iss(csv);
  std::string item;
  while (std::getline(iss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated integer list, got \"" + csv + "\"");
  return out;
}

struct GenerateOptions {
  std::string output;
  int n = 0, k = 0, m = 0, ell = 0, d = 0, length = 0, branches = 0;
  std::string branch_list, seq;
};

struct LoadedGraph {
  lapspec::Graph graph;
  std::string descriptor;
};

LoadedGraph load_graph(const std::string& path) {
  const std::string text = read_input(path);
  LoadedGraph lg{lapspec::parse_edge_list(text),
                 (path == "-" ? std::string("stdin") : path) + " fnv1a64:" + lapspec::fnv1a64_hex(text)};
  return lg;
}

std::string spectrum_csv(const lapspec::Spectrum& s, bool vectors) {
  std::ostringstream out;
  out << "index,eigenvalue";
  if (vectors)
    for (lapspec::Index k = 0; k < s.size(); ++k) out << ",phi_" << k;
  out << '\n';
  for (lapspec::Index j = 0; j < s.size(); ++j) {
    out << j << ',' << lapspec::format_double(s.eigenvalues(j));
    if (vectors)
      for (lapspec::Index k = 0; k < s.size(); ++k) out << ',' << lapspec::format_double(s.eigenvectors(j, k));
    out << '\n';
  }
  return out.str();
}

json spectrum_json(const lapspec::Spectrum& s, bool vectors) {
  json out{{"schema", lapspec::kReportSchemaVersion}};
  json vals = json::array();
  for (lapspec::Index k = 0; k < s.size(); ++k) vals.push_back(lapspec::round_significant(s.eigenvalues(k)));
  out["eigenvalues"] = vals;
  if (vectors) {
    json vecs = json::array();  // one array per eigenpair
    for (lapspec::Index k = 0; k < s.size(); ++k) {
      json col = json::array();
      for (lapspec::Index j = 0; j < s.size(); ++j) col.push_back(lapspec::round_significant(s.eigenvectors(j, k)));
      vecs.push_back(col);
    }
    out["eigenvectors"] = vecs;
  }
  return out;
}

json checks_json(const std::vector<lapspec::BoundCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back(lapspec::to_json(c));
  return arr;
}

bool all_hold(const std::vector<lapspec::BoundCheck>& checks) {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* tol = std::getenv("LAPSPEC_TOL")) {
    try {
      lapspec::set_eq_tolerance(std::stod(tol));
    } catch (const std::exception&) {
      std::cerr << "lapspec: ignoring unparsable LAPSPEC_TOL=\"" << tol << "\"\n";
    }
  }

  CLI::App app{"Graph Laplacian spectra: generators, self-contained symmetric eigensolver, "
               "localization/decay analysis, and verification suites"};
  app.require_subcommand(1);

  // ---- generate ----------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "Write a graph family as an edge list");
  gen->require_subcommand(1);
  GenerateOptions opt;

  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", opt.output, "Output file (default stdout)"); };

  auto* gen_path = gen->add_subcommand("path", "Path graph P_n");
  gen_path->add_option("--n", opt.n, "vertex count")->required();
  add_output(gen_path);

  auto* gen_star = gen->add_subcommand("star", "Star K_{1,k}");
  gen_star->add_option("--k", opt.k, "leaf count")->required();
  add_output(gen_star);

  auto* gen_starlike = gen->add_subcommand("starlike", "Starlike tree S(n1,...,nk)");
  gen_starlike->add_option("--branches", opt.branch_list, "comma-separated branch lengths")->required();
  add_output(gen_starlike);

  auto* gen_comet = gen->add_subcommand("comet", "Comet S(length,1,...,1)");
  gen_comet->add_option("--length", opt.length, "long branch length")->required();
  gen_comet->add_option("--branches", opt.branches, "total branch count (>= 3)")->required();
  add_output(gen_comet);

  auto* gen_claw = gen->add_subcommand("claw-chain", "m claws with centers joined in a path");
  gen_claw->add_option("--m", opt.m, "claw count")->required();
  add_output(gen_claw);

  auto* gen_ce = gen->add_subcommand("counterexample", "K_{1,2} chain joined to a comet via its branch");
  gen_ce->add_option("--m", opt.m, "K_{1,2} copies")->required();
  gen_ce->add_option("--l,--ell", opt.ell, "comet branch length")->required();
  add_output(gen_ce);

  auto* gen_lattice = gen->add_subcommand("lattice", "d-fold Cartesian product of P_n");
  gen_lattice->add_option("--n", opt.n, "side length")->required();
  gen_lattice->add_option("--d", opt.d, "dimension")->required();
  add_output(gen_lattice);

  auto* gen_prufer = gen->add_subcommand("prufer", "Labeled tree from a Pruefer sequence");
  gen_prufer->add_option("--seq", opt.seq, "comma-separated sequence (empty for n=2)");
  gen_prufer->add_option("--n", opt.n, "vertex count (default: sequence length + 2)");
  add_output(gen_prufer);

  // ---- spectrum ----------------------------------------------------------
  std::string spec_input, spec_format = "csv", spec_output;
  bool spec_vectors = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues (and optionally eigenvectors) of an edge list");
  spectrum_cmd->add_option("input", spec_input, "edge-list file ('-' for stdin)")->required();
  spectrum_cmd->add_option("--format", spec_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  spectrum_cmd->add_flag("--vectors", spec_vectors, "include eigenvector components");
  spectrum_cmd->add_option("-o,--output", spec_output, "output file (default stdout)");

  // ---- analyze -----------------------------------------------------------
  std::string an_input, an_output, an_plot, an_svg;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report (JSON)");
  analyze_cmd->add_option("input", an_input, "edge-list file ('-' for stdin)")->required();
  analyze_cmd->add_option("-o,--output", an_output, "report file (default stdout)");
  analyze_cmd->add_option("--plot-data", an_plot, "write index,eigenvalue CSV");
  analyze_cmd->add_option("--svg", an_svg, "write a sorted-eigenvalue SVG chart");

  // ---- verify ------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite (exit 1 on failure)");
  verify_cmd->require_subcommand(1);
  verify_cmd->fallthrough();  // accept -o/--jobs after the suite name
  std::string v_output;
  int v_jobs = 1;
  verify_cmd->add_option("-o,--output", v_output, "report file (default stdout)");
  verify_cmd->add_option("--jobs", v_jobs, "worker threads for sweep suites");

  std::string v_branches;
  int v_samples = 0;
  unsigned v_seed = 12345;
  auto* v_starlike = verify_cmd->add_subcommand("starlike-bounds", "Starlike eigenvalue bounds");
  v_starlike->add_option("--branches", v_branches, "explicit branch lengths");
  v_starlike->add_option("--samples", v_samples, "random specs to draw (default 50 when no --branches)");
  v_starlike->add_option("--seed", v_seed, "RNG seed");

  std::vector<std::string> v_inputs;
  auto* v_general = verify_cmd->add_subcommand("general-bounds", "Count/degree bounds for a connected graph");
  v_general->add_option("--input", v_inputs, "edge-list file(s)")->required();

  int v_max_n = 40;
  auto* v_guo = verify_cmd->add_subcommand("guo", "lambda_j <= ceil(n/(n-j)) for trees");
  v_guo->add_option("--input", v_inputs, "edge-list file(s) (must be trees)");
  v_guo->add_option("--samples", v_samples, "random trees to draw (default 100 when no --input)");
  v_guo->add_option("--max-n", v_max_n, "max random tree size");
  v_guo->add_option("--seed", v_seed, "RNG seed");

  auto* v_decay = verify_cmd->add_subcommand("decay", "Branch decay certificates for eigenvalues >= 4");
  v_decay->add_option("--input", v_inputs, "edge-list file(s)");
  v_decay->add_option("--samples", v_samples, "random trees to draw (default 100 when no --input)");
  v_decay->add_option("--max-n", v_max_n, "max random tree size");
  v_decay->add_option("--seed", v_seed, "RNG seed");

  int v_l2_min = 5, v_l2_max = 30;
  auto* v_pert = verify_cmd->add_subcommand("perturbation", "Subgraph eigenvalue matching across a long path");
  v_pert->add_option("--samples", v_samples, "random constructions (default 50)");
  v_pert->add_option("--l2-min", v_l2_min, "shortest path block");
  v_pert->add_option("--l2-max", v_l2_max, "longest path block");
  v_pert->add_option("--seed", v_seed, "RNG seed");

  int v_n = 8;
  std::string v_predicate = "eig4-claws";
  auto* v_sweep = verify_cmd->add_subcommand("prufer-sweep", "Exhaustive labeled-tree sweep");
  v_sweep->add_option("--n", v_n, "vertex count (2..9)")->required();
  v_sweep->add_option("--predicate", v_predicate, "eig4-claws|eig4-iff-claws|count-bound|guo|eig4-structure")
      ->check(CLI::IsMember({"eig4-claws", "eig4-iff-claws", "count-bound", "guo", "eig4-structure"}));

  int v_d = 2;
  auto* v_lattice = verify_cmd->add_subcommand("lattice-mult", "Multiplicity of eigenvalue 4 on a lattice");
  v_lattice->add_option("--n", v_n, "side length")->required();
  v_lattice->add_option("--d", v_d, "dimension")->required();

  int v_m = 5, v_ell = 5;
  bool v_strict = false;
  auto* v_counter = verify_cmd->add_subcommand("counterexample", "Top-eigenvector localization vs highest degree");
  v_counter->add_option("--m", v_m, "K_{1,2} copies")->required();
  v_counter->add_option("--l,--ell", v_ell, "comet branch length")->required();
  v_counter->add_flag("--strict", v_strict, "assert the verdict even below the m,l >= 5 regime");

  std::string v_eig4_input;
  int v_claw_chain = 0;
  auto* v_eig4 = verify_cmd->add_subcommand("eig4-structure", "Trees with eigenvalue 4: multiplicity 1 and 4 | n");
  v_eig4->add_option("--input", v_eig4_input, "edge-list file");
  v_eig4->add_option("--claw-chain", v_claw_chain, "use claw_chain(m) instead of a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/error text
    return e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ? kExitOk : kExitUsage;
  }

  try {
    // ---- generate ----
    if (gen->parsed()) {
      lapspec::Graph g;
      std::string label;
      if (gen_path->parsed()) {
        g = lapspec::path(opt.n);
        label = "path n=" + std::to_string(opt.n);
      } else if (gen_star->parsed()) {
        g = lapspec::star(opt.k);
        label = "star k=" + std::to_string(opt.k);
      } else if (gen_starlike->parsed()) {
        g = lapspec::starlike(lapspec::make_starlike_spec(parse_int_list(opt.branch_list)));
        label = "starlike " + opt.branch_list;
      } else if (gen_comet->parsed()) {
        g = lapspec::comet(opt.length, opt.branches);
        label = "comet length=" + std::to_string(opt.length) + " branches=" + std::to_string(opt.branches);
      } else if (gen_claw->parsed()) {
        g = lapspec::claw_chain(opt.m);
        label = "claw-chain m=" + std::to_string(opt.m);
      } else if (gen_ce->parsed()) {
        g = lapspec::counterexample_graph(opt.m, opt.ell);
        label = "counterexample m=" + std::to_string(opt.m) + " l=" + std::to_string(opt.ell);
      } else if (gen_lattice->parsed()) {
        g = lapspec::lattice(opt.n, opt.d);
        label = "lattice n=" + std::to_string(opt.n) + " d=" + std::to_string(opt.d);
      } else {
        std::vector<int> seq = opt.seq.empty() ? std::vector<int>{} : parse_int_list(opt.seq);
        const int n = opt.n > 0 ? opt.n : static_cast<int>(seq.size()) + 2;
        g = lapspec::prufer_decode(seq, n);
        label = "prufer n=" + std::to_string(n);
      }
      write_output(lapspec::serialize_edge_list(g), opt.output);
      std::cerr << label << ": n=" << g.n << " m=" << g.edge_count() << '\n';
      return kExitOk;
    }

    // ---- spectrum ----
    if (spectrum_cmd->parsed()) {
      const LoadedGraph lg = load_graph(spec_input);
      const lapspec::Spectrum s = lapspec::eig_symmetric<double>(lapspec::laplacian(lg.graph));
      if (spec_format == "csv")
        write_output(spectrum_csv(s, spec_vectors), spec_output);
      else
        write_output(spectrum_json(s, spec_vectors).dump(2) + "\n", spec_output);
      return kExitOk;
    }

    // ---- analyze ----
    if (analyze_cmd->parsed()) {
      const LoadedGraph lg = load_graph(an_input);
      const lapspec::Spectrum s = lapspec::eig_symmetric<double>(lapspec::laplacian(lg.graph));
      const lapspec::AnalysisReport report = lapspec::analyze(lg.graph, s, lg.descriptor);
      write_output(lapspec::to_json(report).dump(2) + "\n", an_output);
      if (!an_plot.empty()) write_output(spectrum_csv(s, false), an_plot);
      if (!an_svg.empty()) write_output(lapspec::eigenvalues_svg(report.eigenvalues), an_svg);
      return kExitOk;
    }

    // ---- verify ----
    json out{{"schema", lapspec::kReportSchemaVersion}};
    bool passed = true;

    if (v_starlike->parsed()) {
      out["suite"] = "starlike-bounds";
      json results = json::array();
      auto run_spec = [&](const lapspec::StarlikeSpec& spec) {
        const lapspec::Spectrum s = lapspec::eig_symmetric<double>(lapspec::laplacian(lapspec::starlike(spec)));
        const auto checks = lapspec::check_starlike_bounds(spec, s);
        passed = passed && all_hold(checks);
        results.push_back(checks_json(checks));
      };
      if (!v_branches.empty()) {
        run_spec(lapspec::make_starlike_spec(parse_int_list(v_branches)));
      } else {
        const int samples = v_samples > 0 ? v_samples : 50;
        std::mt19937 rng(v_seed);
        for (int i = 0; i < samples; ++i) run_spec(lapspec::random_starlike_spec(rng, 3, 8, 12));
        out["samples"] = samples;
        out["seed"] = v_seed;
      }
      out["results"] = results;
    } else if (v_general->parsed()) {
      out["suite"] = "general-bounds";
      json results = json::array();
      for (const auto& input : v_inputs) {
        const LoadedGraph lg = load_graph(input);
        const lapspec::Spectrum s = lapspec::eig_symmetric<double>(lapspec::laplacian(lg.graph));
        const auto checks = lapspec::check_general_bounds(lg.graph, s);
        passed = passed && all_hold(checks);
        results.push_back({{"input", lg.descriptor}, {"checks", checks_json(checks)}});
      }
      out["results"] = results;
    } else if (v_guo->parsed() || v_decay->parsed()) {
      const bool decay_suite = v_decay->parsed();
      out["suite"] = decay_suite ? "decay" : "guo";
      std::vector<LoadedGraph> graphs;
      if (!v_inputs.empty()) {
        for (const auto& input : v_inputs) graphs.push_back(load_graph(input));
      } else {
        const int samples = v_samples > 0 ? v_samples : 100;
        std::mt19937 rng(v_seed);
        for (int i = 0; i < samples; ++i)
          graphs.push_back({lapspec::random_prufer_tree(rng, 4, v_max_n), "random-tree " + std::to_string(i)});
        out["samples"] = samples;
        out["seed"] = v_seed;
      }
      json results = json::array();
      for (const auto& lg : graphs) {
        const lapspec::Spectrum s = lapspec::eig_symmetric<double>(lapspec::laplacian(lg.graph));
        if (decay_suite) {
          const auto branches = lapspec::branching_paths(lg.graph);
          int certificates = 0, failures = 0;
          for (int k = 0; k < s.size(); ++k) {
            const double lam = s.eigenvalues(k);
            if (lam < 4.0 && !lapspec::eigenvalues_equal(4.0, lam)) continue;
            for (const auto& b : branches) {
              ++certificates;
              if (!lapspec::verify_decay(s, k, b).pass) ++failures;
            }
          }
          passed = passed && failures == 0;
          results.push_back({{"input", lg.descriptor}, {"certificates", certificates}, {"failures", failures}});
        } else {
          if (!lapspec::is_tree(lg.graph)) throw std::invalid_argument("guo: input is not a tree: " + lg.descriptor);
          const auto checks = lapspec::check_guo(s, lg.graph.n);
          int failures = 0;
          for (const auto& c : checks)
            if (!c.holds) ++failures;
          passed = passed && failures == 0;
          results.push_back({{"input", lg.descriptor}, {"checks", static_cast<int>(checks.size())}, {"failures", failures}});
        }
      }
      out["results"] = results;
    } else if (v_pert->parsed()) {
      out["suite"] = "perturbation";
      const int samples = v_samples > 0 ? v_samples : 50;
      std::mt19937 rng(v_seed);
      json results = json::array();
      for (int i = 0; i < samples; ++i) {
        const auto sample = lapspec::random_perturbation_family(rng, v_l2_min, v_l2_max);
        const auto setup = lapspec::perturbation_check(sample.graph, sample.partition);
        passed = passed && setup.holds;
        results.push_back(lapspec::to_json(setup));
      }
      out["samples"] = samples;
      out["seed"] = v_seed;
      out["results"] = results;
    } else if (v_sweep->parsed()) {
      out["suite"] = "prufer-sweep";
      lapspec::SweepPredicate pred;
      if (v_predicate == "eig4-claws")
        pred = lapspec::predicate_eig4_claw_spanned();
      else if (v_predicate == "eig4-iff-claws")
        pred = lapspec::predicate_eig4_iff_claw_spanned();
      else if (v_predicate == "count-bound")
        pred = lapspec::predicate_count_bound();
      else if (v_predicate == "guo")
        pred = lapspec::predicate_guo();
      else
        pred = lapspec::predicate_eig4_structure();
      const auto report = lapspec::enumerate_prufer_sweep(v_n, pred, v_jobs);
      passed = report.violations == 0;
      out["report"] = lapspec::to_json(report);
    } else if (v_lattice->parsed()) {
      out["suite"] = "lattice-mult";
      const std::uint64_t count = lapspec::lattice_multiplicity_4(v_n, v_d);
      out["n"] = v_n;
      out["d"] = v_d;
      out["count"] = count;
      if (v_d == 1) {
        out["expected"] = 0;
        passed = count == 0;
      } else if (v_d == 2) {
        out["expected"] = v_n - 1;
        passed = count == static_cast<std::uint64_t>(v_n - 1);
      }
      // d >= 3: reported without a closed-form expectation
    } else if (v_counter->parsed()) {
      out["suite"] = "counterexample";
      const auto check = lapspec::verify_counterexample(v_m, v_ell);
      const bool asserted = (v_m >= 5 && v_ell >= 5) || v_strict;
      out["check"] = lapspec::to_json(check);
      out["asserted"] = asserted;
      passed = !asserted || check.holds;
    } else if (v_eig4->parsed()) {
      out["suite"] = "eig4-structure";
      LoadedGraph lg;
      if (v_claw_chain > 0) {
        lg = {lapspec::claw_chain(v_claw_chain), "claw-chain m=" + std::to_string(v_claw_chain)};
      } else if (!v_eig4_input.empty()) {
        lg = load_graph(v_eig4_input);
      } else {
        throw std::invalid_argument("eig4-structure: provide --input or --claw-chain");
      }
      const lapspec::Spectrum s = lapspec::eig_symmetric<double>(lapspec::laplacian(lg.graph));
      const auto check = lapspec::verify_eigenvalue4_structure(lg.graph, s);
      out["input"] = lg.descriptor;
      out["check"] = lapspec::to_json(check);
      passed = check.holds;
    }

    out["passed"] = passed;
    write_output(out.dump(2) + "\n", v_output);
    return passed ? kExitOk : kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lapspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "lapspec: " << e.what() << '\n';
    return kExitUsage;
  }
}
