#include "lapspec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace lapspec {

double round_significant(double x, int digits) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::string format_double(double x, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

bool AnalysisReport::all_checks_hold() const {
  return std::all_of(bound_checks.begin(), bound_checks.end(), [](const BoundCheck& c) { return c.holds; }) &&
         std::all_of(decay.begin(), decay.end(), [](const DecayEntry& d) { return d.pass; });
}

namespace {

// A starlike tree exposes its spec through its unique junction's branches.
std::optional<StarlikeSpec> detect_starlike(const Graph& g) {
  if (!is_tree(g)) return std::nullopt;
  const int high = static_cast<int>(std::count_if(g.degrees.begin(), g.degrees.end(), [](int d) { return d > 2; }));
  if (high != 1) return std::nullopt;
  std::vector<int> lengths;
  for (const BranchPath& b : branching_paths(g)) lengths.push_back(b.length());
  StarlikeSpec spec = make_starlike_spec(std::move(lengths));
  return spec.vertex_count() == g.n ? std::optional<StarlikeSpec>(spec) : std::nullopt;
}

}  // namespace

AnalysisReport analyze(const Graph& g, const Spectrum& s, std::string descriptor) {
  AnalysisReport r;
  r.descriptor = std::move(descriptor);
  r.n = g.n;
  r.edge_count = g.edge_count();
  r.tree = is_tree(g);
  for (int d : g.degrees) ++r.degree_histogram[d];
  r.eigenvalues.assign(s.eigenvalues.data(), s.eigenvalues.data() + s.size());
  r.count_ge_4 = count_at_least(s, 4.0);
  r.multiplicity_4 = multiplicity(s, 4.0);
  if (r.tree) r.starlikeliness_value = starlikeliness(g, s);

  const auto branches = branching_paths(g);
  for (int k = 0; k < s.size(); ++k) {
    const double lam = s.eigenvalues(k);
    if (lam < 4.0 && !eigenvalues_equal(4.0, lam)) continue;
    const Localization loc = localization_vertex(s, k);
    r.localization.push_back({k, lam, loc.vertex, g.degrees[loc.vertex], loc.margin, loc.tied});
    for (const BranchPath& b : branches) {
      const DecayCertificate cert = verify_decay(s, k, b);
      r.decay.push_back({k, lam, b.junction, b.vertices, cert.gamma, cert.pass, cert.strict, cert.zero_branch});
    }
  }

  if (is_connected(g)) {
    for (auto& c : check_general_bounds(g, s)) r.bound_checks.push_back(std::move(c));
  }
  if (r.tree) {
    for (auto& c : check_guo(s, g.n)) r.bound_checks.push_back(std::move(c));
    if (auto spec = detect_starlike(g)) {
      for (auto& c : check_starlike_bounds(*spec, s)) r.bound_checks.push_back(std::move(c));
    }
    if (r.multiplicity_4 > 0) r.bound_checks.push_back(verify_eigenvalue4_structure(g, s));
  }
  return r;
}

namespace {

nlohmann::json rounded(double x) { return round_significant(x); }

nlohmann::json rounded_list(const std::vector<double>& xs) {
  nlohmann::json arr = nlohmann::json::array();
  for (double x : xs) arr.push_back(rounded(x));
  return arr;
}

}  // namespace

nlohmann::json to_json(const BoundCheck& c) {
  return {{"name", c.name},   {"lhs", rounded(c.lhs)},       {"rhs", rounded(c.rhs)},
          {"holds", c.holds}, {"margin", rounded(c.margin)}, {"context", c.context}};
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json histogram = nlohmann::json::array();
  for (const auto& [deg, count] : r.degree_histogram) histogram.push_back({deg, count});

  nlohmann::json localization = nlohmann::json::array();
  for (const auto& e : r.localization)
    localization.push_back({{"k", e.k},
                            {"lambda", rounded(e.lambda)},
                            {"vertex", e.vertex},
                            {"degree", e.degree},
                            {"margin", rounded(e.margin)},
                            {"tied", e.tied}});

  nlohmann::json decay = nlohmann::json::array();
  for (const auto& e : r.decay)
    decay.push_back({{"k", e.k},
                     {"lambda", rounded(e.lambda)},
                     {"junction", e.junction},
                     {"branch", e.branch},
                     {"gamma", rounded(e.gamma)},
                     {"pass", e.pass},
                     {"strict", e.strict},
                     {"zero_branch", e.zero_branch}});

  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.bound_checks) checks.push_back(to_json(c));

  nlohmann::json out{{"schema", kReportSchemaVersion},
                     {"descriptor", r.descriptor},
                     {"n", r.n},
                     {"edge_count", r.edge_count},
                     {"tree", r.tree},
                     {"degree_histogram", histogram},
                     {"eigenvalues", rounded_list(r.eigenvalues)},
                     {"count_ge_4", r.count_ge_4},
                     {"multiplicity_4", r.multiplicity_4},
                     {"localization", localization},
                     {"decay", decay},
                     {"bound_checks", checks},
                     {"all_checks_hold", r.all_checks_hold()}};
  if (r.starlikeliness_value) out["starlikeliness"] = rounded(*r.starlikeliness_value);
  return out;
}

nlohmann::json to_json(const SweepReport& r) {
  return {{"schema", kReportSchemaVersion},
          {"n", r.n},
          {"predicate", r.predicate},
          {"total", r.total},
          {"applicable", r.applicable},
          {"violations", r.violations},
          {"violating_ranks", r.violating_ranks},
          {"truncated", r.truncated},
          {"passed", r.violations == 0}};
}

nlohmann::json to_json(const PerturbationSetup& p) {
  return {{"schema", kReportSchemaVersion},
          {"l1", p.l1},
          {"l2", p.l2},
          {"l3", p.l3},
          {"lambda_tilde", rounded(p.lambda_tilde)},
          {"gamma_tilde", rounded(p.gamma_tilde)},
          {"bound", rounded(p.bound)},
          {"matched_lambda", rounded(p.matched_lambda)},
          {"gap", rounded(p.gap)},
          {"holds", p.holds}};
}

std::string eigenvalues_svg(const std::vector<double>& eigenvalues) {
  const int width = 640, height = 400, margin = 48;
  const int pw = width - 2 * margin, ph = height - 2 * margin;
  const std::size_t n = eigenvalues.size();
  double lo = 0.0, hi = 4.0;
  for (double v : eigenvalues) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi <= lo) hi = lo + 1.0;

  auto sx = [&](double i) { return margin + (n > 1 ? pw * i / (n - 1) : pw / 2.0); };
  auto sy = [&](double v) { return height - margin - ph * (v - lo) / (hi - lo); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  if (lo <= 4.0 && 4.0 <= hi) {
    svg << "<line x1=\"" << margin << "\" y1=\"" << sy(4.0) << "\" x2=\"" << width - margin << "\" y2=\"" << sy(4.0)
        << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
    svg << "<text x=\"" << width - margin + 4 << "\" y=\"" << sy(4.0) + 4 << "\" font-size=\"12\">4</text>\n";
  }
  svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) svg << ' ';
    svg << format_double(sx(static_cast<double>(i)), 6) << ',' << format_double(sy(eigenvalues[i]), 6);
  }
  svg << "\"/>\n";
  svg << "<text x=\"" << margin << "\" y=\"" << margin - 8 << "\" font-size=\"12\">max "
      << format_double(hi, 6) << "</text>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 12 << "\" font-size=\"12\" text-anchor=\"middle\">"
      << "eigenvalue index</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace lapspec
