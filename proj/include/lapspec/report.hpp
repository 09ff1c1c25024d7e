#ifndef LAPSPEC_REPORT_HPP
#define LAPSPEC_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lapspec/verify.hpp"

namespace lapspec {

inline constexpr int kReportSchemaVersion = 1;

// Shortest decimal capped at 12 significant digits; keeps JSON/CSV output
// diff-stable.
double round_significant(double x, int digits = 12);
std::string format_double(double x, int digits = 12);

// FNV-1a 64-bit, used as an input-file digest in report descriptors.
std::string fnv1a64_hex(const std::string& bytes);

struct LocalizationEntry {
  int k;
  double lambda;
  int vertex;
  int degree;
  double margin;
  bool tied;
};

struct DecayEntry {
  int k;
  double lambda;
  int junction;
  std::vector<int> branch;
  double gamma;
  bool pass;
  bool strict;
  bool zero_branch;
};

// Per-graph summary: counts, starlikeliness, localization of every eigenpair
// at or above 4, decay certificates along every branching path, and the
// applicable bound checks.
struct AnalysisReport {
  std::string descriptor;
  int n = 0;
  int edge_count = 0;
  bool tree = false;
  std::map<int, int> degree_histogram;
  std::vector<double> eigenvalues;
  int count_ge_4 = 0;
  int multiplicity_4 = 0;
  std::optional<double> starlikeliness_value;
  std::vector<LocalizationEntry> localization;
  std::vector<DecayEntry> decay;
  std::vector<BoundCheck> bound_checks;

  bool all_checks_hold() const;
};

AnalysisReport analyze(const Graph& g, const Spectrum& s, std::string descriptor);

nlohmann::json to_json(const BoundCheck& c);
nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const SweepReport& r);
nlohmann::json to_json(const PerturbationSetup& p);

// Sorted-eigenvalue line chart (index vs eigenvalue) with a guide at 4.
std::string eigenvalues_svg(const std::vector<double>& eigenvalues);

}  // namespace lapspec

#endif
