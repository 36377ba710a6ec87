#pragma once

#include <string>
#include <vector>

#include "nlohmann/json.hpp"

#include "aglab/config.hpp"
#include "aglab/io.hpp"
#include "aglab/svg.hpp"

namespace aglab {

struct Assertion {
  enum class Status { Pass, Fail, Skipped };
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

struct StudyResult {
  std::string name;
  CsvTable table{std::vector<std::string>{}};
  std::vector<Assertion> assertions;
  nlohmann::ordered_json extra;   // study-specific summary fields
  std::vector<ChartSpec> panels;  // plottable curves for --svg

  bool all_passed() const;
  nlohmann::ordered_json summary(const Config& cfg) const;
};

// Theorem-1 identity: TV(P_t, P_d) = (1 - beta) TV(P_g, P_d) for random
// (P_d, P_g, beta) triples; exact up to accumulated rounding (<= 1e-12).
StudyResult run_tv_identity(const Config& cfg);

// Figure-5 panels on the two-blob toy over (data size, augmentation
// strength): connectivity and labeling-error trends plus the bound's
// optimal-r shift.
StudyResult run_figure5(const Config& cfg);

// Appendix-B style eigenvalue-vs-sampling-ratio trend on the uniform-square
// threshold graph.
StudyResult run_subsample_spectrum(const Config& cfg);

// Spectral-gap deficit of random edge subgraphs against the edge-keep
// probability, on a random geometric base graph.
StudyResult run_chung_trend(const Config& cfg);

// Theorem-2 bound validity across replication and generator-shift cells.
StudyResult run_bound_validity(const Config& cfg);

StudyResult run_study(const std::string& name, const Config& cfg);
std::vector<std::string> study_names();

}  // namespace aglab
