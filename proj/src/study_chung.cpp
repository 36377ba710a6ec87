#include <algorithm>
#include <cmath>

#include "aglab/graph.hpp"
#include "aglab/rng.hpp"
#include "aglab/spectral.hpp"
#include "aglab/stats.hpp"
#include "aglab/studies.hpp"
#include "aglab/studies_detail.hpp"

namespace aglab {

StudyResult run_chung_trend(const Config& cfg) {
  const auto p_grid = cfg.number_list("chung_p_grid");
  const std::int64_t trials = cfg.integer("chung_trials");
  const std::int64_t n = cfg.integer("chung_n");
  const double eps = cfg.number("chung_eps");
  const double d_min_req = static_cast<double>(cfg.integer("chung_dmin"));
  const std::uint64_t master = cfg.seed("master_seed");

  // Connected random geometric base graph with the required minimum degree;
  // resample with the next derived seed until the requirement holds.
  AugGraph base;
  std::uint64_t base_seed = 0;
  bool found = false;
  for (std::uint64_t attempt = 0; attempt < 64 && !found; ++attempt) {
    base_seed = derive_seed(master, detail::kTagBase, attempt);
    const LabeledPointCloud cloud =
        sample_uniform_square(static_cast<std::size_t>(n), base_seed);
    base = threshold_graph(cloud, eps);
    found = base.d_min >= d_min_req && component_count(base) == 1;
  }
  if (!found)
    throw ConfigError("chung-trend: could not sample a connected base graph with d_min >= " +
                      std::to_string(static_cast<std::int64_t>(d_min_req)) +
                      "; increase chung_eps or chung_n");

  const double gap_base = spectral_gap(symmetric_eigenvalues(normalized_laplacian(base)));

  StudyResult res;
  res.name = "chung-trend";
  res.table =
      CsvTable({"p", "trial", "seed", "n_nodes", "connected", "gap_subgraph", "gap_deficit"});

  std::vector<double> mean_deficit;
  std::vector<double> included_per_p;
  double min_deficit = 0.0;
  for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
    const double p = p_grid[pi];
    std::vector<double> deficits;
    for (std::int64_t t = 0; t < trials; ++t) {
      const std::uint64_t seed = derive_seed(master, detail::kTagTrial, pi, t);
      const AugGraph sub = subsample_edges(base, p, seed);
      const bool connected = sub.size() == base.size() && component_count(sub) == 1;
      double gap_sub = std::numeric_limits<double>::quiet_NaN();
      double deficit = std::numeric_limits<double>::quiet_NaN();
      if (sub.size() >= 2) {
        gap_sub = spectral_gap(symmetric_eigenvalues(normalized_laplacian(sub)));
        deficit = gap_base - gap_sub;
      }
      // Disconnected trials are reported but excluded from the gap trend:
      // their gap collapses to 0 for a reason the lemma does not cover.
      if (connected) {
        deficits.push_back(deficit);
        min_deficit = std::min(min_deficit, deficit);
      }
      res.table.add_row({format_double(p), std::to_string(t), std::to_string(seed),
                         std::to_string(sub.size()), connected ? "1" : "0",
                         format_double(gap_sub), format_double(deficit)});
    }
    mean_deficit.push_back(deficits.empty() ? std::numeric_limits<double>::quiet_NaN()
                                            : mean(deficits));
    included_per_p.push_back(static_cast<double>(deficits.size()));
  }

  // Deficit should shrink as p grows.
  {
    std::vector<double> negated;
    bool has_nan = false;
    for (double d : mean_deficit) {
      if (std::isnan(d)) has_nan = true;
      negated.push_back(-d);
    }
    if (has_nan) {
      res.assertions.push_back(detail::make_assertion(
          "deficit_nonincreasing_in_p", false, "some p has no connected trials"));
    } else {
      const TrendCheck t = check_nondecreasing(negated, 0.8);
      res.assertions.push_back(
          detail::make_assertion("deficit_nonincreasing_in_p", t.passed, t.detail));
    }
  }

  const auto p_index = [&](double p) {
    const auto it = std::find(p_grid.begin(), p_grid.end(), p);
    return it == p_grid.end() ? -1 : static_cast<int>(it - p_grid.begin());
  };
  const int i03 = p_index(0.3), i09 = p_index(0.9), i10 = p_index(1.0);
  if (i03 >= 0 && i09 >= 0) {
    const bool ok = mean_deficit[i09] < mean_deficit[i03];
    res.assertions.push_back(detail::make_assertion(
        "deficit_smaller_at_p09_than_p03", ok,
        "mean deficit p=0.9: " + format_double(mean_deficit[i09]) +
            ", p=0.3: " + format_double(mean_deficit[i03])));
  } else {
    res.assertions.push_back(detail::skip_assertion("deficit_smaller_at_p09_than_p03",
                                                    "p grid lacks 0.3 or 0.9"));
  }
  if (i10 >= 0) {
    const bool ok = mean_deficit[i10] == 0.0;
    res.assertions.push_back(detail::make_assertion(
        "deficit_zero_at_p1", ok, "mean deficit p=1: " + format_double(mean_deficit[i10])));
  } else {
    res.assertions.push_back(detail::skip_assertion("deficit_zero_at_p1", "p grid lacks 1.0"));
  }

  // Empirical observation, flagged rather than asserted: the subgraph gap
  // should not exceed the parent gap beyond numerical noise.
  res.extra["min_deficit"] = min_deficit;
  res.extra["min_deficit_flag"] = min_deficit >= -1e-8 ? "ok" : "subgraph gap exceeded parent";
  res.extra["base_seed"] = base_seed;
  res.extra["base_nodes"] = base.size();
  res.extra["base_d_min"] = base.d_min;
  res.extra["base_gap"] = gap_base;
  res.extra["mean_deficit_per_p"] = mean_deficit;
  res.extra["connected_trials_per_p"] = included_per_p;

  ChartSpec chart{"spectral-gap deficit vs edge keep probability", "p", "gap deficit", {}, {}};
  Series s{"mean deficit", {}, {}};
  s.xs = p_grid;
  s.ys = mean_deficit;
  chart.series.push_back(std::move(s));
  res.panels = {std::move(chart)};
  return res;
}

}  // namespace aglab
