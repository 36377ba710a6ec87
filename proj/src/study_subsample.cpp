#include <algorithm>
#include <cmath>

#include "aglab/graph.hpp"
#include "aglab/rng.hpp"
#include "aglab/spectral.hpp"
#include "aglab/stats.hpp"
#include "aglab/studies.hpp"
#include "aglab/studies_detail.hpp"

namespace aglab {

StudyResult run_subsample_spectrum(const Config& cfg) {
  const auto ratios = cfg.number_list("ratio_grid");
  const std::int64_t trials = cfg.integer("trials");
  const std::int64_t n_points = cfg.integer("subsample_n");
  const double eps = cfg.number("threshold_eps");
  const int want = static_cast<int>(cfg.integer("spectrum_count"));
  const std::uint64_t master = cfg.seed("master_seed");

  const LabeledPointCloud cloud = sample_uniform_square(
      static_cast<std::size_t>(n_points), derive_seed(master, detail::kTagCloud));
  const AugGraph full = threshold_graph(cloud, eps);
  const Eigen::VectorXd full_ev = symmetric_eigenvalues(normalized_laplacian(full));

  StudyResult res;
  res.name = "subsample-spectrum";
  std::vector<std::string> header{"ratio", "trial", "seed", "n_nodes", "isolated_dropped"};
  for (int i = 1; i <= want; ++i) header.push_back("lambda_" + std::to_string(i));
  res.table = CsvTable(header);

  std::vector<double> mean_tail_per_ratio;  // mean of lambda_2..lambda_want over trials
  double max_lambda1 = 0.0;
  std::int64_t resampled = 0;

  for (std::size_t ri = 0; ri < ratios.size(); ++ri) {
    const double ratio = ratios[ri];
    std::vector<double> tail_means;
    for (std::int64_t t = 0; t < trials; ++t) {
      Eigen::VectorXd ev;
      std::int64_t n_nodes = 0, dropped = 0;
      std::uint64_t used_seed = 0;
      if (ratio >= 1.0) {
        ev = full_ev;
        n_nodes = full.size();
        dropped = full.dropped_nodes;
      } else {
        // Empty subgraphs are resampled with the next derived seed.
        for (std::uint64_t attempt = 0;; ++attempt) {
          used_seed = derive_seed(master, detail::kTagTrial, ri * 1000 + t, attempt);
          try {
            const AugGraph sub = subsample_vertices(full, ratio, used_seed);
            ev = symmetric_eigenvalues(normalized_laplacian(sub));
            n_nodes = sub.size();
            dropped = sub.dropped_nodes;
            break;
          } catch (const std::runtime_error&) {
            ++resampled;
            if (attempt > 50) throw;
          }
        }
      }

      std::vector<std::string> row{format_double(ratio), std::to_string(t),
                                   std::to_string(used_seed), std::to_string(n_nodes),
                                   std::to_string(dropped)};
      const int avail = std::min<int>(want, static_cast<int>(ev.size()));
      double tail_sum = 0.0;
      for (int i = 0; i < want; ++i)
        row.push_back(i < avail ? format_double(ev(i)) : "nan");
      for (int i = 1; i < avail; ++i) tail_sum += ev(i);
      tail_means.push_back(avail > 1 ? tail_sum / (avail - 1) : 0.0);
      if (ev.size() > 0) max_lambda1 = std::max(max_lambda1, std::abs(ev(0)));
      res.table.add_row(std::move(row));
    }
    mean_tail_per_ratio.push_back(mean(tail_means));
  }

  const TrendCheck trend = check_nondecreasing(mean_tail_per_ratio, 0.9);
  res.assertions.push_back(detail::make_assertion(
      "mean_eigenvalue_nondecreasing_in_ratio", trend.passed, trend.detail));
  res.assertions.push_back(detail::make_assertion(
      "lambda1_zero", max_lambda1 <= 1e-8,
      "max |lambda_1| over subgraphs = " + format_double(max_lambda1) + " (budget 1e-8)"));

  res.extra["mean_lambda_tail_per_ratio"] = mean_tail_per_ratio;
  res.extra["full_graph_nodes"] = full.size();
  res.extra["full_graph_isolated_dropped"] = full.dropped_nodes;
  res.extra["empty_subgraph_resamples"] = resampled;

  ChartSpec chart{"mean of lambda_2..lambda_" + std::to_string(want) + " vs sampling ratio",
                  "sampling ratio", "mean eigenvalue", {}, {}};
  Series s{"mean", {}, {}};
  s.xs = ratios;
  s.ys = mean_tail_per_ratio;
  chart.series.push_back(std::move(s));
  res.panels = {std::move(chart)};
  return res;
}

}  // namespace aglab
