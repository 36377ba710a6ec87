#include <algorithm>
#include <cmath>

#include "aglab/distribution.hpp"
#include "aglab/metrics.hpp"
#include "aglab/rng.hpp"
#include "aglab/studies.hpp"
#include "aglab/studies_detail.hpp"

namespace aglab {

namespace {

DiscreteDistribution random_distribution(std::mt19937_64& rng, std::int64_t atoms) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  DiscreteDistribution d;
  d.atoms.resize(atoms);
  d.mass.resize(atoms);
  double total = 0.0;
  for (std::int64_t i = 0; i < atoms; ++i) {
    d.atoms[i] = i;
    d.mass[i] = unit(rng);
    total += d.mass[i];
  }
  for (double& m : d.mass) m /= total;
  return d;
}

}  // namespace

StudyResult run_tv_identity(const Config& cfg) {
  const std::int64_t trials = cfg.integer("tv_trials");
  const std::int64_t atoms = cfg.integer("tv_atoms");
  if (atoms < 2) throw ConfigError("tv_atoms must be >= 2");
  const std::uint64_t master = cfg.seed("master_seed");

  StudyResult res;
  res.name = "tv-identity";
  res.table = CsvTable({"trial", "beta", "tv_gd", "tv_td", "residual"});

  double max_residual = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    auto rng = make_rng(derive_seed(master, detail::kTagTrial, static_cast<std::uint64_t>(t)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const DiscreteDistribution p_d = random_distribution(rng, atoms);
    const DiscreteDistribution p_g = random_distribution(rng, atoms);
    // First two trials pin the degenerate mixing ratios.
    const double beta = t == 0 ? 0.0 : t == 1 ? 1.0 : unit(rng);

    const DiscreteDistribution p_t = mixture_distribution(p_d, p_g, beta);
    const double tv_gd = tv_distance(p_g, p_d);
    const double tv_td = tv_distance(p_t, p_d);
    const double residual = std::abs(tv_td - (1.0 - beta) * tv_gd);
    max_residual = std::max(max_residual, residual);

    res.table.add_row({std::to_string(t), format_double(beta), format_double(tv_gd),
                       format_double(tv_td), format_double(residual)});
  }

  res.assertions.push_back(detail::make_assertion(
      "tv_identity_exact", max_residual <= 1e-12,
      "max |TV(P_t,P_d) - (1-beta) TV(P_g,P_d)| = " + format_double(max_residual) +
          " (budget 1e-12)"));
  res.extra["max_residual"] = max_residual;
  res.extra["trials"] = trials;
  res.extra["atoms"] = atoms;
  return res;
}

}  // namespace aglab
