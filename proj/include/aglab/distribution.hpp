#pragma once

#include <cstdint>
#include <vector>

#include "aglab/cloud.hpp"
#include "aglab/geometry.hpp"

namespace aglab {

// Probability mass over an ordered finite atom set. Atom ids are grid cell
// ids when the distribution came from a discretization, or plain indices for
// abstract atom sets.
struct DiscreteDistribution {
  std::vector<std::int64_t> atoms;
  std::vector<double> mass;

  std::size_t size() const { return atoms.size(); }
  void validate() const;
  bool same_atoms(const DiscreteDistribution& other) const;
};

// Histogram of a weighted cloud on the grid. Every point must fall inside
// the grid domain. Atoms are the grid cells that received mass, ordered by
// cell id.
DiscreteDistribution discretize(const LabeledPointCloud& cloud, const Grid& grid);

// Cell-integrated mixture density (exact per-cell Gaussian integral via
// erf), renormalized over the grid. The grid should cover all but a
// negligible tail of the density.
DiscreteDistribution discretize(const GaussianMixtureSpec& spec, const Grid& grid);

// beta * P_d + (1 - beta) * P_g on a shared atom set.
DiscreteDistribution mixture_distribution(const DiscreteDistribution& p_d,
                                          const DiscreteDistribution& p_g, double beta);

}  // namespace aglab
