#pragma once

#include <cstdint>
#include <vector>

#include "aglab/geometry.hpp"

namespace aglab {

// Isotropic Gaussian mixture over R^2; one class index per component.
struct GaussianMixtureSpec {
  std::vector<Vec2> means;
  double variance = 1.0;
  std::vector<int> class_of_component;

  void validate() const;
  int num_classes() const;

  // The two-blob toy: components at (-sep, 0) and (sep, 0), classes {0, 1}.
  static GaussianMixtureSpec two_blob(double separation = 1.0, double variance = 0.7);

  // Same mixture with every mean translated by (dx, dy).
  GaussianMixtureSpec shifted(double dx, double dy = 0.0) const;
};

// Weighted labeled samples. Weights are nonnegative and sum to 1 for any
// nonempty cloud; an empty cloud is the only case with weight sum 0.
struct LabeledPointCloud {
  std::vector<Vec2> points;
  std::vector<int> labels;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  void validate() const;
};

LabeledPointCloud sample_gaussian_mixture(const GaussianMixtureSpec& spec, std::size_t n,
                                          std::uint64_t seed);

// n i.i.d. points on [0,1]^2, single dummy class 0, uniform weights.
LabeledPointCloud sample_uniform_square(std::size_t n, std::uint64_t seed);

// Inflation mixing: real data replicated `replication` times against the
// generated data, realized as weight scaling. Real points keep their order
// and come first. beta = N*|real| / (N*|real| + |generated|).
LabeledPointCloud mix_clouds(const LabeledPointCloud& real, const LabeledPointCloud& generated,
                             std::uint64_t replication);

double mixing_beta(std::size_t n_real, std::size_t n_generated, std::uint64_t replication);

}  // namespace aglab
