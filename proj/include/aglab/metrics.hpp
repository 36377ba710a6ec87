#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "aglab/distribution.hpp"
#include "aglab/graph.hpp"
#include "aglab/spectral.hpp"

namespace aglab {

struct AlphaEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Monte-Carlo labeling error: Pr[y(x) != y(xbar)] for xbar ~ cloud weights,
// x uniform in disk(xbar, r); m samples per point.
AlphaEstimate alpha_mc(const LabeledPointCloud& cloud, const DiskAugmentation& aug,
                       const Labeler& labeler, std::int64_t m, std::uint64_t seed,
                       Exec exec = Exec::Parallel);

// Closed form for the halfplane Bayes rule (boundary x = 0): per point the
// crossing probability is the circular-segment fraction
//   seg(u) = (acos(u) - u sqrt(1-u^2)) / pi,  u = |x_1| / r  (0 for u >= 1).
double alpha_analytic(const LabeledPointCloud& cloud, double r);
double segment_fraction(double u);

// Labeling error at the grid level: sum_i w_i sum_c m_i(c) 1[label(c) != y_i].
// This is the alpha the phi^y <= 2 alpha chain bounds, on the same
// discretization that built the graph.
double alpha_grid(const FactoredAugGraph& fg);

// phi^y = sum_{x,x'} A_{x,x'} 1[y(x) != y(x')].
double phi_y(const AugGraph& g);
double phi_y(const FactoredAugGraph& fg);

// 1/2 sum |P - Q| over a shared atom set.
double tv_distance(const DiscreteDistribution& p, const DiscreteDistribution& q);

// The generalization bound 8a/l + 16a + 2(1-beta) tv. l <= 0 throws
// ("vacuous bound: lambda_{k+1} = 0").
double error_bound(double alpha, double lambda_k1, double beta, double tv);

// Linear probe on frozen features, degree-weighted ridge least squares onto
// one-hot labels. Prediction: argmax of B^T f(x), ties to the lowest class.
struct LinearProbe {
  Eigen::MatrixXd weights;  // k x r
  int num_classes = 0;

  int predict(const Eigen::VectorXd& f) const;
};

LinearProbe fit_probe(const Embedding& emb, const std::vector<int>& labels, int num_classes,
                      double ridge = 1e-8);
LinearProbe fit_probe(const Embedding& emb, const AugGraph& g, double ridge = 1e-8);
LinearProbe fit_probe(const Embedding& emb, const FactoredAugGraph& fg, double ridge = 1e-8);

// Majority-vote downstream error E(f, B): each eval point is classified by
// the argmax of its augmentation mass over predicted node classes; returns
// the misclassified weight. aug_error is the augmentation-level error
// Pr_{xbar,x}(g(x) != y(xbar)) on the same discretization (off-node mass
// counts as a miss); the vote error never exceeds twice it.
struct VoteReport {
  double mv_error = 0.0;
  double aug_error = 0.0;
};

VoteReport majority_vote_error(const LinearProbe& probe, const Embedding& emb,
                               const FactoredAugGraph& fg, const LabeledPointCloud& eval_cloud,
                               const DiskAugmentation& aug, const Labeler& labeler,
                               Exec exec = Exec::Parallel);

// One experiment cell of Theorem-2 quantities.
struct BoundReport {
  std::int64_t n = 0;  // data size of the cell
  double r = 0.0;
  int k = 0;
  double beta = 1.0;
  double tv_gap = 0.0;
  double alpha = 0.0;
  double alpha_se = 0.0;
  double lambda_k1 = 0.0;
  double phi = 0.0;
  double bound_value = 0.0;  // +inf when lambda_{k+1} = 0 makes Eq. vacuous
  double empirical_error = 0.0;
  std::uint64_t seed = 0;
};

BoundReport make_bound_report(std::int64_t n, double r, int k, double beta, double tv,
                              const AlphaEstimate& alpha, double lambda_k1, double phi,
                              double empirical_error, std::uint64_t seed);

}  // namespace aglab
