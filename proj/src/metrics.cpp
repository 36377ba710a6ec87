#include "aglab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aglab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

AlphaEstimate alpha_mc(const LabeledPointCloud& cloud, const DiskAugmentation& aug,
                       const Labeler& labeler, std::int64_t m, std::uint64_t seed, Exec exec) {
  if (m < 1) throw std::invalid_argument("alpha_mc: need at least one sample per point");
  cloud.validate();
  std::vector<int> base(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) base[i] = labeler(cloud.points[i]);

  const auto flips =
      kernels::disk_label_flip_counts(cloud.points, base, aug.radius, m, seed, labeler.classify,
                                      exec);

  AlphaEstimate est;
  double var = 0.0;
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const double p_hat = static_cast<double>(flips[i]) * inv_m;
    const double w = cloud.weights[i];
    est.value += w * p_hat;
    var += w * w * p_hat * (1.0 - p_hat) * inv_m;
  }
  est.std_error = std::sqrt(var);
  return est;
}

double segment_fraction(double u) {
  if (u >= 1.0) return 0.0;
  if (u < 0.0) throw std::invalid_argument("segment_fraction: u must be >= 0");
  return (std::acos(u) - u * std::sqrt(1.0 - u * u)) / kPi;
}

double alpha_analytic(const LabeledPointCloud& cloud, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("alpha_analytic: r must be > 0");
  cloud.validate();
  double alpha = 0.0;
  for (std::size_t i = 0; i < cloud.size(); ++i)
    alpha += cloud.weights[i] * segment_fraction(std::abs(cloud.points[i].x) / r);
  return alpha;
}

double alpha_grid(const FactoredAugGraph& fg) {
  double alpha = 0.0;
  for (std::size_t i = 0; i < fg.point_masses.size(); ++i) {
    const int y = fg.point_labels[i];
    double miss = 0.0;
    for (const auto& [node, mass] : fg.point_masses[i])
      if (fg.node_labels[node] != y) miss += mass;
    alpha += fg.point_weights[i] * miss;
  }
  return alpha;
}

double phi_y(const AugGraph& g) {
  const int n = g.size();
  double phi = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (g.labels[i] != g.labels[j]) phi += g.adjacency(i, j);
  return phi;
}

double phi_y(const FactoredAugGraph& fg) {
  // Per point, the cross-label adjacency mass is 1 - sum_y (class mass)^2
  // minus nothing else: the support masses sum to 1.
  double phi = 0.0;
  std::vector<double> class_mass(fg.num_classes);
  for (std::size_t i = 0; i < fg.point_masses.size(); ++i) {
    std::fill(class_mass.begin(), class_mass.end(), 0.0);
    for (const auto& [node, mass] : fg.point_masses[i]) class_mass[fg.node_labels[node]] += mass;
    double same = 0.0;
    double total = 0.0;
    for (double cm : class_mass) {
      same += cm * cm;
      total += cm;
    }
    phi += fg.point_weights[i] * (total * total - same);
  }
  return phi;
}

double tv_distance(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (!p.same_atoms(q)) throw std::invalid_argument("tv_distance: atom-set mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.mass.size(); ++i) sum += std::abs(p.mass[i] - q.mass[i]);
  return 0.5 * sum;
}

double error_bound(double alpha, double lambda_k1, double beta, double tv) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("error_bound: alpha outside [0,1]");
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("error_bound: beta outside [0,1]");
  if (!(tv >= 0.0 && tv <= 1.0)) throw std::invalid_argument("error_bound: tv outside [0,1]");
  if (!(lambda_k1 > 0.0)) throw std::runtime_error("error_bound: vacuous bound: lambda_{k+1} = 0");
  return 8.0 * alpha / lambda_k1 + 16.0 * alpha + 2.0 * (1.0 - beta) * tv;
}

int LinearProbe::predict(const Eigen::VectorXd& f) const {
  const Eigen::VectorXd scores = weights.transpose() * f;
  int best = 0;
  for (int c = 1; c < num_classes; ++c)
    if (scores(c) > scores(best)) best = c;  // ties stay at the lowest index
  return best;
}

LinearProbe fit_probe(const Embedding& emb, const std::vector<int>& labels, int num_classes,
                      double ridge) {
  const int n = static_cast<int>(labels.size());
  const int k = emb.k;
  if (emb.features.rows() != n) throw std::invalid_argument("fit_probe: size mismatch");
  if (num_classes < 1) throw std::invalid_argument("fit_probe: need at least one class");

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(k, k);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(k, num_classes);
  for (int i = 0; i < n; ++i) {
    const double d = emb.degrees(i);
    gram.noalias() += d * emb.features.row(i).transpose() * emb.features.row(i);
    rhs.col(labels[i]) += d * emb.features.row(i).transpose();
  }
  gram.diagonal().array() += ridge;

  const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  if (ldlt.info() != Eigen::Success)
    throw std::runtime_error("fit_probe: singular system beyond ridge rescue");
  LinearProbe probe;
  probe.weights = ldlt.solve(rhs);
  probe.num_classes = num_classes;
  if (!probe.weights.allFinite())
    throw std::runtime_error("fit_probe: singular system beyond ridge rescue");
  return probe;
}

LinearProbe fit_probe(const Embedding& emb, const AugGraph& g, double ridge) {
  return fit_probe(emb, g.labels, g.num_classes, ridge);
}

LinearProbe fit_probe(const Embedding& emb, const FactoredAugGraph& fg, double ridge) {
  return fit_probe(emb, fg.node_labels, fg.num_classes, ridge);
}

VoteReport majority_vote_error(const LinearProbe& probe, const Embedding& emb,
                               const FactoredAugGraph& fg, const LabeledPointCloud& eval_cloud,
                               const DiskAugmentation& aug, const Labeler& labeler, Exec exec) {
  eval_cloud.validate();
  for (const Vec2& p : eval_cloud.points)
    if (!fg.grid.contains_disk(p, aug.radius))
      throw std::invalid_argument("majority_vote_error: augmentation leaves domain");

  std::vector<int> node_pred(fg.size());
  for (int v = 0; v < fg.size(); ++v) node_pred[v] = probe.predict(emb.features.row(v).transpose());

  std::vector<int> eval_labels(eval_cloud.size());
  for (std::size_t i = 0; i < eval_cloud.size(); ++i) eval_labels[i] = labeler(eval_cloud.points[i]);

  const auto votes = kernels::majority_votes(
      eval_cloud.points, eval_labels, aug.radius, fg.grid, fg.supersample, fg.cell_to_node,
      node_pred, probe.num_classes, exec);

  VoteReport rep;
  for (std::size_t i = 0; i < votes.size(); ++i) {
    const double w = eval_cloud.weights[i];
    if (votes[i].predicted != eval_labels[i]) rep.mv_error += w;
    rep.aug_error += w * votes[i].aug_mismatch;
  }
  return rep;
}

BoundReport make_bound_report(std::int64_t n, double r, int k, double beta, double tv,
                              const AlphaEstimate& alpha, double lambda_k1, double phi,
                              double empirical_error, std::uint64_t seed) {
  BoundReport rep;
  rep.n = n;
  rep.r = r;
  rep.k = k;
  rep.beta = beta;
  rep.tv_gap = tv;
  rep.alpha = alpha.value;
  rep.alpha_se = alpha.std_error;
  rep.lambda_k1 = lambda_k1;
  rep.phi = phi;
  rep.empirical_error = empirical_error;
  rep.bound_value = lambda_k1 > 0.0 ? error_bound(alpha.value, lambda_k1, beta, tv)
                                    : std::numeric_limits<double>::infinity();
  rep.seed = seed;
  return rep;
}

}  // namespace aglab
