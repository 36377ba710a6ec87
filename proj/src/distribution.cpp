#include "aglab/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace aglab {

void DiscreteDistribution::validate() const {
  if (mass.size() != atoms.size())
    throw std::invalid_argument("DiscreteDistribution: field sizes disagree");
  double sum = 0.0, carry = 0.0;
  for (double m : mass) {
    if (!(m >= 0.0)) throw std::invalid_argument("DiscreteDistribution: negative mass");
    const double y = m - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("DiscreteDistribution: mass must sum to 1");
}

bool DiscreteDistribution::same_atoms(const DiscreteDistribution& other) const {
  return atoms == other.atoms;
}

DiscreteDistribution discretize(const LabeledPointCloud& cloud, const Grid& grid) {
  cloud.validate();
  // Atoms are all grid cells so histograms of different clouds on one grid
  // share an atom set.
  DiscreteDistribution out;
  out.atoms.resize(grid.cell_count());
  for (std::int64_t id = 0; id < grid.cell_count(); ++id) out.atoms[id] = id;
  out.mass.assign(grid.cell_count(), 0.0);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    std::int64_t cell;
    try {
      cell = grid.locate(cloud.points[i]);
    } catch (const std::out_of_range&) {
      throw std::out_of_range("discretize: point out of domain");
    }
    out.mass[cell] += cloud.weights[i];
  }
  return out;
}

namespace {
double normal_cdf(double x, double mu, double sigma) {
  return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}
}  // namespace

DiscreteDistribution discretize(const GaussianMixtureSpec& spec, const Grid& grid) {
  spec.validate();
  const double sigma = std::sqrt(spec.variance);
  const double comp_w = 1.0 / static_cast<double>(spec.means.size());

  DiscreteDistribution out;
  out.atoms.reserve(grid.cell_count());
  out.mass.reserve(grid.cell_count());
  double total = 0.0;
  for (std::int64_t id = 0; id < grid.cell_count(); ++id) {
    const Vec2 o = grid.cell_origin(id);
    const double h = grid.cell_size();
    double m = 0.0;
    // Isotropic Gaussians factor per axis, so the cell integral is a
    // product of 1-D cdf differences.
    for (const Vec2& mean : spec.means) {
      const double px = normal_cdf(o.x + h, mean.x, sigma) - normal_cdf(o.x, mean.x, sigma);
      const double py = normal_cdf(o.y + h, mean.y, sigma) - normal_cdf(o.y, mean.y, sigma);
      m += comp_w * px * py;
    }
    out.atoms.push_back(id);
    out.mass.push_back(m);
    total += m;
  }
  if (!(total > 0.0)) throw std::invalid_argument("discretize: grid misses the density");
  for (double& m : out.mass) m /= total;  // renormalize the truncated tails
  return out;
}

DiscreteDistribution mixture_distribution(const DiscreteDistribution& p_d,
                                          const DiscreteDistribution& p_g, double beta) {
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("mixture_distribution: beta outside [0,1]");
  if (!p_d.same_atoms(p_g)) throw std::invalid_argument("mixture_distribution: atom-set mismatch");
  DiscreteDistribution out;
  out.atoms = p_d.atoms;
  out.mass.resize(p_d.mass.size());
  for (std::size_t i = 0; i < out.mass.size(); ++i)
    out.mass[i] = beta * p_d.mass[i] + (1.0 - beta) * p_g.mass[i];
  return out;
}

}  // namespace aglab
