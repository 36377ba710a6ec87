#include "aglab/cloud.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aglab/rng.hpp"

namespace aglab {

void GaussianMixtureSpec::validate() const {
  if (means.empty()) throw std::invalid_argument("GaussianMixtureSpec: no components");
  if (!(variance > 0.0)) throw std::invalid_argument("GaussianMixtureSpec: variance must be > 0");
  if (class_of_component.size() != means.size())
    throw std::invalid_argument("GaussianMixtureSpec: class list size mismatch");
  const int max_cls = *std::max_element(class_of_component.begin(), class_of_component.end());
  std::vector<bool> seen(max_cls + 1, false);
  for (int c : class_of_component) {
    if (c < 0) throw std::invalid_argument("GaussianMixtureSpec: negative class index");
    seen[c] = true;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("GaussianMixtureSpec: class indices not contiguous from 0");
}

int GaussianMixtureSpec::num_classes() const {
  return 1 + *std::max_element(class_of_component.begin(), class_of_component.end());
}

GaussianMixtureSpec GaussianMixtureSpec::two_blob(double separation, double variance) {
  GaussianMixtureSpec spec;
  spec.means = {{-separation, 0.0}, {separation, 0.0}};
  spec.variance = variance;
  spec.class_of_component = {0, 1};
  return spec;
}

GaussianMixtureSpec GaussianMixtureSpec::shifted(double dx, double dy) const {
  GaussianMixtureSpec out = *this;
  for (Vec2& m : out.means) {
    m.x += dx;
    m.y += dy;
  }
  return out;
}

void LabeledPointCloud::validate() const {
  if (labels.size() != points.size() || weights.size() != points.size())
    throw std::invalid_argument("LabeledPointCloud: field sizes disagree");
  if (points.empty()) return;
  // Kahan summation: the 1e-12 budget is about the weights, not about
  // rounding drift across hundreds of thousands of terms.
  double sum = 0.0, carry = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("LabeledPointCloud: negative weight");
    const double y = w - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("LabeledPointCloud: weights must sum to 1");
}

LabeledPointCloud sample_gaussian_mixture(const GaussianMixtureSpec& spec, std::size_t n,
                                          std::uint64_t seed) {
  spec.validate();
  LabeledPointCloud cloud;
  cloud.points.reserve(n);
  cloud.labels.reserve(n);
  cloud.weights.assign(n, n > 0 ? 1.0 / static_cast<double>(n) : 0.0);

  auto rng = make_rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, spec.means.size() - 1);
  std::normal_distribution<double> gauss(0.0, std::sqrt(spec.variance));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = pick(rng);
    const double dx = gauss(rng);
    const double dy = gauss(rng);
    cloud.points.push_back({spec.means[c].x + dx, spec.means[c].y + dy});
    cloud.labels.push_back(spec.class_of_component[c]);
  }
  return cloud;
}

LabeledPointCloud sample_uniform_square(std::size_t n, std::uint64_t seed) {
  LabeledPointCloud cloud;
  cloud.points.reserve(n);
  cloud.labels.assign(n, 0);
  cloud.weights.assign(n, n > 0 ? 1.0 / static_cast<double>(n) : 0.0);
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = unit(rng);
    const double y = unit(rng);
    cloud.points.push_back({x, y});
  }
  return cloud;
}

double mixing_beta(std::size_t n_real, std::size_t n_generated, std::uint64_t replication) {
  const double weighted_real = static_cast<double>(replication) * static_cast<double>(n_real);
  return weighted_real / (weighted_real + static_cast<double>(n_generated));
}

LabeledPointCloud mix_clouds(const LabeledPointCloud& real, const LabeledPointCloud& generated,
                             std::uint64_t replication) {
  if (replication < 1) throw std::invalid_argument("mix_clouds: replication must be >= 1");
  if (real.empty() && generated.empty()) throw std::invalid_argument("mix_clouds: empty mixture");
  real.validate();
  generated.validate();

  const double beta = mixing_beta(real.size(), generated.size(), replication);
  LabeledPointCloud out;
  out.points.reserve(real.size() + generated.size());
  out.labels.reserve(real.size() + generated.size());
  out.weights.reserve(real.size() + generated.size());

  for (std::size_t i = 0; i < real.size(); ++i) {
    out.points.push_back(real.points[i]);
    out.labels.push_back(real.labels[i]);
    out.weights.push_back(beta * real.weights[i]);
  }
  for (std::size_t i = 0; i < generated.size(); ++i) {
    out.points.push_back(generated.points[i]);
    out.labels.push_back(generated.labels[i]);
    out.weights.push_back((1.0 - beta) * generated.weights[i]);
  }
  return out;
}

}  // namespace aglab
