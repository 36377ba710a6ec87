#include <cmath>
#include <random>

#include "doctest.h"

#include "aglab/distribution.hpp"
#include "aglab/graph.hpp"
#include "aglab/metrics.hpp"
#include "aglab/rng.hpp"
#include "aglab/spectral.hpp"

using namespace aglab;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSegHalf = 0.19550110947788532;  // (pi/3 - sqrt(3)/4) / pi
}  // namespace

TEST_CASE("alpha closed form") {
  SUBCASE("no boundary crossing") {
    LabeledPointCloud c{{{0.8, 0.3}}, {1}, {1.0}};
    CHECK(alpha_analytic(c, 0.5) == 0.0);
  }
  SUBCASE("point on the boundary contributes one half") {
    LabeledPointCloud c{{{0.0, 0.3}}, {1}, {1.0}};
    CHECK(alpha_analytic(c, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("point at half radius matches the circular-segment fraction") {
    LabeledPointCloud c{{{0.25, -0.1}}, {1}, {1.0}};
    CHECK(alpha_analytic(c, 0.5) == doctest::Approx(kSegHalf).epsilon(1e-12));
    CHECK(segment_fraction(0.5) ==
          doctest::Approx((kPi / 3.0 - std::sqrt(3.0) / 4.0) / kPi).epsilon(1e-15));
  }
  SUBCASE("invalid radius") { CHECK_THROWS_AS(alpha_analytic({}, 0.0), std::invalid_argument); }
}

TEST_CASE("alpha Monte Carlo cross-validates the closed form") {
  const Labeler lab = halfplane_labeler();

  SUBCASE("vanishing radius never crosses") {
    LabeledPointCloud c{{{0.4, 0.0}, {-0.7, 0.2}}, {1, 0}, {0.5, 0.5}};
    const auto est = alpha_mc(c, DiskAugmentation(1e-6), lab, 1000, 5);
    CHECK(est.value == 0.0);
    CHECK(est.std_error == 0.0);
  }

  SUBCASE("boundary point splits evenly") {
    LabeledPointCloud c{{{0.0, 0.0}}, {1}, {1.0}};
    const auto est = alpha_mc(c, DiskAugmentation(0.5), lab, 100000, 7);
    CHECK(std::abs(est.value - 0.5) <= 3.0 * est.std_error);
  }

  SUBCASE("half-radius point matches the segment fraction") {
    LabeledPointCloud c{{{0.25, 0.0}}, {1}, {1.0}};
    const auto est = alpha_mc(c, DiskAugmentation(0.5), lab, 100000, 9);
    CHECK(std::abs(est.value - kSegHalf) <= 3.0 * est.std_error);
    CHECK(est.std_error > 0.0);
  }

  SUBCASE("weighted cloud against the closed form") {
    const auto cloud = sample_gaussian_mixture(GaussianMixtureSpec::two_blob(), 100, 13);
    for (double r : {0.2, 0.5, 1.0}) {
      const auto est = alpha_mc(cloud, DiskAugmentation(r), lab, 50000, 17);
      CHECK(std::abs(est.value - alpha_analytic(cloud, r)) <= 3.0 * est.std_error);
    }
  }
}

TEST_CASE("phi_y") {
  SUBCASE("uniform labels give zero") {
    AugGraph g;
    g.ids = {0, 1};
    g.positions = {{0, 0}, {1, 0}};
    g.labels = {1, 1};
    g.num_classes = 2;
    g.adjacency = Eigen::MatrixXd::Constant(2, 2, 0.25);
    g.degrees = g.adjacency.rowwise().sum();
    CHECK(phi_y(g) == 0.0);
  }
  SUBCASE("two differently labeled nodes") {
    AugGraph g;
    g.ids = {0, 1};
    g.positions = {{0, 0}, {1, 0}};
    g.labels = {0, 1};
    g.num_classes = 2;
    g.adjacency = Eigen::MatrixXd::Zero(2, 2);
    g.adjacency(0, 1) = g.adjacency(1, 0) = 0.5;
    g.degrees = g.adjacency.rowwise().sum();
    CHECK(phi_y(g) == 1.0);
  }
  SUBCASE("bounded by twice the grid-level labeling error") {
    const auto cloud = sample_gaussian_mixture(GaussianMixtureSpec::two_blob(), 60, 3);
    const Grid grid = covering_grid(cloud.points, 0.5, 0.05);
    const auto fg = build_factored_graph(cloud, DiskAugmentation(0.5), grid, halfplane_labeler());
    CHECK(phi_y(fg) <= 2.0 * alpha_grid(fg) + 1e-6);
  }
}

TEST_CASE("tv distance") {
  DiscreteDistribution p{{0, 1}, {0.7, 0.3}};
  DiscreteDistribution q{{0, 1}, {0.5, 0.5}};
  CHECK(tv_distance(p, p) == 0.0);
  CHECK(tv_distance(p, q) == doctest::Approx(0.2).epsilon(1e-15));

  DiscreteDistribution a{{0, 1}, {1.0, 0.0}};
  DiscreteDistribution b{{0, 1}, {0.0, 1.0}};
  CHECK(tv_distance(a, b) == 1.0);

  DiscreteDistribution mismatch{{0, 2}, {0.7, 0.3}};
  CHECK_THROWS_AS(tv_distance(p, mismatch), std::invalid_argument);

  // metric properties on random triples
  auto rng = make_rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const int atoms = 20;
    auto rand_dist = [&]() {
      DiscreteDistribution d;
      double total = 0.0;
      for (int i = 0; i < atoms; ++i) {
        d.atoms.push_back(i);
        d.mass.push_back(unit(rng));
        total += d.mass.back();
      }
      for (double& m : d.mass) m /= total;
      return d;
    };
    const auto x = rand_dist(), y = rand_dist(), z = rand_dist();
    CHECK(tv_distance(x, y) == tv_distance(y, x));
    CHECK(tv_distance(x, x) <= 1e-12);
    CHECK(tv_distance(x, z) <= tv_distance(x, y) + tv_distance(y, z) + 1e-12);
  }
}

TEST_CASE("error bound") {
  CHECK(error_bound(0.0, 0.5, 1.0, 0.0) == 0.0);
  CHECK(error_bound(0.05, 0.5, 1.0, 0.9) == doctest::Approx(1.6).epsilon(1e-12));
  CHECK(error_bound(0.0, 1.0, 0.0, 0.3) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK_THROWS_WITH_AS(error_bound(0.1, 0.0, 1.0, 0.0),
                       "error_bound: vacuous bound: lambda_{k+1} = 0", std::runtime_error);
  CHECK_THROWS_AS(error_bound(1.5, 0.5, 1.0, 0.0), std::invalid_argument);

  // monotone in each argument
  const double base = error_bound(0.1, 0.5, 0.5, 0.3);
  CHECK(error_bound(0.11, 0.5, 0.5, 0.3) > base);
  CHECK(error_bound(0.1, 0.55, 0.5, 0.3) < base);
  CHECK(error_bound(0.1, 0.5, 0.55, 0.3) < base);
  CHECK(error_bound(0.1, 0.5, 0.5, 0.33) > base);
}

namespace {

Embedding manual_embedding(const Eigen::MatrixXd& f, const Eigen::VectorXd& degrees) {
  Embedding e;
  e.features = f;
  e.k = static_cast<int>(f.cols());
  e.degrees = degrees;
  return e;
}

}  // namespace

TEST_CASE("linear probe") {
  SUBCASE("component-constant features separate distinct labels") {
    Eigen::MatrixXd f(4, 2);
    f << 1, 0, 1, 0, 0, 1, 0, 1;
    const Eigen::VectorXd d = Eigen::VectorXd::Ones(4);
    const std::vector<int> labels{0, 0, 1, 1};
    const auto probe = fit_probe(manual_embedding(f, d), labels, 2);
    for (int i = 0; i < 4; ++i)
      CHECK(probe.predict(f.row(i).transpose()) == labels[i]);
  }

  SUBCASE("all-zero features fall back to the lowest (majority) class") {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(3, 2);
    const Eigen::VectorXd d = Eigen::VectorXd::Ones(3);
    const std::vector<int> labels{0, 0, 1};  // majority class 0
    const auto probe = fit_probe(manual_embedding(f, d), labels, 2);
    CHECK(probe.predict(Eigen::Vector2d::Zero()) == 0);
  }

  SUBCASE("one-hot features give an identity-like probe") {
    Eigen::MatrixXd f(6, 3);
    f.setZero();
    std::vector<int> labels{0, 0, 1, 1, 2, 2};
    for (int i = 0; i < 6; ++i) f(i, labels[i]) = 1.0;
    Eigen::VectorXd d(6);
    d << 1, 2, 1, 3, 2, 1;
    const auto probe = fit_probe(manual_embedding(f, d), labels, 3);
    for (int c = 0; c < 3; ++c) {
      CHECK(probe.weights(c, c) == doctest::Approx(1.0).epsilon(1e-6));
      Eigen::Vector3d onehot = Eigen::Vector3d::Zero();
      onehot(c) = 1.0;
      CHECK(probe.predict(onehot) == c);
    }
  }
}

TEST_CASE("majority vote error") {
  const Labeler lab = halfplane_labeler();
  const auto cloud = sample_gaussian_mixture(GaussianMixtureSpec::two_blob(), 80, 21);
  const Grid grid = covering_grid(cloud.points, 0.6, 0.05);
  const auto fg = build_factored_graph(cloud, DiskAugmentation(0.6), grid, lab);
  const auto fs = factored_spectrum(fg, 2);
  const auto emb = optimal_embedding(fg, fs, 2);
  const auto probe = fit_probe(emb, fg);

  SUBCASE("perfect node classifier on class-0 data gives zero error") {
    // labels all 0 and every node predicted 0 by construction
    LabeledPointCloud left;
    for (int i = 0; i < 20; ++i) {
      left.points.push_back({-1.0 - 0.01 * i, 0.0});
      left.labels.push_back(0);
      left.weights.push_back(0.05);
    }
    const Grid g2 = covering_grid(left.points, 0.2, 0.05);
    const auto fg2 = build_factored_graph(left, DiskAugmentation(0.2), g2, lab);
    const auto fs2 = factored_spectrum(fg2, 1);
    const auto emb2 = optimal_embedding(fg2, fs2, 1);
    LinearProbe const_probe;
    const_probe.num_classes = 2;
    const_probe.weights = Eigen::MatrixXd::Zero(1, 2);
    const_probe.weights(0, 0) = 1.0;  // always class 0 (features are positive)
    const auto rep = majority_vote_error(const_probe, emb2, fg2, left, DiskAugmentation(0.2), lab);
    CHECK(rep.mv_error == 0.0);
  }

  SUBCASE("vote error never exceeds twice the augmentation-level error") {
    const auto eval = sample_gaussian_mixture(GaussianMixtureSpec::two_blob(), 300, 23);
    const Grid wide = covering_grid(eval.points, 0.6, 0.05);
    const auto fgw = build_factored_graph(cloud, DiskAugmentation(0.6), wide, lab);
    const auto fsw = factored_spectrum(fgw, 2);
    const auto embw = optimal_embedding(fgw, fsw, 2);
    const auto probew = fit_probe(embw, fgw);
    const auto rep = majority_vote_error(probew, embw, fgw, eval, DiskAugmentation(0.6), lab);
    CHECK(rep.mv_error <= 2.0 * rep.aug_error + 1e-12);
    CHECK(rep.mv_error >= 0.0);
    CHECK(rep.mv_error <= 1.0);
  }

  SUBCASE("eval augmentation must stay inside the domain") {
    LabeledPointCloud outside{{{grid.x1() - 0.1, 0.0}}, {1}, {1.0}};
    CHECK_THROWS_AS(majority_vote_error(probe, emb, fg, outside, DiskAugmentation(0.6), lab),
                    std::invalid_argument);
  }
}

TEST_CASE("bound report assembly") {
  AlphaEstimate alpha{0.05, 0.001};
  const auto rep = make_bound_report(100, 0.5, 2, 1.0, 0.0, alpha, 0.5, 0.08, 0.12, 42);
  CHECK(rep.bound_value == doctest::Approx(1.6).epsilon(1e-12));
  CHECK(rep.beta == 1.0);
  CHECK(rep.tv_gap == 0.0);

  // vacuous lambda becomes an infinite bound rather than an exception here
  const auto vac = make_bound_report(100, 0.1, 2, 1.0, 0.0, alpha, 0.0, 0.0, 0.5, 42);
  CHECK(std::isinf(vac.bound_value));
}
