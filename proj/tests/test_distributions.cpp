#include <cmath>

#include "doctest.h"

#include "aglab/cloud.hpp"
#include "aglab/distribution.hpp"
#include "aglab/io.hpp"

using namespace aglab;

TEST_CASE("gaussian mixture sampling hits the component means") {
  const auto spec = GaussianMixtureSpec::two_blob(1.0, 0.7);
  const auto cloud = sample_gaussian_mixture(spec, 1000, 42);
  cloud.validate();
  REQUIRE(cloud.size() == 1000);

  double sx = 0.0, sy = 0.0;
  int n0 = 0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (cloud.labels[i] != 0) continue;
    sx += cloud.points[i].x;
    sy += cloud.points[i].y;
    ++n0;
  }
  REQUIRE(n0 > 300);
  // 3 sigma of the class mean at ~n/2 samples per component.
  const double tol = 3.0 * std::sqrt(0.7 / 500.0);
  CHECK(std::abs(sx / n0 - (-1.0)) < tol);
  CHECK(std::abs(sy / n0 - 0.0) < tol);
}

TEST_CASE("gaussian mixture sampling edge cases") {
  const auto spec = GaussianMixtureSpec::two_blob();
  CHECK(sample_gaussian_mixture(spec, 0, 1).empty());

  const auto a = sample_gaussian_mixture(spec, 257, 7);
  const auto b = sample_gaussian_mixture(spec, 257, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.points[i].x == b.points[i].x);
    CHECK(a.points[i].y == b.points[i].y);
    CHECK(a.labels[i] == b.labels[i]);
  }
}

TEST_CASE("gaussian mixture spec validation") {
  GaussianMixtureSpec bad = GaussianMixtureSpec::two_blob();
  bad.variance = 0.0;
  CHECK_THROWS(bad.validate());
  bad = GaussianMixtureSpec::two_blob();
  bad.class_of_component = {0, 2};  // gap
  CHECK_THROWS(bad.validate());
}

TEST_CASE("uniform square sampling") {
  const auto cloud = sample_uniform_square(10000, 3);
  cloud.validate();
  for (const auto& p : cloud.points) {
    CHECK(p.x >= 0.0);
    CHECK(p.x <= 1.0);
    CHECK(p.y >= 0.0);
    CHECK(p.y <= 1.0);
  }

  const auto one = sample_uniform_square(1, 9);
  REQUIRE(one.size() == 1);
  CHECK(one.weights[0] == 1.0);

  const auto big = sample_uniform_square(100000, 11);
  double sx = 0.0, sy = 0.0;
  for (const auto& p : big.points) {
    sx += p.x;
    sy += p.y;
  }
  CHECK(std::abs(sx / 100000 - 0.5) < 0.01);
  CHECK(std::abs(sy / 100000 - 0.5) < 0.01);
}

TEST_CASE("mix_clouds reweighting") {
  const auto spec = GaussianMixtureSpec::two_blob();
  const auto real = sample_gaussian_mixture(spec, 50, 1);
  const auto gen = sample_gaussian_mixture(spec, 1000, 2);

  SUBCASE("replication 10 gives beta 1/3") {
    CHECK(mixing_beta(50000, 1000000, 10) == 1.0 / 3.0);
    const auto mixed = mix_clouds(real, gen, 10);
    mixed.validate();
    REQUIRE(mixed.size() == 1050);
    const double beta = mixing_beta(50, 1000, 10);
    CHECK(beta == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // points keep order and values, only weights change
    for (std::size_t i = 0; i < real.size(); ++i) {
      CHECK(mixed.points[i].x == real.points[i].x);
      CHECK(mixed.weights[i] == doctest::Approx(beta / 50.0).epsilon(1e-12));
    }
    CHECK(mixed.weights[60] == doctest::Approx((1.0 - beta) / 1000.0).epsilon(1e-12));
    // every real point weighs replication times a generated point
    CHECK(mixed.weights[0] / mixed.weights[60] == doctest::Approx(10.0).epsilon(1e-9));
  }

  SUBCASE("equal sizes, no replication") {
    const auto gen_small = sample_gaussian_mixture(spec, 50, 3);
    CHECK(mixing_beta(real.size(), gen_small.size(), 1) == 0.5);
  }

  SUBCASE("empty generated cloud returns the real cloud") {
    const auto mixed = mix_clouds(real, LabeledPointCloud{}, 3);
    REQUIRE(mixed.size() == real.size());
    for (std::size_t i = 0; i < real.size(); ++i)
      CHECK(mixed.weights[i] == doctest::Approx(1.0 / 50.0).epsilon(1e-12));
  }

  SUBCASE("both empty is an error") {
    CHECK_THROWS_WITH_AS(mix_clouds({}, {}, 1), "mix_clouds: empty mixture",
                         std::invalid_argument);
  }
}

TEST_CASE("discretize cloud histograms") {
  const Grid grid(0.0, 0.0, 0.1, 10, 10);

  SUBCASE("single point puts unit mass in its cell") {
    LabeledPointCloud c{{{0.55, 0.35}}, {0}, {1.0}};
    const auto d = discretize(c, grid);
    d.validate();
    const auto cell = grid.locate({0.55, 0.35});
    CHECK(d.mass[cell] == 1.0);
  }

  SUBCASE("two equal-weight points in the same cell") {
    LabeledPointCloud c{{{0.51, 0.31}, {0.59, 0.39}}, {0, 0}, {0.5, 0.5}};
    const auto d = discretize(c, grid);
    CHECK(d.mass[grid.locate({0.55, 0.35})] == 1.0);
  }

  SUBCASE("uniform points concentrate around 1/cells") {
    const auto cloud = sample_uniform_square(100000, 5);
    const auto d = discretize(cloud, grid);
    d.validate();
    for (double m : d.mass) CHECK(std::abs(m - 0.01) < 0.005);
  }

  SUBCASE("out of domain is an error") {
    LabeledPointCloud c{{{1.5, 0.5}}, {0}, {1.0}};
    CHECK_THROWS_AS(discretize(c, grid), std::out_of_range);
  }
}

TEST_CASE("discretized gaussian density matches the histogram of many samples") {
  const auto spec = GaussianMixtureSpec::two_blob(1.0, 0.7);
  const auto cloud = sample_gaussian_mixture(spec, 200000, 13);
  const Grid grid = covering_grid(cloud.points, 0.0, 0.5);
  const auto density = discretize(spec, grid);
  density.validate();
  const auto hist = discretize(cloud, grid);
  double l1 = 0.0;
  for (std::size_t i = 0; i < density.mass.size(); ++i)
    l1 += std::abs(density.mass[i] - hist.mass[i]);
  CHECK(l1 < 0.05);  // sampling + tail truncation
}

TEST_CASE("mixture_distribution") {
  DiscreteDistribution pd{{0, 1}, {1.0, 0.0}};
  DiscreteDistribution pg{{0, 1}, {0.0, 1.0}};

  const auto b1 = mixture_distribution(pd, pg, 1.0);
  CHECK(b1.mass[0] == 1.0);
  CHECK(b1.mass[1] == 0.0);
  const auto b0 = mixture_distribution(pd, pg, 0.0);
  CHECK(b0.mass[0] == 0.0);
  CHECK(b0.mass[1] == 1.0);
  const auto q = mixture_distribution(pd, pg, 0.25);
  CHECK(q.mass[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(q.mass[1] == doctest::Approx(0.75).epsilon(1e-15));

  DiscreteDistribution other{{0, 2}, {1.0, 0.0}};
  CHECK_THROWS_AS(mixture_distribution(pd, other, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(mixture_distribution(pd, pg, 1.5), std::invalid_argument);
}

TEST_CASE("cloud csv round trip") {
  const auto cloud = sample_gaussian_mixture(GaussianMixtureSpec::two_blob(), 37, 21);
  const auto text = cloud_to_csv(cloud).to_string();
  const auto back = cloud_from_csv(text);
  REQUIRE(back.size() == cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK(back.points[i].x == cloud.points[i].x);  // shortest round-trip formatting
    CHECK(back.points[i].y == cloud.points[i].y);
    CHECK(back.labels[i] == cloud.labels[i]);
    CHECK(back.weights[i] == cloud.weights[i]);
  }
}
