#include <cmath>
#include <random>

#include "doctest.h"

#include "aglab/graph.hpp"
#include "aglab/metrics.hpp"
#include "aglab/rng.hpp"
#include "aglab/spectral.hpp"

using namespace aglab;

namespace {

// Random build_graph instance on the toy cloud.
AugGraph random_aug_graph(int n_points, double r, std::uint64_t seed) {
  const auto cloud = sample_gaussian_mixture(GaussianMixtureSpec::two_blob(), n_points, seed);
  const Grid grid = covering_grid(cloud.points, r, 0.15);
  return build_graph(cloud, DiskAugmentation(r), grid, halfplane_labeler());
}

}  // namespace

TEST_CASE("eigendecompose basics") {
  SUBCASE("2x2 hand computation") {
    Eigen::MatrixXd l(2, 2);
    l << 1, -1, -1, 1;
    const auto s = eigendecompose(l);
    CHECK(s.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.eigenvalues(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.residual <= 1e-12);
  }

  SUBCASE("zero matrix") {
    const auto s = eigendecompose(Eigen::MatrixXd::Zero(5, 5));
    CHECK(s.eigenvalues.cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("non-finite entries rejected") {
    Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(eigendecompose(bad), std::invalid_argument);
  }

  SUBCASE("orthonormal eigenvectors, small residual, deterministic signs") {
    auto rng = make_rng(5);
    std::normal_distribution<double> gauss;
    const int n = 40;
    Eigen::MatrixXd m(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i <= j; ++i) m(i, j) = m(j, i) = gauss(rng);
    const auto s = eigendecompose(m);
    CHECK(s.residual <= 1e-7 * n);
    const Eigen::MatrixXd eye =
        s.eigenvectors.transpose() * s.eigenvectors - Eigen::MatrixXd::Identity(n, n);
    CHECK(eye.cwiseAbs().maxCoeff() <= 1e-8);
    const Eigen::MatrixXd pair_residual =
        m * s.eigenvectors - s.eigenvectors * s.eigenvalues.asDiagonal();
    CHECK(pair_residual.colwise().norm().maxCoeff() <= 1e-8 * std::max(1.0, m.norm()));
    const auto s2 = eigendecompose(m);
    CHECK((s.eigenvectors - s2.eigenvectors).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("connected graph has a single zero eigenvalue") {
    const auto g = random_aug_graph(30, 1.2, 11);
    REQUIRE(component_count(g) == 1);
    const auto s = eigendecompose(normalized_laplacian(g));
    CHECK(std::abs(s.eigenvalues(0)) <= 1e-8);
    CHECK(s.eigenvalues(1) > 1e-8);
  }
}

TEST_CASE("lambda_k_plus_1 indexing") {
  Eigen::VectorXd ev(4);
  ev << 0.0, 0.1, 0.4, 1.7;
  CHECK(lambda_k_plus_1(ev, 2) == 0.4);
  CHECK(lambda_k_plus_1(ev, 3) == 1.7);  // k = N - 1
  CHECK_THROWS_WITH_AS(lambda_k_plus_1(ev, 4), "lambda_k_plus_1: k too large for graph",
                       std::invalid_argument);

  // two-component graph: lambda_3 > 0
  LabeledPointCloud c{{{-1.5, 0.0}, {1.5, 0.0}}, {0, 1}, {0.5, 0.5}};
  const Grid grid(-3.0, -3.0, 0.05, 120, 120);
  const auto g = build_graph(c, DiskAugmentation(0.3), grid, halfplane_labeler());
  const auto s = eigendecompose(normalized_laplacian(g));
  CHECK(lambda_k_plus_1(s, 2) > 1e-8);
}

TEST_CASE("spectral gap") {
  Eigen::VectorXd two(2);
  two << 0.0, 2.0;
  CHECK(spectral_gap(two) == 0.0);
  Eigen::VectorXd three(3);
  three << 0.0, 1.0, 1.0;
  CHECK(spectral_gap(three) == 1.0);
  Eigen::VectorXd one(1);
  one << 0.0;
  CHECK_THROWS_AS(spectral_gap(one), std::invalid_argument);

  // all-ones adjacency (self loops): L spectrum {0, 1, ..., 1}, so the gap
  // is lambda_2 = 1 and 2 - lambda_N = 1 as well
  AugGraph k;
  const int n = 6;
  k.ids.assign(n, 0);
  k.positions.assign(n, {0, 0});
  k.labels.assign(n, 0);
  k.adjacency = Eigen::MatrixXd::Ones(n, n);
  k.degrees = k.adjacency.rowwise().sum();
  k.d_min = n;
  const auto s = eigendecompose(normalized_laplacian(k));
  CHECK(s.eigenvalues(n - 1) < 2.0);
  CHECK(spectral_gap(s) == doctest::Approx(s.eigenvalues(1)).epsilon(1e-12));
}

TEST_CASE("optimal embedding") {
  SUBCASE("two disconnected components get component-constant features") {
    LabeledPointCloud c{{{-1.5, 0.0}, {1.5, 0.0}}, {0, 1}, {0.5, 0.5}};
    const Grid grid(-3.0, -3.0, 0.05, 120, 120);
    const auto g = build_graph(c, DiskAugmentation(0.3), grid, halfplane_labeler());
    const auto s = eigendecompose(normalized_laplacian(g));
    const auto emb = optimal_embedding(g, s, 2);
    // rows within one component agree
    for (int i = 0; i < g.size(); ++i)
      for (int j = 0; j < g.size(); ++j) {
        if ((g.positions[i].x < 0) != (g.positions[j].x < 0)) continue;
        CHECK((emb.features.row(i) - emb.features.row(j)).cwiseAbs().maxCoeff() <= 1e-7);
      }
  }

  SUBCASE("single self-loop node") {
    AugGraph g;
    g.ids = {0};
    g.positions = {{0, 0}};
    g.labels = {0};
    g.adjacency = Eigen::MatrixXd::Constant(1, 1, 0.3);
    g.degrees = g.adjacency.rowwise().sum();
    g.d_min = 0.3;
    const auto s = eigendecompose(normalized_laplacian(g));
    const auto emb = optimal_embedding(g, s, 1);
    CHECK(emb.features(0, 0) == doctest::Approx(1.0 / std::sqrt(0.3)).epsilon(1e-12));
  }

  SUBCASE("k out of range") {
    const auto g = random_aug_graph(10, 0.5, 3);
    const auto s = eigendecompose(normalized_laplacian(g));
    CHECK_THROWS_AS(optimal_embedding(g, s, g.size() + 1), std::invalid_argument);
  }
}

TEST_CASE("matrix-factorization loss") {
  const auto g = random_aug_graph(25, 0.8, 7);
  const auto s = eigendecompose(normalized_laplacian(g));
  const int n = g.size();

  SUBCASE("zero embedding scores the norm of the normalized adjacency") {
    Embedding zero;
    zero.k = 2;
    zero.degrees = g.degrees;
    zero.features = Eigen::MatrixXd::Zero(n, 2);
    const Eigen::VectorXd inv_sqrt = g.degrees.array().sqrt().inverse();
    const Eigen::MatrixXd abar =
        inv_sqrt.asDiagonal() * g.adjacency * inv_sqrt.asDiagonal();
    CHECK(loss_mf(zero, g) == doctest::Approx(abar.squaredNorm()).epsilon(1e-12));
  }

  SUBCASE("full-rank optimal embedding reconstructs a PSD normalized adjacency") {
    const auto emb = optimal_embedding(g, s, n);
    CHECK(loss_mf(emb, g) <= 1e-10 * n);  // all gammas >= 0 for kernel graphs
  }

  SUBCASE("optimal beats random embeddings and is monotone in k") {
    auto rng = make_rng(99);
    std::normal_distribution<double> gauss;
    const auto emb2 = optimal_embedding(g, s, 2);
    const double opt2 = loss_mf(emb2, g);
    for (int t = 0; t < 100; ++t) {
      Embedding rand_emb;
      rand_emb.k = 2;
      rand_emb.degrees = g.degrees;
      rand_emb.features.resize(n, 2);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j) rand_emb.features(i, j) = gauss(rng);
      CHECK(opt2 < loss_mf(rand_emb, g));
    }
    double prev = opt2;
    for (int k = 3; k <= std::min(8, n); ++k) {
      const double cur = loss_mf(optimal_embedding(g, s, k), g);
      CHECK(cur <= prev + 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("factored spectrum matches the dense route exactly") {
  const auto cloud = sample_gaussian_mixture(GaussianMixtureSpec::two_blob(), 35, 23);
  const Grid grid = covering_grid(cloud.points, 0.6, 0.15);
  const Labeler lab = halfplane_labeler();
  const auto fg = build_factored_graph(cloud, DiskAugmentation(0.6), grid, lab);
  const auto g = materialize(fg);
  REQUIRE(g.size() == fg.size());

  const auto dense = eigendecompose(normalized_laplacian(g));
  const auto fact = factored_spectrum(fg, 2);

  REQUIRE(fact.eigenvalues.size() == dense.eigenvalues.size());
  CHECK((fact.eigenvalues - dense.eigenvalues).cwiseAbs().maxCoeff() <= 1e-9);

  // same top-k embedding features (simple spectrum at this seed)
  const auto emb_d = optimal_embedding(g, dense, 2);
  const auto emb_f = optimal_embedding(fg, fact, 2);
  CHECK((emb_d.features - emb_f.features).cwiseAbs().maxCoeff() <= 1e-7);

  // same phi and grid-level alpha inputs
  CHECK(phi_y(g) == doctest::Approx(phi_y(fg)).epsilon(1e-10));

  // spectrum range sanity for a normalized Laplacian
  CHECK(fact.eigenvalues(0) >= -1e-8);
  CHECK(fact.eigenvalues(fact.size() - 1) <= 2.0 + 1e-8);
}

TEST_CASE("block-diagonal union spectrum is the union of block spectra") {
  const auto a = random_aug_graph(12, 0.5, 31);
  const auto b = random_aug_graph(15, 0.5, 37);
  const int n = a.size() + b.size();
  AugGraph u;
  u.ids.resize(n);
  u.positions.resize(n);
  u.labels.assign(n, 0);
  u.adjacency = Eigen::MatrixXd::Zero(n, n);
  u.adjacency.topLeftCorner(a.size(), a.size()) = a.adjacency;
  u.adjacency.bottomRightCorner(b.size(), b.size()) = b.adjacency;
  u.degrees = u.adjacency.rowwise().sum();
  u.d_min = u.degrees.minCoeff();

  const auto su = eigendecompose(normalized_laplacian(u)).eigenvalues;
  std::vector<double> merged;
  const auto sa = eigendecompose(normalized_laplacian(a)).eigenvalues;
  const auto sb = eigendecompose(normalized_laplacian(b)).eigenvalues;
  for (int i = 0; i < sa.size(); ++i) merged.push_back(sa(i));
  for (int i = 0; i < sb.size(); ++i) merged.push_back(sb(i));
  std::sort(merged.begin(), merged.end());
  for (int i = 0; i < n; ++i) CHECK(su(i) == doctest::Approx(merged[i]).epsilon(1e-9));
}
