// Serial vs OpenMP comparison for the hot kernels. Run with
// --benchmark_min_time=0.2s for a quick pass.

#include <benchmark/benchmark.h>

#include "aglab/cloud.hpp"
#include "aglab/graph.hpp"
#include "aglab/kernels.hpp"
#include "aglab/metrics.hpp"
#include "aglab/parallel.hpp"

namespace {

using namespace aglab;

const GaussianMixtureSpec kToy = GaussianMixtureSpec::two_blob();

struct SupportInputs {
  LabeledPointCloud cloud = sample_gaussian_mixture(kToy, 1000, 7);
  Grid grid = covering_grid(cloud.points, 0.5, 0.1);
};

const SupportInputs& support_inputs() {
  static const SupportInputs in;
  return in;
}

void BM_PointSupports(benchmark::State& state) {
  const auto& in = support_inputs();
  const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) {
    auto out = kernels::point_supports(in.cloud.points, 0.5, in.grid, 16, exec);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_PointSupports)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_AccumulateAdjacency(benchmark::State& state) {
  const auto& in = support_inputs();
  const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  const FactoredAugGraph fg =
      build_factored_graph(in.cloud, DiskAugmentation(0.5), in.grid, halfplane_labeler());
  for (auto _ : state) {
    auto a = kernels::accumulate_adjacency(fg.point_masses, fg.point_weights, fg.size(), exec);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_AccumulateAdjacency)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_AlphaMC(benchmark::State& state) {
  const auto& in = support_inputs();
  const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  const Labeler lab = halfplane_labeler();
  for (auto _ : state) {
    auto est = alpha_mc(in.cloud, DiskAugmentation(0.5), lab, 20000, 11, exec);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_AlphaMC)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_MajorityVotes(benchmark::State& state) {
  const auto& in = support_inputs();
  const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  const FactoredAugGraph fg =
      build_factored_graph(in.cloud, DiskAugmentation(0.5), in.grid, halfplane_labeler());
  std::vector<int> pred(fg.size());
  for (int v = 0; v < fg.size(); ++v) pred[v] = fg.node_labels[v];
  std::vector<int> eval_labels(in.cloud.size());
  const Labeler lab = halfplane_labeler();
  for (std::size_t i = 0; i < in.cloud.size(); ++i) eval_labels[i] = lab(in.cloud.points[i]);
  for (auto _ : state) {
    auto votes = kernels::majority_votes(in.cloud.points, eval_labels, 0.5, fg.grid, 8,
                                         fg.cell_to_node, pred, 2, exec);
    benchmark::DoNotOptimize(votes);
  }
}
BENCHMARK(BM_MajorityVotes)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_ThresholdNeighbors(benchmark::State& state) {
  const LabeledPointCloud cloud = sample_uniform_square(2000, 13);
  const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) {
    auto nbrs = kernels::threshold_neighbors(cloud.points, 0.05, exec);
    benchmark::DoNotOptimize(nbrs);
  }
}
BENCHMARK(BM_ThresholdNeighbors)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_Gram(benchmark::State& state) {
  const Exec exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  const LabeledPointCloud cloud = sample_gaussian_mixture(kToy, 400, 17);
  const Grid grid = covering_grid(cloud.points, 0.8, 0.05);
  const FactoredAugGraph fg =
      build_factored_graph(cloud, DiskAugmentation(0.8), grid, halfplane_labeler());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(fg.size(), static_cast<int>(fg.point_masses.size()));
  for (std::size_t i = 0; i < fg.point_masses.size(); ++i)
    for (const auto& [node, mass] : fg.point_masses[i]) g(node, static_cast<int>(i)) = mass;
  for (auto _ : state) {
    auto s = kernels::gram(g, exec);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Gram)->Arg(0)->Arg(1)->ArgName("parallel");

}  // namespace

BENCHMARK_MAIN();
