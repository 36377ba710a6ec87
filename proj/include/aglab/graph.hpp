#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "aglab/cloud.hpp"
#include "aglab/geometry.hpp"
#include "aglab/kernels.hpp"
#include "aglab/parallel.hpp"

namespace aglab {

// Node classifier used to label graph nodes and raw points. The default toy
// labeler is the Bayes rule of the symmetric two-blob mixture: class 0 left
// of x = 0, class 1 otherwise.
struct Labeler {
  std::string name;
  int num_classes = 1;
  std::function<int(const Vec2&)> classify;

  int operator()(const Vec2& p) const { return classify(p); }
};

Labeler halfplane_labeler();
Labeler constant_labeler(int cls = 0, int num_classes = 1);

struct GraphBuildOptions {
  int supersample = 8;
  int max_nodes = 6000;  // dense materialization cap
  Exec exec = Exec::Parallel;
};

// Augmentation graph over grid cells in factored form:
//   A = sum_i w_i m_i m_i^T
// with m_i the discretized kernel of raw point i (unit mass). This is the
// exact joint-probability adjacency; the dense AugGraph below materializes
// it when the node count is moderate.
struct FactoredAugGraph {
  Grid grid;
  std::vector<std::int64_t> node_cells;         // ascending cell ids
  std::vector<int> cell_to_node;                // size grid.cell_count(), -1 if absent
  std::vector<int> node_labels;                 // labeler at cell centers
  Eigen::VectorXd degrees;                      // D_xx = sum_x' A_{x,x'}
  std::vector<kernels::NodeMass> point_masses;  // per raw point, (node, mass)
  std::vector<double> point_weights;
  std::vector<int> point_labels;  // labeler at raw points
  int num_classes = 1;
  int supersample = 8;
  double d_min = 0.0;
  std::int64_t dropped_nodes = 0;

  int size() const { return static_cast<int>(node_cells.size()); }
  Vec2 node_pos(int v) const { return grid.cell_center(node_cells[v]); }
};

// Dense symmetric nonnegative adjacency with degrees and node labels.
// Build_graph output has total mass 1; threshold graphs are unnormalized.
struct AugGraph {
  std::vector<std::int64_t> ids;  // cell ids (grid graphs) or point indices
  std::vector<Vec2> positions;
  std::vector<int> labels;
  int num_classes = 1;
  Eigen::MatrixXd adjacency;
  Eigen::VectorXd degrees;
  double d_min = 0.0;
  std::int64_t dropped_nodes = 0;
  std::optional<Grid> grid;  // set for cell-node graphs

  int size() const { return static_cast<int>(ids.size()); }
  double total_mass() const { return adjacency.sum(); }
  void validate() const;  // symmetry, nonnegativity, degree consistency
};

// Exact cell-level mass of the disk kernel on one cell:
// area(disk(center, r) ∩ cell) / (pi r^2), estimated by s x s midpoint
// supersampling and clamped to [0,1]. r == 0 is an error ("degenerate
// kernel"); build paths use the point-mass branch instead.
double kernel_mass(const Vec2& center, const DiskAugmentation& aug, const Grid& grid,
                   std::int64_t cell, int supersample = 8);

// Factored augmentation graph from a weighted cloud. Throws if any disk
// leaves the grid domain ("augmentation leaves domain").
FactoredAugGraph build_factored_graph(const LabeledPointCloud& cloud, const DiskAugmentation& aug,
                                      const Grid& grid, const Labeler& labeler,
                                      const GraphBuildOptions& opts = {});

// Dense augmentation graph; materializes the factored form. Throws "graph
// too large" beyond opts.max_nodes.
AugGraph build_graph(const LabeledPointCloud& cloud, const DiskAugmentation& aug, const Grid& grid,
                     const Labeler& labeler, const GraphBuildOptions& opts = {});

AugGraph materialize(const FactoredAugGraph& fg, const GraphBuildOptions& opts = {});

// Unweighted eps-threshold graph over raw points (A_ij = 1 iff
// 0 < |x_i - x_j| <= eps). Isolated points are dropped and counted.
AugGraph threshold_graph(const LabeledPointCloud& cloud, double eps, Exec exec = Exec::Parallel);

// L = I - D^{-1/2} A D^{-1/2}; exactly symmetric.
Eigen::MatrixXd normalized_laplacian(const AugGraph& g);

// Bernoulli(ratio) vertex subsample; induced subgraph, isolated nodes
// dropped. Throws "empty subgraph" when nothing survives.
AugGraph subsample_vertices(const AugGraph& g, double ratio, std::uint64_t seed);

// Bernoulli(p) edge subsample over nonzero entries with i <= j, weights
// preserved; isolated nodes dropped.
AugGraph subsample_edges(const AugGraph& g, double p, std::uint64_t seed);

// Connected component count via union-find on nonzero adjacency.
int component_count(const AugGraph& g);
int component_count(const FactoredAugGraph& fg);

}  // namespace aglab
