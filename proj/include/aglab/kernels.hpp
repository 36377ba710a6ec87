#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "aglab/geometry.hpp"
#include "aglab/parallel.hpp"

namespace aglab::kernels {

// Discretized augmentation kernel of one raw point: supersample hit counts
// per touched cell. Masses are count/total, so they are exact rationals and
// sum to 1 up to one rounding per cell.
struct PointSupport {
  std::vector<std::int64_t> cells;  // ascending cell ids
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;
};

// Supersampled disk->cell hit counts for one point (s*s midpoints per cell).
// r == 0, or a disk too small to catch any midpoint, degenerates to unit
// mass on the containing cell.
PointSupport supersample_disk(const Vec2& center, double r, const Grid& grid, int supersample);

// Kernel 1: per-point supports. Parallel over points, one output slot each.
std::vector<PointSupport> point_supports(const std::vector<Vec2>& points, double r,
                                         const Grid& grid, int supersample, Exec exec);

// Kernel 2: A += w_i * m_i m_i^T over all points. The point loop is serial
// in index order; within a point, rows of the support patch are written in
// parallel (disjoint rows), so every A entry accumulates in point order no
// matter the thread count.
// supports_nodes holds (node index, mass) per point.
using NodeMass = std::vector<std::pair<int, double>>;
Eigen::MatrixXd accumulate_adjacency(const std::vector<NodeMass>& supports_nodes,
                                     const std::vector<double>& weights, int n_nodes, Exec exec);

// Kernel 3: Monte-Carlo augmentation label flips. For point i, draws m
// uniform samples from disk(x_i, r) with an independent substream seeded by
// (seed, i) and counts label(x) != base_label[i]. Integer counts make the
// reduction order irrelevant.
std::vector<std::int64_t> disk_label_flip_counts(const std::vector<Vec2>& points,
                                                 const std::vector<int>& base_labels, double r,
                                                 std::int64_t m, std::uint64_t seed,
                                                 const std::function<int(const Vec2&)>& labeler,
                                                 Exec exec);

// Kernel 4: majority vote of a node classifier under the disk kernel.
// For each eval point: predicted class = argmax over classes of the kernel
// mass landing on nodes of that class (ties -> lowest class index), and
// aug_mismatch = kernel mass landing on nodes predicted differently from the
// point's own label, with off-node mass counted as mismatch.
struct VoteOutcome {
  int predicted = 0;
  double aug_mismatch = 0.0;
};
std::vector<VoteOutcome> majority_votes(const std::vector<Vec2>& eval_points,
                                        const std::vector<int>& eval_labels, double r,
                                        const Grid& grid, int supersample,
                                        const std::vector<int>& cell_to_node,
                                        const std::vector<int>& node_pred, int num_classes,
                                        Exec exec);

// Kernel 5: symmetric eps-neighborhood lists (j > i only).
std::vector<std::vector<int>> threshold_neighbors(const std::vector<Vec2>& points, double eps,
                                                  Exec exec);

// Kernel 6: S = G^T G via per-entry column dots (upper triangle mirrored).
Eigen::MatrixXd gram(const Eigen::MatrixXd& g, Exec exec);

}  // namespace aglab::kernels
