#include "aglab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

#include "aglab/rng.hpp"

namespace aglab::kernels {

PointSupport supersample_disk(const Vec2& center, double r, const Grid& grid, int supersample) {
  PointSupport out;
  if (r > 0.0) {
    const int s = supersample;
    const double h = grid.cell_size();
    const double step = h / s;
    const double r2 = r * r;
    int ix0 = static_cast<int>(std::floor((center.x - r - grid.x0()) / h));
    int ix1 = static_cast<int>(std::floor((center.x + r - grid.x0()) / h));
    int iy0 = static_cast<int>(std::floor((center.y - r - grid.y0()) / h));
    int iy1 = static_cast<int>(std::floor((center.y + r - grid.y0()) / h));
    ix0 = std::max(ix0, 0);
    iy0 = std::max(iy0, 0);
    ix1 = std::min(ix1, grid.nx() - 1);
    iy1 = std::min(iy1, grid.ny() - 1);
    for (int iy = iy0; iy <= iy1; ++iy) {
      const double cy0 = grid.y0() + iy * h;
      for (int ix = ix0; ix <= ix1; ++ix) {
        const double cx0 = grid.x0() + ix * h;
        std::int64_t hits = 0;
        for (int b = 0; b < s; ++b) {
          const double dy = cy0 + (b + 0.5) * step - center.y;
          const double dy2 = dy * dy;
          if (dy2 > r2) continue;
          for (int a = 0; a < s; ++a) {
            const double dx = cx0 + (a + 0.5) * step - center.x;
            if (dx * dx + dy2 <= r2) ++hits;
          }
        }
        if (hits > 0) {
          out.cells.push_back(grid.cell_id(ix, iy));
          out.counts.push_back(hits);
          out.total += hits;
        }
      }
    }
  }
  if (out.total == 0) {
    // Point-mass branch: r == 0, or the disk slipped between midpoints.
    out.cells.assign(1, grid.locate(center));
    out.counts.assign(1, 1);
    out.total = 1;
  }
  return out;
}

std::vector<PointSupport> point_supports(const std::vector<Vec2>& points, double r,
                                         const Grid& grid, int supersample, Exec exec) {
  std::vector<PointSupport> out(points.size());
  const std::int64_t n = static_cast<std::int64_t>(points.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i)
      out[i] = supersample_disk(points[i], r, grid, supersample);
  } else {
    for (std::int64_t i = 0; i < n; ++i)
      out[i] = supersample_disk(points[i], r, grid, supersample);
  }
  return out;
}

Eigen::MatrixXd accumulate_adjacency(const std::vector<NodeMass>& supports_nodes,
                                     const std::vector<double>& weights, int n_nodes, Exec exec) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_nodes, n_nodes);
  // Each thread owns the columns with col % nthreads == tid for the whole
  // point loop, so every entry accumulates its per-point increments in
  // point order no matter the thread count: bitwise deterministic, and no
  // per-point synchronization. Increments are evaluated as w * (m_l * m_j);
  // IEEE multiplication is commutative, so the (u,v) and (v,u) entries
  // receive bit-identical values and A stays exactly symmetric.
  const auto accumulate_owned = [&](int tid, int nthreads) {
    for (std::size_t i = 0; i < supports_nodes.size(); ++i) {
      const NodeMass& sup = supports_nodes[i];
      const double w = weights[i];
      if (w == 0.0) continue;
      const std::size_t m = sup.size();
      for (std::size_t j = 0; j < m; ++j) {
        const auto [col, mj] = sup[j];
        if (col % nthreads != tid) continue;
        for (std::size_t l = 0; l < m; ++l) a(sup[l].first, col) += w * (sup[l].second * mj);
      }
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel
    accumulate_owned(omp_get_thread_num(), omp_get_num_threads());
  } else {
    accumulate_owned(0, 1);
  }
  return a;
}

std::vector<std::int64_t> disk_label_flip_counts(const std::vector<Vec2>& points,
                                                 const std::vector<int>& base_labels, double r,
                                                 std::int64_t m, std::uint64_t seed,
                                                 const std::function<int(const Vec2&)>& labeler,
                                                 Exec exec) {
  if (points.size() != base_labels.size())
    throw std::invalid_argument("disk_label_flip_counts: size mismatch");
  std::vector<std::int64_t> flips(points.size(), 0);
  const std::int64_t n = static_cast<std::int64_t>(points.size());

  const auto count_one = [&](std::int64_t i) {
    auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const Vec2 p = points[i];
    const int base = base_labels[i];
    std::int64_t c = 0;
    for (std::int64_t t = 0; t < m; ++t) {
      double dx, dy;
      do {
        dx = 2.0 * uniform_unit(rng) - 1.0;
        dy = 2.0 * uniform_unit(rng) - 1.0;
      } while (dx * dx + dy * dy > 1.0);
      if (labeler({p.x + dx * r, p.y + dy * r}) != base) ++c;
    }
    return c;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) flips[i] = count_one(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) flips[i] = count_one(i);
  }
  return flips;
}

std::vector<VoteOutcome> majority_votes(const std::vector<Vec2>& eval_points,
                                        const std::vector<int>& eval_labels, double r,
                                        const Grid& grid, int supersample,
                                        const std::vector<int>& cell_to_node,
                                        const std::vector<int>& node_pred, int num_classes,
                                        Exec exec) {
  std::vector<VoteOutcome> out(eval_points.size());
  const std::int64_t n = static_cast<std::int64_t>(eval_points.size());

  const auto vote_one = [&](std::int64_t i) {
    const PointSupport sup = supersample_disk(eval_points[i], r, grid, supersample);
    std::vector<double> class_mass(num_classes, 0.0);
    double known = 0.0;
    const double inv_total = 1.0 / static_cast<double>(sup.total);
    double y_mass = 0.0;
    const int y = eval_labels[i];
    for (std::size_t j = 0; j < sup.cells.size(); ++j) {
      const int node = cell_to_node[sup.cells[j]];
      if (node < 0) continue;  // off-node mass: no vote, counts as miss
      const double mass = static_cast<double>(sup.counts[j]) * inv_total;
      const int cls = node_pred[node];
      class_mass[cls] += mass;
      known += mass;
      if (cls == y) y_mass += mass;
    }
    VoteOutcome o;
    o.predicted =
        static_cast<int>(std::max_element(class_mass.begin(), class_mass.end()) -
                         class_mass.begin());  // first max: ties to lowest class index
    o.aug_mismatch = 1.0 - y_mass;
    return o;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i) out[i] = vote_one(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) out[i] = vote_one(i);
  }
  return out;
}

std::vector<std::vector<int>> threshold_neighbors(const std::vector<Vec2>& points, double eps,
                                                  Exec exec) {
  const std::int64_t n = static_cast<std::int64_t>(points.size());
  std::vector<std::vector<int>> nbrs(points.size());
  const double eps2 = eps * eps;

  const auto scan_row = [&](std::int64_t i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      const double d2 = squared_dist(points[i], points[j]);
      if (d2 > 0.0 && d2 <= eps2) nbrs[i].push_back(static_cast<int>(j));
    }
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (std::int64_t i = 0; i < n; ++i) scan_row(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) scan_row(i);
  }
  return nbrs;
}

Eigen::MatrixXd gram(const Eigen::MatrixXd& g, Exec exec) {
  const int p = static_cast<int>(g.cols());
  Eigen::MatrixXd s(p, p);
  const std::int64_t pairs = static_cast<std::int64_t>(p) * (p + 1) / 2;

  const auto fill_pair = [&](std::int64_t t) {
    // Unrank the upper-triangle pair (row j1 <= col j2); the sqrt estimate
    // is corrected to be safe against rounding at triangle boundaries.
    std::int64_t j2 = static_cast<std::int64_t>((std::sqrt(8.0 * t + 1.0) - 1.0) / 2.0);
    while (j2 * (j2 + 1) / 2 > t) --j2;
    while ((j2 + 1) * (j2 + 2) / 2 <= t) ++j2;
    const std::int64_t j1 = t - j2 * (j2 + 1) / 2;
    const double v = g.col(j1).dot(g.col(j2));
    s(j1, j2) = v;
    s(j2, j1) = v;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < pairs; ++t) fill_pair(t);
  } else {
    for (std::int64_t t = 0; t < pairs; ++t) fill_pair(t);
  }
  return s;
}

}  // namespace aglab::kernels
