#include "aglab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "aglab/rng.hpp"

namespace aglab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Labeler halfplane_labeler() {
  return Labeler{"halfplane", 2, [](const Vec2& p) { return p.x < 0.0 ? 0 : 1; }};
}

Labeler constant_labeler(int cls, int num_classes) {
  return Labeler{"constant", num_classes, [cls](const Vec2&) { return cls; }};
}

void AugGraph::validate() const {
  const int n = size();
  if (adjacency.rows() != n || adjacency.cols() != n || degrees.size() != n ||
      static_cast<int>(labels.size()) != n || static_cast<int>(positions.size()) != n)
    throw std::invalid_argument("AugGraph: field sizes disagree");
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double v = adjacency(i, j);
      if (!(v >= 0.0)) throw std::invalid_argument("AugGraph: negative adjacency");
      if (std::memcmp(&v, &adjacency(j, i), sizeof(double)) != 0)
        throw std::invalid_argument("AugGraph: adjacency not exactly symmetric");
    }
    if (std::abs(adjacency.col(j).sum() - degrees(j)) > 1e-12 * std::max(1.0, degrees(j)))
      throw std::invalid_argument("AugGraph: degree inconsistent with adjacency");
    if (!(degrees(j) > 0.0)) throw std::invalid_argument("AugGraph: zero-degree node retained");
  }
}

double kernel_mass(const Vec2& center, const DiskAugmentation& aug, const Grid& grid,
                   std::int64_t cell, int supersample) {
  if (!(aug.radius > 0.0)) throw std::invalid_argument("kernel_mass: degenerate kernel");
  const double r = aug.radius;
  const double h = grid.cell_size();
  const Vec2 o = grid.cell_origin(cell);
  const double step = h / supersample;
  const double r2 = r * r;
  std::int64_t hits = 0;
  for (int b = 0; b < supersample; ++b) {
    const double dy = o.y + (b + 0.5) * step - center.y;
    const double dy2 = dy * dy;
    for (int a = 0; a < supersample; ++a) {
      const double dx = o.x + (a + 0.5) * step - center.x;
      if (dx * dx + dy2 <= r2) ++hits;
    }
  }
  const double frac = static_cast<double>(hits) / (static_cast<double>(supersample) * supersample);
  const double mass = frac * h * h / (kPi * r2);
  return std::clamp(mass, 0.0, 1.0);
}

FactoredAugGraph build_factored_graph(const LabeledPointCloud& cloud, const DiskAugmentation& aug,
                                      const Grid& grid, const Labeler& labeler,
                                      const GraphBuildOptions& opts) {
  cloud.validate();
  if (cloud.empty()) throw std::invalid_argument("build_graph: empty cloud");
  const double r = aug.radius;
  for (const Vec2& p : cloud.points)
    if (!grid.contains_disk(p, r))
      throw std::invalid_argument("build_graph: augmentation leaves domain");

  const auto supports =
      kernels::point_supports(cloud.points, r, grid, opts.supersample, opts.exec);

  // Cell degrees accumulate in point order: deterministic for any thread
  // count because the supports themselves are per-point slots.
  std::vector<double> cell_degree;  // sparse via map over touched cells
  std::vector<std::int64_t> touched;
  {
    std::vector<std::int64_t> all;
    for (const auto& s : supports) all.insert(all.end(), s.cells.begin(), s.cells.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    touched = std::move(all);
  }
  std::vector<int> cell_slot(grid.cell_count(), -1);
  for (std::size_t i = 0; i < touched.size(); ++i) cell_slot[touched[i]] = static_cast<int>(i);
  cell_degree.assign(touched.size(), 0.0);
  for (std::size_t i = 0; i < supports.size(); ++i) {
    const auto& s = supports[i];
    const double w = cloud.weights[i];
    const double inv_total = 1.0 / static_cast<double>(s.total);
    for (std::size_t j = 0; j < s.cells.size(); ++j)
      cell_degree[cell_slot[s.cells[j]]] += w * (static_cast<double>(s.counts[j]) * inv_total);
  }

  FactoredAugGraph fg{grid,
                      {},
                      std::vector<int>(grid.cell_count(), -1),
                      {},
                      {},
                      {},
                      cloud.weights,
                      {},
                      labeler.num_classes,
                      opts.supersample,
                      0.0,
                      0};
  for (std::size_t i = 0; i < touched.size(); ++i) {
    if (cell_degree[i] > 0.0)
      fg.node_cells.push_back(touched[i]);
    else
      ++fg.dropped_nodes;  // only zero-weight points landed here
  }
  fg.degrees.resize(static_cast<Eigen::Index>(fg.node_cells.size()));
  for (std::size_t v = 0; v < fg.node_cells.size(); ++v) {
    fg.cell_to_node[fg.node_cells[v]] = static_cast<int>(v);
    fg.degrees(static_cast<Eigen::Index>(v)) = cell_degree[cell_slot[fg.node_cells[v]]];
  }

  fg.node_labels.resize(fg.node_cells.size());
  for (std::size_t v = 0; v < fg.node_cells.size(); ++v)
    fg.node_labels[v] = labeler(grid.cell_center(fg.node_cells[v]));

  fg.point_masses.resize(supports.size());
  fg.point_labels.resize(supports.size());
  for (std::size_t i = 0; i < supports.size(); ++i) {
    const auto& s = supports[i];
    const double inv_total = 1.0 / static_cast<double>(s.total);
    auto& nm = fg.point_masses[i];
    nm.reserve(s.cells.size());
    for (std::size_t j = 0; j < s.cells.size(); ++j) {
      const int node = fg.cell_to_node[s.cells[j]];
      if (node >= 0) nm.emplace_back(node, static_cast<double>(s.counts[j]) * inv_total);
    }
    fg.point_labels[i] = labeler(cloud.points[i]);
  }

  fg.d_min = fg.degrees.size() > 0 ? fg.degrees.minCoeff() : 0.0;
  return fg;
}

AugGraph materialize(const FactoredAugGraph& fg, const GraphBuildOptions& opts) {
  const int n = fg.size();
  if (n > opts.max_nodes)
    throw std::runtime_error("build_graph: graph too large (" + std::to_string(n) + " nodes > " +
                             std::to_string(opts.max_nodes) +
                             "); coarsen the grid or use the factored route");
  AugGraph g;
  g.ids = fg.node_cells;
  g.positions.reserve(n);
  for (int v = 0; v < n; ++v) g.positions.push_back(fg.node_pos(v));
  g.labels = fg.node_labels;
  g.num_classes = fg.num_classes;
  g.adjacency = kernels::accumulate_adjacency(fg.point_masses, fg.point_weights, n, opts.exec);
  g.degrees = g.adjacency.rowwise().sum();
  g.d_min = n > 0 ? g.degrees.minCoeff() : 0.0;
  g.dropped_nodes = fg.dropped_nodes;
  g.grid = fg.grid;
  return g;
}

AugGraph build_graph(const LabeledPointCloud& cloud, const DiskAugmentation& aug, const Grid& grid,
                     const Labeler& labeler, const GraphBuildOptions& opts) {
  return materialize(build_factored_graph(cloud, aug, grid, labeler, opts), opts);
}

AugGraph threshold_graph(const LabeledPointCloud& cloud, double eps, Exec exec) {
  if (!(eps > 0.0)) throw std::invalid_argument("threshold_graph: eps must be > 0");
  cloud.validate();
  const auto nbrs = kernels::threshold_neighbors(cloud.points, eps, exec);

  const int n = static_cast<int>(cloud.size());
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i) {
    degree[i] += static_cast<int>(nbrs[i].size());
    for (int j : nbrs[i]) ++degree[j];
  }
  std::vector<int> keep_slot(n, -1);
  std::vector<int> kept;
  for (int i = 0; i < n; ++i) {
    if (degree[i] > 0) {
      keep_slot[i] = static_cast<int>(kept.size());
      kept.push_back(i);
    }
  }

  AugGraph g;
  const int m = static_cast<int>(kept.size());
  g.dropped_nodes = n - m;
  g.ids.reserve(m);
  g.positions.reserve(m);
  g.labels.reserve(m);
  for (int i : kept) {
    g.ids.push_back(i);
    g.positions.push_back(cloud.points[i]);
    g.labels.push_back(cloud.labels[i]);
  }
  g.num_classes = m > 0 ? 1 + *std::max_element(g.labels.begin(), g.labels.end()) : 1;
  g.adjacency = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < n; ++i) {
    for (int j : nbrs[i]) {
      g.adjacency(keep_slot[i], keep_slot[j]) = 1.0;
      g.adjacency(keep_slot[j], keep_slot[i]) = 1.0;
    }
  }
  g.degrees = g.adjacency.rowwise().sum();
  g.d_min = m > 0 ? g.degrees.minCoeff() : 0.0;
  return g;
}

Eigen::MatrixXd normalized_laplacian(const AugGraph& g) {
  const int n = g.size();
  for (int i = 0; i < n; ++i)
    if (!(g.degrees(i) > 0.0)) throw std::invalid_argument("normalized_laplacian: zero degree");
  Eigen::VectorXd inv_sqrt = g.degrees.array().sqrt().inverse();
  Eigen::MatrixXd l(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // inv_sqrt(i) * inv_sqrt(j) is commutative, so L is exactly symmetric.
      const double v = -g.adjacency(i, j) * (inv_sqrt(i) * inv_sqrt(j));
      l(i, j) = (i == j) ? 1.0 + v : v;
    }
  }
  return l;
}

namespace {

// Induced subgraph on `kept` node indices, dropping the isolated ones.
AugGraph induced_subgraph(const AugGraph& g, const std::vector<int>& kept_in,
                          const char* empty_msg) {
  Eigen::MatrixXd sub(kept_in.size(), kept_in.size());
  for (std::size_t j = 0; j < kept_in.size(); ++j)
    for (std::size_t i = 0; i < kept_in.size(); ++i)
      sub(i, j) = g.adjacency(kept_in[i], kept_in[j]);

  // Isolation here means no incident mass at all (self-loops count).
  std::vector<int> kept;
  std::int64_t dropped = 0;
  for (std::size_t i = 0; i < kept_in.size(); ++i) {
    if (sub.col(static_cast<Eigen::Index>(i)).sum() > 0.0)
      kept.push_back(static_cast<int>(i));
    else
      ++dropped;
  }
  if (kept.empty()) throw std::runtime_error(empty_msg);

  AugGraph out;
  out.grid = g.grid;
  out.num_classes = g.num_classes;
  out.dropped_nodes = dropped;
  const int m = static_cast<int>(kept.size());
  out.adjacency.resize(m, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) out.adjacency(i, j) = sub(kept[i], kept[j]);
  out.ids.reserve(m);
  out.positions.reserve(m);
  out.labels.reserve(m);
  for (int i : kept) {
    out.ids.push_back(g.ids[kept_in[i]]);
    out.positions.push_back(g.positions[kept_in[i]]);
    out.labels.push_back(g.labels[kept_in[i]]);
  }
  out.degrees = out.adjacency.rowwise().sum();
  out.d_min = out.degrees.minCoeff();
  return out;
}

}  // namespace

AugGraph subsample_vertices(const AugGraph& g, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio <= 1.0))
    throw std::invalid_argument("subsample_vertices: ratio outside (0,1]");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> kept;
  for (int i = 0; i < g.size(); ++i)
    if (unit(rng) < ratio) kept.push_back(i);
  if (kept.empty()) throw std::runtime_error("subsample_vertices: empty subgraph");
  return induced_subgraph(g, kept, "subsample_vertices: empty subgraph");
}

AugGraph subsample_edges(const AugGraph& g, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("subsample_edges: p outside (0,1]");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  AugGraph pruned = g;
  // Edges enumerated in row-major upper-triangle order (loops included);
  // both symmetric entries share one coin.
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i; j < g.size(); ++j) {
      if (g.adjacency(i, j) == 0.0) continue;
      if (unit(rng) >= p) {
        pruned.adjacency(i, j) = 0.0;
        pruned.adjacency(j, i) = 0.0;
      }
    }
  }
  std::vector<int> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return induced_subgraph(pruned, all, "subsample_edges: empty subgraph");
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int count = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++count;
    return count;
  }
};

}  // namespace

int component_count(const AugGraph& g) {
  const int n = g.size();
  UnionFind uf(n);
  for (int j = 0; j < n; ++j)
    for (int i = j + 1; i < n; ++i)
      if (g.adjacency(i, j) > 0.0) uf.unite(i, j);
  return uf.components();
}

int component_count(const FactoredAugGraph& fg) {
  // A_{c,c'} > 0 exactly when some positive-weight point covers both cells,
  // so uniting each point's support reproduces dense connectivity.
  UnionFind uf(fg.size());
  for (std::size_t i = 0; i < fg.point_masses.size(); ++i) {
    if (fg.point_weights[i] == 0.0 || fg.point_masses[i].empty()) continue;
    const int first = fg.point_masses[i].front().first;
    for (const auto& [node, mass] : fg.point_masses[i]) uf.unite(first, node);
  }
  return uf.components();
}

}  // namespace aglab
