#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace aglab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_dist(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Uniform-disk augmentation kernel of radius r. r == 0 means the point-mass
// kernel (no augmentation).
struct DiskAugmentation {
  double radius = 0.0;

  explicit DiskAugmentation(double r) : radius(r) {
    if (!(r >= 0.0)) throw std::invalid_argument("DiskAugmentation: radius must be >= 0");
  }
};

// Axis-aligned cell grid tiling [x0, x0 + nx*h] x [y0, y0 + ny*h] exactly.
// Cells are indexed row-major: id = iy * nx + ix.
class Grid {
 public:
  Grid(double x0, double y0, double cell, int nx, int ny)
      : x0_(x0), y0_(y0), h_(cell), nx_(nx), ny_(ny) {
    if (!(cell > 0.0)) throw std::invalid_argument("Grid: cell size must be > 0");
    if (nx < 1 || ny < 1) throw std::invalid_argument("Grid: degenerate bounds");
  }

  double x0() const { return x0_; }
  double y0() const { return y0_; }
  double x1() const { return x0_ + nx_ * h_; }
  double y1() const { return y0_ + ny_ * h_; }
  double cell_size() const { return h_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  std::int64_t cell_count() const { return static_cast<std::int64_t>(nx_) * ny_; }

  bool contains(const Vec2& p) const {
    return p.x >= x0() && p.x <= x1() && p.y >= y0() && p.y <= y1();
  }

  // True iff the whole disk(center, r) lies inside the grid domain.
  bool contains_disk(const Vec2& c, double r) const {
    return c.x - r >= x0() && c.x + r <= x1() && c.y - r >= y0() && c.y + r <= y1();
  }

  std::int64_t cell_id(int ix, int iy) const { return static_cast<std::int64_t>(iy) * nx_ + ix; }
  int cell_ix(std::int64_t id) const { return static_cast<int>(id % nx_); }
  int cell_iy(std::int64_t id) const { return static_cast<int>(id / nx_); }

  // Cell holding p. Points on the far domain edge belong to the last cell.
  std::int64_t locate(const Vec2& p) const {
    if (!contains(p)) throw std::out_of_range("Grid: point out of domain");
    int ix = static_cast<int>(std::floor((p.x - x0_) / h_));
    int iy = static_cast<int>(std::floor((p.y - y0_) / h_));
    if (ix >= nx_) ix = nx_ - 1;
    if (iy >= ny_) iy = ny_ - 1;
    if (ix < 0) ix = 0;
    if (iy < 0) iy = 0;
    return cell_id(ix, iy);
  }

  Vec2 cell_center(std::int64_t id) const {
    return {x0_ + (cell_ix(id) + 0.5) * h_, y0_ + (cell_iy(id) + 0.5) * h_};
  }

  Vec2 cell_origin(std::int64_t id) const {
    return {x0_ + cell_ix(id) * h_, y0_ + cell_iy(id) * h_};
  }

 private:
  double x0_, y0_, h_;
  int nx_, ny_;
};

// Smallest grid aligned to (base_x0, base_y0) whose cells cover all points
// dilated by `pad`. The base origin anchors cell boundaries so grids built
// for related clouds share cell alignment.
Grid covering_grid(const std::vector<Vec2>& points, double pad, double cell,
                   double base_x0 = -3.0, double base_y0 = -3.0,
                   double base_x1 = 3.0, double base_y1 = 3.0);

}  // namespace aglab
