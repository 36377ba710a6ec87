#include "aglab/geometry.hpp"

#include <algorithm>

namespace aglab {

Grid covering_grid(const std::vector<Vec2>& points, double pad, double cell, double base_x0,
                   double base_y0, double base_x1, double base_y1) {
  if (!(cell > 0.0)) throw std::invalid_argument("covering_grid: cell size must be > 0");
  double min_x = base_x0, max_x = base_x1, min_y = base_y0, max_y = base_y1;
  for (const Vec2& p : points) {
    min_x = std::min(min_x, p.x - pad - cell);
    max_x = std::max(max_x, p.x + pad + cell);
    min_y = std::min(min_y, p.y - pad - cell);
    max_y = std::max(max_y, p.y + pad + cell);
  }
  // Expand outward in whole cells from the base origin so cell boundaries
  // stay aligned across clouds sharing a base domain.
  const auto cells_below = [cell](double origin, double need) {
    return static_cast<long>(std::ceil(std::max(0.0, origin - need) / cell));
  };
  const auto cells_above = [cell](double origin, double need) {
    return static_cast<long>(std::ceil(std::max(0.0, need - origin) / cell));
  };
  const double x0 = base_x0 - cells_below(base_x0, min_x) * cell;
  const double y0 = base_y0 - cells_below(base_y0, min_y) * cell;
  const long nx = cells_above(x0, max_x);
  const long ny = cells_above(y0, max_y);
  return Grid(x0, y0, cell, static_cast<int>(std::max(1L, nx)), static_cast<int>(std::max(1L, ny)));
}

}  // namespace aglab
