#pragma once

#include <string>
#include <vector>

namespace aglab {

// Minimal static line charts, enough for the study panels. Non-finite
// points break the polyline.
struct Series {
  std::string name;
  std::vector<double> xs;
  std::vector<double> ys;
};

struct ChartSpec {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  std::vector<Series> series;
  std::vector<std::pair<double, double>> dots;  // highlighted points
};

std::string render_line_chart(const ChartSpec& chart, int width = 640, int height = 420);

}  // namespace aglab
