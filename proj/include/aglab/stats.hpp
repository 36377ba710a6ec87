#pragma once

#include <string>
#include <vector>

namespace aglab {

// Spearman rank correlation with average ranks on ties. A curve with zero
// variance on either side is treated as perfectly concordant (rho = 1):
// the monotone-trend checks use this for flat segments of exact zeros.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

// Number of strictly decreasing adjacent steps.
int count_inversions(const std::vector<double>& v);

// Trend assertion used by the studies. An exactly nondecreasing curve
// (drops no larger than the noise floor) passes outright; otherwise the
// Spearman rho against the index sequence must clear min_rho with at most
// max_inversions adjacent drops.
struct TrendCheck {
  bool passed = false;
  double rho = 0.0;
  int inversions = 0;
  std::string detail;
};

TrendCheck check_nondecreasing(const std::vector<double>& curve, double min_rho,
                               int max_inversions = 1, double noise_floor = 1e-12);

double mean(const std::vector<double>& v);

}  // namespace aglab
