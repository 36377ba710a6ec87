#pragma once

// Shared plumbing for the study implementations; not part of the public
// surface.

#include <sstream>
#include <string>
#include <vector>

#include "aglab/cloud.hpp"
#include "aglab/config.hpp"
#include "aglab/geometry.hpp"
#include "aglab/io.hpp"
#include "aglab/metrics.hpp"
#include "aglab/studies.hpp"

namespace aglab::detail {

// Seed-stream tags so every study draws from disjoint substreams of the
// master seed.
enum SeedTag : std::uint64_t {
  kTagCloud = 0x10,
  kTagEval = 0x11,
  kTagCell = 0x12,
  kTagTrial = 0x13,
  kTagBase = 0x14,
};

GaussianMixtureSpec toy_spec(const Config& cfg);

// Grid from [graph].domain: explicit bounds, or the covering grid aligned to
// the source's base domain.
Grid study_grid(const Config& cfg, const std::vector<const LabeledPointCloud*>& clouds,
                double radius);

// First n points with uniform weights (an i.i.d. prefix is an i.i.d. sample).
LabeledPointCloud prefix_cloud(const LabeledPointCloud& cloud, std::size_t n);

Assertion make_assertion(const std::string& name, bool passed, const std::string& detail);
Assertion skip_assertion(const std::string& name, const std::string& why);

std::vector<std::string> bound_report_header();
std::vector<std::string> bound_report_row(const BoundReport& rep);

}  // namespace aglab::detail
