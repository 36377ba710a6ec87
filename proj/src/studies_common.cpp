#include "aglab/studies.hpp"

#include <algorithm>
#include <stdexcept>

#include "aglab/studies_detail.hpp"

namespace aglab {

bool StudyResult::all_passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const Assertion& a) { return a.status != Assertion::Status::Fail; });
}

nlohmann::ordered_json StudyResult::summary(const Config& cfg) const {
  nlohmann::ordered_json j;
  j["study"] = name;
  j["config_hash"] = cfg.hash_hex();
  j["master_seed"] = cfg.seed("master_seed");
  j["all_passed"] = all_passed();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& a : assertions) {
    nlohmann::ordered_json ja;
    ja["name"] = a.name;
    ja["status"] = a.status == Assertion::Status::Pass     ? "pass"
                   : a.status == Assertion::Status::Fail   ? "fail"
                                                           : "skipped";
    ja["detail"] = a.detail;
    arr.push_back(ja);
  }
  j["assertions"] = arr;
  if (!extra.is_null()) j["results"] = extra;
  j["config"] = cfg.echo();
  return j;
}

namespace detail {

GaussianMixtureSpec toy_spec(const Config& cfg) {
  return GaussianMixtureSpec::two_blob(cfg.number("mean_x"), cfg.number("variance"));
}

Grid study_grid(const Config& cfg, const std::vector<const LabeledPointCloud*>& clouds,
                double radius) {
  const double h = cfg.number("cell_size");
  std::vector<Vec2> all;
  for (const auto* c : clouds) all.insert(all.end(), c->points.begin(), c->points.end());
  const std::string& domain = cfg.raw("domain");
  if (domain == "auto") {
    const bool uniform = cfg.raw("source") == "uniform_square";
    const double b0 = uniform ? 0.0 : -3.0;
    const double b1 = uniform ? 1.0 : 3.0;
    return covering_grid(all, radius, h, b0, b0, b1, b1);
  }
  std::istringstream is(domain);
  double x0, x1, y0, y1;
  if (!(is >> x0 >> x1 >> y0 >> y1))
    throw ConfigError("graph.domain: expected 'auto' or four numbers");
  const int nx = static_cast<int>(std::ceil((x1 - x0) / h - 1e-9));
  const int ny = static_cast<int>(std::ceil((y1 - y0) / h - 1e-9));
  return Grid(x0, y0, h, nx, ny);
}

LabeledPointCloud prefix_cloud(const LabeledPointCloud& cloud, std::size_t n) {
  if (n > cloud.size()) throw std::invalid_argument("prefix_cloud: prefix longer than cloud");
  LabeledPointCloud out;
  out.points.assign(cloud.points.begin(), cloud.points.begin() + n);
  out.labels.assign(cloud.labels.begin(), cloud.labels.begin() + n);
  out.weights.assign(n, n > 0 ? 1.0 / static_cast<double>(n) : 0.0);
  return out;
}

Assertion make_assertion(const std::string& name, bool passed, const std::string& detail) {
  Assertion a;
  a.name = name;
  a.status = passed ? Assertion::Status::Pass : Assertion::Status::Fail;
  a.detail = detail;
  return a;
}

Assertion skip_assertion(const std::string& name, const std::string& why) {
  Assertion a;
  a.name = name;
  a.status = Assertion::Status::Skipped;
  a.detail = why;
  return a;
}

std::vector<std::string> bound_report_header() {
  return {"n",        "r",   "k",     "beta",  "tv",    "alpha",          "alpha_se",
          "lambda_k1", "phi_y", "bound", "empirical_error", "seed"};
}

std::vector<std::string> bound_report_row(const BoundReport& rep) {
  return {std::to_string(rep.n),
          format_double(rep.r),
          std::to_string(rep.k),
          format_double(rep.beta),
          format_double(rep.tv_gap),
          format_double(rep.alpha),
          format_double(rep.alpha_se),
          format_double(rep.lambda_k1),
          format_double(rep.phi),
          format_double(rep.bound_value),
          format_double(rep.empirical_error),
          std::to_string(rep.seed)};
}

}  // namespace detail

StudyResult run_study(const std::string& name, const Config& cfg) {
  if (name == "tv-identity") return run_tv_identity(cfg);
  if (name == "figure5") return run_figure5(cfg);
  if (name == "subsample-spectrum") return run_subsample_spectrum(cfg);
  if (name == "chung-trend") return run_chung_trend(cfg);
  if (name == "bound-validity") return run_bound_validity(cfg);
  throw std::invalid_argument("unknown study '" + name + "'");
}

std::vector<std::string> study_names() {
  return {"tv-identity", "figure5", "subsample-spectrum", "chung-trend", "bound-validity"};
}

}  // namespace aglab
