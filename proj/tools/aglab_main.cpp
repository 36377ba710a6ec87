// aglab: augmentation-graph laboratory CLI.
// Subcommands: study, bound, graph-spectrum. Exit codes: 0 = all assertions
// pass, 1 = a scientific assertion failed, 2 = usage or config error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"

#include "aglab/config.hpp"
#include "aglab/distribution.hpp"
#include "aglab/graph.hpp"
#include "aglab/io.hpp"
#include "aglab/metrics.hpp"
#include "aglab/parallel.hpp"
#include "aglab/rng.hpp"
#include "aglab/spectral.hpp"
#include "aglab/studies.hpp"
#include "aglab/studies_detail.hpp"

namespace {

aglab::Config load_config(const std::string& config_path,
                          const std::vector<std::string>& overrides, const std::string& out_dir,
                          int workers, bool svg) {
  aglab::Config cfg =
      config_path.empty() ? aglab::Config::defaults() : aglab::Config::from_file(config_path);
  for (const std::string& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw aglab::ConfigError("--set expects key=value, got '" + kv + "'");
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!out_dir.empty()) cfg.set("directory", out_dir);
  if (workers > 0) cfg.set("workers", std::to_string(workers));
  if (svg) cfg.set("svg", "true");
  return cfg;
}

void add_provenance(aglab::CsvTable& table, const aglab::Config& cfg) {
  table.add_comment("config_hash=" + cfg.hash_hex());
  table.add_comment("master_seed=" + cfg.raw("master_seed"));
}

int cmd_study(const std::string& name, const aglab::Config& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  aglab::StudyResult res = aglab::run_study(name, cfg);
  const std::filesystem::path dir = cfg.raw("directory");

  add_provenance(res.table, cfg);
  res.table.write(dir / (res.name + ".csv"));
  aglab::write_text_file(dir / (res.name + ".summary.json"), res.summary(cfg).dump(2) + "\n");
  if (cfg.boolean("svg")) {
    for (std::size_t i = 0; i < res.panels.size(); ++i)
      aglab::write_text_file(dir / (res.name + ".panel" + std::to_string(i + 1) + ".svg"),
                             aglab::render_line_chart(res.panels[i]));
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& a : res.assertions) {
    const char* status = a.status == aglab::Assertion::Status::Pass     ? "PASS"
                         : a.status == aglab::Assertion::Status::Fail   ? "FAIL"
                                                                        : "SKIP";
    std::cout << "[" << status << "] " << res.name << "/" << a.name << ": " << a.detail << "\n";
  }
  std::cout << res.name << ": " << res.table.rows() << " rows -> " << (dir / res.name).string()
            << ".csv (" << aglab::format_sig6(secs) << " s)\n";
  return res.all_passed() ? 0 : 1;
}

int cmd_bound(double alpha, double lambda, double beta, double tv) {
  if (!(lambda > 0.0)) {
    std::cerr << "error: vacuous bound: lambda_{k+1} = 0\n";
    return 2;
  }
  try {
    std::cout << aglab::format_sig6(aglab::error_bound(alpha, lambda, beta, tv)) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_graph_spectrum(const aglab::Config& cfg) {
  using namespace aglab;
  const std::filesystem::path dir = cfg.raw("directory");
  const std::uint64_t master = cfg.seed("master_seed");
  const double r = cfg.number("radius");
  const std::size_t n = static_cast<std::size_t>(cfg.integer("n_points"));

  LabeledPointCloud cloud;
  Labeler labeler = halfplane_labeler();
  const std::string& source = cfg.raw("source");
  if (source == "gaussian_mixture") {
    cloud = sample_gaussian_mixture(detail::toy_spec(cfg), n, derive_seed(master, 0x10));
  } else if (source == "uniform_square") {
    cloud = sample_uniform_square(n, derive_seed(master, 0x10));
    labeler = constant_labeler();
  } else {
    throw ConfigError("data.source must be gaussian_mixture or uniform_square");
  }

  GraphBuildOptions opts;
  opts.supersample = static_cast<int>(cfg.integer("supersample"));
  opts.max_nodes = static_cast<int>(cfg.integer("max_nodes"));
  const Grid grid = detail::study_grid(cfg, {&cloud}, r);
  const FactoredAugGraph fg = build_factored_graph(cloud, DiskAugmentation(r), grid, labeler, opts);

  // Dense route when the graph fits the cap; the exact factored route
  // otherwise. Eigenvalues agree to solver precision.
  Eigen::VectorXd ev;
  std::string mode;
  if (fg.size() <= opts.max_nodes) {
    mode = "dense";
    ev = symmetric_eigenvalues(normalized_laplacian(materialize(fg, opts)));
  } else {
    mode = "factored";
    ev = factored_spectrum(fg, 0, opts.exec).eigenvalues;
  }

  const int count = std::min<int>(50, static_cast<int>(ev.size()));
  CsvTable spec_csv = spectrum_to_csv(ev, count);
  add_provenance(spec_csv, cfg);
  spec_csv.write(dir / "spectrum.csv");

  nlohmann::ordered_json meta;
  meta["config_hash"] = cfg.hash_hex();
  meta["master_seed"] = master;
  meta["mode"] = mode;
  meta["n_nodes"] = fg.size();
  meta["d_min"] = fg.d_min;
  meta["dropped_nodes"] = fg.dropped_nodes;
  meta["component_count"] = component_count(fg);
  meta["grid"] = {{"x0", fg.grid.x0()}, {"y0", fg.grid.y0()}, {"cell_size", fg.grid.cell_size()},
                  {"nx", fg.grid.nx()}, {"ny", fg.grid.ny()}};
  nlohmann::ordered_json lam = nlohmann::ordered_json::array();
  for (int i = 0; i < count; ++i) lam.push_back(ev(i));
  meta["eigenvalues"] = lam;
  write_text_file(dir / "graph.json", meta.dump(2) + "\n");

  std::cout << "graph-spectrum: " << fg.size() << " nodes (" << mode << "), lambda_1="
            << format_sig6(ev(0)) << " -> " << (dir / "spectrum.csv").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"augmentation-graph laboratory"};
  app.require_subcommand(1);

  std::string config_path, out_dir, study_name;
  std::vector<std::string> overrides;
  int workers = 0;
  bool svg = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "INI config file (defaults apply when omitted)");
    sub->add_option("--set", overrides, "override any config key: --set key=value")
        ->take_all();
    sub->add_option("--out", out_dir, "output directory (overrides [output].directory)");
    sub->add_option("--workers", workers, "worker threads (0 = AGLAB_WORKERS env or hardware)");
  };

  CLI::App* study = app.add_subcommand("study", "run a named study and write CSV/JSON outputs");
  std::string names;
  for (const auto& s : aglab::study_names()) names += (names.empty() ? "" : ", ") + s;
  study->add_option("name", study_name, "one of: " + names)->required();
  add_common(study);
  study->add_flag("--svg", svg, "also render line-chart SVG panels");

  double alpha = 0.0, lambda = 0.0, beta = 1.0, tv = 0.0;
  CLI::App* bound = app.add_subcommand("bound", "print the generalization bound value");
  bound->add_option("--alpha", alpha, "labeling error alpha")->required();
  bound->add_option("--lambda", lambda, "lambda_{k+1} of the normalized Laplacian")->required();
  bound->add_option("--beta", beta, "real-data mixing ratio");
  bound->add_option("--tv", tv, "TV distance between real and generated distributions");

  CLI::App* gspec =
      app.add_subcommand("graph-spectrum", "build one augmentation graph and write its spectrum");
  add_common(gspec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (bound->parsed()) return cmd_bound(alpha, lambda, beta, tv);
    const aglab::Config cfg = load_config(config_path, overrides, out_dir, workers, svg);
    aglab::set_workers(static_cast<int>(cfg.integer("workers")));
    if (study->parsed()) {
      const auto known = aglab::study_names();
      if (std::find(known.begin(), known.end(), study_name) == known.end()) {
        std::cerr << "error: unknown study '" << study_name << "' (expected one of: " << names
                  << ")\n";
        return 2;
      }
      return cmd_study(study_name, cfg);
    }
    if (gspec->parsed()) return cmd_graph_spectrum(cfg);
  } catch (const aglab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
