// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Runs against the built-in default configuration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "aglab/cloud.hpp"
#include "aglab/config.hpp"
#include "aglab/graph.hpp"
#include "aglab/io.hpp"
#include "aglab/metrics.hpp"
#include "aglab/parallel.hpp"
#include "aglab/rng.hpp"
#include "aglab/spectral.hpp"
#include "aglab/studies.hpp"

using namespace aglab;

namespace {

struct Line {
  bool passed;
  std::string text;
};

std::vector<Line> g_lines;

void report(int id, const std::string& name, bool passed, const std::string& detail,
            double seconds) {
  std::ostringstream os;
  os << "[" << (passed ? "PASS" : "FAIL") << "] criterion " << id << " (" << name << "): "
     << detail << " [" << format_sig6(seconds) << " s]";
  g_lines.push_back({passed, os.str()});
  std::printf("%s\n", os.str().c_str());
  std::fflush(stdout);
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const Assertion* find_assertion(const StudyResult& res, const std::string& name) {
  for (const auto& a : res.assertions)
    if (a.name == name) return &a;
  return nullptr;
}

bool assertion_passed(const StudyResult& res, const std::string& name) {
  const Assertion* a = find_assertion(res, name);
  return a != nullptr && a->status == Assertion::Status::Pass;
}

// 1. Theorem-1 exactness on random triples.
void criterion_1() {
  Timer t;
  Config cfg = Config::defaults();
  const auto res = run_tv_identity(cfg);
  const double max_res = res.extra["max_residual"].get<double>();
  const double secs = t.seconds();
  report(1, "tv identity exact", res.all_passed() && max_res <= 1e-12 && secs < 1.0,
         "max residual " + format_double(max_res) + " <= 1e-12 over 100 triples, 100 atoms",
         secs);
}

// 2. Monte-Carlo alpha against the closed form across the r grid.
void criterion_2() {
  Timer t;
  const auto cloud = sample_gaussian_mixture(GaussianMixtureSpec::two_blob(1.0, 0.7), 300, 2024);
  const Labeler lab = halfplane_labeler();
  bool ok = true;
  double worst_z = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const double r = 0.1 * i;
    const auto est = alpha_mc(cloud, DiskAugmentation(r), lab, 100000, 7 + i);
    const double exact = alpha_analytic(cloud, r);
    const double z = est.std_error > 0.0 ? std::abs(est.value - exact) / est.std_error
                                         : (est.value == exact ? 0.0 : 1e9);
    worst_z = std::max(worst_z, z);
    ok = ok && z <= 3.0;
  }
  const double secs = t.seconds();
  report(2, "alpha mc vs analytic", ok && secs < 10.0,
         "max |mc - analytic| / SE = " + format_sig6(worst_z) + " <= 3 for r in {0.1..1.0}",
         secs);
}

StudyResult run_default(const std::string& name) { return run_study(name, Config::defaults()); }

// 3. Figure-5 qualitative reproduction on the default grids.
void criterion_3(const StudyResult& fig5, double secs) {
  const bool ok = assertion_passed(fig5, "lambda_vs_n_nondecreasing") &&
                  assertion_passed(fig5, "lambda_vs_r_nondecreasing") &&
                  assertion_passed(fig5, "alpha_vs_r_nondecreasing") &&
                  assertion_passed(fig5, "optimal_r_nonincreasing");
  report(3, "figure5 trends", ok && secs < 600.0,
         "panels (a)-(d) on n in {50,100,200,400}, r in {0.1..1.0}, k=2, h=0.05", secs);
}

// 4. Theorem-2 validity across all bound-validity cells.
void criterion_4(const StudyResult& bound, double secs) {
  const Assertion* a = find_assertion(bound, "bound_holds_every_cell");
  report(4, "bound validity", a != nullptr && a->status == Assertion::Status::Pass,
         a ? a->detail : "assertion missing", secs);
}

// 5. Appendix-D inequalities on every cell of both studies.
void criterion_5(const StudyResult& fig5, const StudyResult& bound) {
  Timer t;
  const bool ok = assertion_passed(fig5, "phi_le_two_alpha") &&
                  assertion_passed(fig5, "majority_vote_factor_two") &&
                  assertion_passed(bound, "phi_le_two_alpha") &&
                  assertion_passed(bound, "majority_vote_factor_two");
  report(5, "appendix-D inequalities", ok,
         "phi <= 2 alpha_grid + 1e-6 and vote <= 2 aug + 0.01 on every cell", t.seconds());
}

// 6. Appendix-B eigenvalue trend under vertex subsampling.
void criterion_6() {
  Timer t;
  const auto res = run_default("subsample-spectrum");
  const double secs = t.seconds();
  const bool ok = assertion_passed(res, "mean_eigenvalue_nondecreasing_in_ratio") &&
                  assertion_passed(res, "lambda1_zero");
  const Assertion* a = find_assertion(res, "mean_eigenvalue_nondecreasing_in_ratio");
  report(6, "subsample spectrum trend", ok && secs < 300.0, a ? a->detail : "assertion missing",
         secs);
}

// 7. Chung-lemma gap trend.
void criterion_7() {
  Timer t;
  const auto res = run_default("chung-trend");
  const bool ok = assertion_passed(res, "deficit_smaller_at_p09_than_p03") &&
                  assertion_passed(res, "deficit_zero_at_p1");
  const Assertion* a = find_assertion(res, "deficit_smaller_at_p09_than_p03");
  report(7, "spectral gap deficit", ok, a ? a->detail : "assertion missing", t.seconds());
}

// Random symmetric nonnegative adjacency with strictly positive degrees;
// indefinite normalized adjacencies exercise the gamma clipping too.
AugGraph random_graph(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  AugGraph g;
  g.ids.resize(n);
  g.positions.assign(n, {0, 0});
  g.labels.assign(n, 0);
  g.adjacency = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      if (unit(rng) < 0.15) g.adjacency(i, j) = g.adjacency(j, i) = unit(rng);
    }
    if (g.adjacency.col(j).sum() == 0.0) g.adjacency(j, j) = 0.5;
  }
  g.degrees = g.adjacency.rowwise().sum();
  g.d_min = g.degrees.minCoeff();
  return g;
}

// 8. Embedding optimality and eigensolver sanity.
void criterion_8() {
  Timer t;
  bool opt_ok = true, range_ok = true, mult_ok = true;
  auto rng = make_rng(4242);
  std::normal_distribution<double> gauss;

  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_graph(20 + 18 * trial, rng);
    const auto spec = eigendecompose(normalized_laplacian(g));
    range_ok = range_ok && spec.eigenvalues(0) >= -1e-8 && std::abs(spec.eigenvalues(0)) <= 1e-8 &&
               spec.eigenvalues(g.size() - 1) <= 2.0 + 1e-8;

    const int k = 3;
    const auto emb = optimal_embedding(g, spec, k);
    const double opt_loss = loss_mf(emb, g);
    for (int t2 = 0; t2 < 100; ++t2) {
      Embedding rand_emb;
      rand_emb.k = k;
      rand_emb.degrees = g.degrees;
      rand_emb.features.resize(g.size(), k);
      for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < k; ++j) rand_emb.features(i, j) = gauss(rng);
      if (!(opt_loss < loss_mf(rand_emb, g))) opt_ok = false;
    }
  }

  // constructed multi-component graphs: zero multiplicity == components
  std::uniform_int_distribution<int> comp_pick(2, 5);
  std::uniform_int_distribution<int> size_pick(3, 8);
  std::uniform_real_distribution<double> wpick(0.2, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int comps = comp_pick(rng);
    std::vector<Eigen::MatrixXd> blocks;
    int total = 0;
    for (int c = 0; c < comps; ++c) {
      const int m = size_pick(rng);
      Eigen::MatrixXd block(m, m);
      for (int j = 0; j < m; ++j)
        for (int i = 0; i <= j; ++i) block(i, j) = block(j, i) = wpick(rng);
      blocks.push_back(block);
      total += m;
    }
    AugGraph g;
    g.ids.resize(total);
    g.positions.assign(total, {0, 0});
    g.labels.assign(total, 0);
    g.adjacency = Eigen::MatrixXd::Zero(total, total);
    int at = 0;
    for (const auto& b : blocks) {
      g.adjacency.block(at, at, b.rows(), b.cols()) = b;
      at += static_cast<int>(b.rows());
    }
    g.degrees = g.adjacency.rowwise().sum();
    g.d_min = g.degrees.minCoeff();
    if (component_count(g) != comps) mult_ok = false;
    const auto ev = symmetric_eigenvalues(normalized_laplacian(g));
    int zeros = 0;
    for (int i = 0; i < ev.size(); ++i)
      if (std::abs(ev(i)) <= 1e-8) ++zeros;
    if (zeros != comps) mult_ok = false;
    if (!(ev(0) >= -1e-8 && ev(ev.size() - 1) <= 2.0 + 1e-8)) range_ok = false;
  }

  report(8, "embedding optimality + eigensolver sanity", opt_ok && range_ok && mult_ok,
         std::string("Eckart-Young beats 100 random embeddings on 10 graphs; ") +
             "spectra in [-1e-8, 2+1e-8]; zero multiplicity = components on 20 graphs",
         t.seconds());
}

// 9. Byte-identical reruns (CSV and JSON) for every study.
void criterion_9() {
  Timer t;
  const auto dir = std::filesystem::temp_directory_path() / "aglab_acceptance_det";
  std::filesystem::create_directories(dir);

  Config fast = Config::defaults();
  fast.set("n_grid", "50 100");
  fast.set("r_grid", "0.3 0.6");
  fast.set("n_eval", "300");
  fast.set("subsample_n", "600");
  fast.set("trials", "2");
  fast.set("chung_trials", "3");

  bool ok = true;
  std::string detail;
  for (const std::string& name : study_names()) {
    std::string first_csv, first_json;
    for (int round = 0; round < 2; ++round) {
      const auto res = run_study(name, fast);
      CsvTable table = res.table;
      table.add_comment("config_hash=" + fast.hash_hex());
      table.add_comment("master_seed=" + fast.raw("master_seed"));
      const auto csv_path = dir / (name + ".csv");
      const auto json_path = dir / (name + ".summary.json");
      table.write(csv_path);
      write_text_file(json_path, res.summary(fast).dump(2) + "\n");
      std::ifstream ic(csv_path, std::ios::binary), ij(json_path, std::ios::binary);
      std::stringstream sc, sj;
      sc << ic.rdbuf();
      sj << ij.rdbuf();
      if (round == 0) {
        first_csv = sc.str();
        first_json = sj.str();
      } else if (first_csv != sc.str() || first_json != sj.str()) {
        ok = false;
        detail += name + " differs; ";
      }
    }
  }
  if (ok) detail = "all five studies byte-identical on rerun";
  report(9, "determinism", ok, detail, t.seconds());
}

}  // namespace

int main() {
  set_workers(0);
  criterion_1();
  criterion_2();

  Timer t3;
  const StudyResult fig5 = run_default("figure5");
  const double fig5_secs = t3.seconds();
  Timer t4;
  const StudyResult bound = run_default("bound-validity");
  const double bound_secs = t4.seconds();

  criterion_3(fig5, fig5_secs);
  criterion_4(bound, bound_secs);
  criterion_5(fig5, bound);
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();

  int failed = 0;
  for (const auto& line : g_lines)
    if (!line.passed) ++failed;
  if (failed > 0) {
    std::printf("%d criterion(s) FAILED\n", failed);
    return 1;
  }
  std::printf("all %zu criteria passed\n", g_lines.size());
  return 0;
}
