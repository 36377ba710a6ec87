#include "aglab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aglab {

namespace {

// Deterministic sign convention: the largest-magnitude entry of each column
// is positive (first index wins magnitude ties).
void fix_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index at = 0;
    vectors.col(j).cwiseAbs().maxCoeff(&at);
    if (vectors(at, j) < 0.0) vectors.col(j) = -vectors.col(j);
  }
}

}  // namespace

Spectrum eigendecompose(const Eigen::MatrixXd& sym) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("eigendecompose: matrix not square");
  if (!sym.allFinite()) throw std::invalid_argument("eigendecompose: non-finite entries");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecompose: solver failed");

  Spectrum s;
  s.eigenvalues = solver.eigenvalues();  // ascending
  s.eigenvectors = solver.eigenvectors();
  fix_signs(s.eigenvectors);
  s.residual = (sym - s.eigenvectors * s.eigenvalues.asDiagonal() * s.eigenvectors.transpose())
                   .norm();
  return s;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& sym) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("eigendecompose: matrix not square");
  if (!sym.allFinite()) throw std::invalid_argument("eigendecompose: non-finite entries");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecompose: solver failed");
  return solver.eigenvalues();
}

double lambda_k_plus_1(const Eigen::VectorXd& ascending_eigenvalues, int k) {
  if (k < 0 || k + 1 > ascending_eigenvalues.size())
    throw std::invalid_argument("lambda_k_plus_1: k too large for graph");
  return ascending_eigenvalues(k);
}

double lambda_k_plus_1(const Spectrum& s, int k) { return lambda_k_plus_1(s.eigenvalues, k); }

double spectral_gap(const Eigen::VectorXd& ev) {
  if (ev.size() < 2) throw std::invalid_argument("spectral_gap: need at least 2 nodes");
  return std::min(ev(1), 2.0 - ev(ev.size() - 1));
}

double spectral_gap(const Spectrum& s) { return spectral_gap(s.eigenvalues); }

FactoredSpectrum factored_spectrum(const FactoredAugGraph& fg, int top_k, Exec exec) {
  const int n = fg.size();
  const int p = static_cast<int>(fg.point_masses.size());
  if (n < 1) throw std::invalid_argument("factored_spectrum: empty graph");
  if (top_k < 0 || top_k > n) throw std::invalid_argument("factored_spectrum: bad top_k");

  // G = D^{-1/2} M W^{1/2}, columns indexed by raw points.
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, p);
  const Eigen::VectorXd inv_sqrt_deg = fg.degrees.array().sqrt().inverse();
  for (int i = 0; i < p; ++i) {
    const double sw = std::sqrt(fg.point_weights[i]);
    for (const auto& [node, mass] : fg.point_masses[i]) g(node, i) = inv_sqrt_deg(node) * mass * sw;
  }

  const Eigen::MatrixXd s = kernels::gram(g, exec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
  if (solver.info() != Eigen::Success) throw std::runtime_error("factored_spectrum: solver failed");

  // Gram eigenvalues, descending; only the top min(n, p) can be nonzero
  // eigenvalues of the normalized adjacency, the rest of its spectrum is an
  // exact zero block (Laplacian eigenvalue 1).
  std::vector<double> gammas(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
  std::reverse(gammas.begin(), gammas.end());
  const int rank_cap = std::min(n, p);
  gammas.resize(rank_cap);

  FactoredSpectrum out;
  out.eigenvalues.resize(n);
  {
    std::vector<double> lams;
    lams.reserve(n);
    for (double gm : gammas) lams.push_back(1.0 - gm);
    for (int i = rank_cap; i < n; ++i) lams.push_back(1.0);
    std::sort(lams.begin(), lams.end());
    for (int i = 0; i < n; ++i) out.eigenvalues(i) = lams[i];
  }

  const int k = std::min(top_k, rank_cap);
  out.top_gammas.resize(top_k);
  out.top_vectors = Eigen::MatrixXd::Zero(n, top_k);
  for (int j = 0; j < top_k; ++j) {
    out.top_gammas(j) = j < k ? gammas[j] : 0.0;
    if (j < k && gammas[j] > 1e-14) {
      // Unit eigenvector of the normalized adjacency: G u / sqrt(gamma).
      const Eigen::VectorXd u = solver.eigenvectors().col(p - 1 - j);
      out.top_vectors.col(j) = g * u / std::sqrt(gammas[j]);
    }
  }
  fix_signs(out.top_vectors);
  return out;
}

Embedding optimal_embedding(const AugGraph& g, const Spectrum& laplacian_spectrum, int k) {
  const int n = g.size();
  if (k < 1 || k > n) throw std::invalid_argument("optimal_embedding: k outside [1, N]");
  Embedding emb;
  emb.k = k;
  emb.degrees = g.degrees;
  emb.features.resize(n, k);
  const Eigen::VectorXd inv_sqrt_deg = g.degrees.array().sqrt().inverse();
  for (int j = 0; j < k; ++j) {
    const double gamma = std::max(0.0, 1.0 - laplacian_spectrum.eigenvalues(j));
    emb.features.col(j) =
        std::sqrt(gamma) * inv_sqrt_deg.cwiseProduct(laplacian_spectrum.eigenvectors.col(j));
  }
  return emb;
}

Embedding optimal_embedding(const FactoredAugGraph& fg, const FactoredSpectrum& s, int k) {
  const int n = fg.size();
  if (k < 1 || k > n) throw std::invalid_argument("optimal_embedding: k outside [1, N]");
  if (k > s.top_vectors.cols())
    throw std::invalid_argument("optimal_embedding: spectrum holds fewer than k vectors");
  Embedding emb;
  emb.k = k;
  emb.degrees = fg.degrees;
  emb.features.resize(n, k);
  const Eigen::VectorXd inv_sqrt_deg = fg.degrees.array().sqrt().inverse();
  for (int j = 0; j < k; ++j) {
    const double gamma = std::max(0.0, s.top_gammas(j));
    emb.features.col(j) = std::sqrt(gamma) * inv_sqrt_deg.cwiseProduct(s.top_vectors.col(j));
  }
  return emb;
}

double loss_mf(const Embedding& emb, const AugGraph& g) {
  const int n = g.size();
  if (emb.features.rows() != n) throw std::invalid_argument("loss_mf: dimension mismatch");
  const Eigen::VectorXd sqrt_deg = g.degrees.array().sqrt();
  const Eigen::MatrixXd f = sqrt_deg.asDiagonal() * emb.features;
  const Eigen::VectorXd inv_sqrt_deg = g.degrees.array().sqrt().inverse();
  const Eigen::MatrixXd abar =
      inv_sqrt_deg.asDiagonal() * g.adjacency * inv_sqrt_deg.asDiagonal();
  return (abar - f * f.transpose()).squaredNorm();
}

}  // namespace aglab
