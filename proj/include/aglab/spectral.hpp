#pragma once

#include <Eigen/Dense>

#include "aglab/graph.hpp"

namespace aglab {

// Full dense symmetric eigendecomposition, eigenvalues ascending,
// eigenvector signs fixed (largest-magnitude entry positive).
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, same order
  double residual = 0.0;         // ||L - V diag(l) V^T||_F

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

Spectrum eigendecompose(const Eigen::MatrixXd& sym);

// Eigenvalues-only fast path (no eigenvectors, no residual); same ascending
// order as eigendecompose.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& sym);

// lambda_{k+1}: the (k+1)-th smallest eigenvalue (1-indexed).
double lambda_k_plus_1(const Spectrum& s, int k);
double lambda_k_plus_1(const Eigen::VectorXd& ascending_eigenvalues, int k);

// min{lambda_2, 2 - lambda_N}.
double spectral_gap(const Spectrum& s);
double spectral_gap(const Eigen::VectorXd& ascending_eigenvalues);

// Spectrum of the normalized Laplacian of a factored graph, computed
// exactly through the rank-P reduced problem: with G = D^{-1/2} M W^{1/2},
// the nonzero eigenvalues of D^{-1/2} A D^{-1/2} are those of S = G^T G,
// and the remaining N - rank eigenvalues of L are exactly 1. Top
// eigenvectors are recovered as G u / sqrt(gamma). Matches eigendecompose
// on the materialized graph to solver precision.
struct FactoredSpectrum {
  Eigen::VectorXd eigenvalues;    // all N, ascending (Laplacian)
  Eigen::VectorXd top_gammas;     // leading eigenvalues of D^{-1/2} A D^{-1/2}, descending
  Eigen::MatrixXd top_vectors;    // unit eigenvectors for top_gammas (N x k)
  int size() const { return static_cast<int>(eigenvalues.size()); }
};

FactoredSpectrum factored_spectrum(const FactoredAugGraph& fg, int top_k,
                                   Exec exec = Exec::Parallel);

// Per-node features f(x) in R^k; the closed-form minimizer of the
// matrix-factorization (spectral contrastive) loss at dimension k:
//   f*(x) = D_xx^{-1/2} (sqrt(g_1) v_1(x), ..., sqrt(g_k) v_k(x)),
// with g_i = 1 - lambda_i clipped at 0.
struct Embedding {
  Eigen::MatrixXd features;  // n x k
  int k = 0;
  Eigen::VectorXd degrees;
};

Embedding optimal_embedding(const AugGraph& g, const Spectrum& laplacian_spectrum, int k);
Embedding optimal_embedding(const FactoredAugGraph& fg, const FactoredSpectrum& s, int k);

// || D^{-1/2} A D^{-1/2} - F F^T ||_F^2 with rows F_x = sqrt(D_xx) f(x).
double loss_mf(const Embedding& emb, const AugGraph& g);

}  // namespace aglab
