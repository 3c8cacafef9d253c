#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "brickwork/rng.hpp"

namespace brickwork {

enum class EnsembleKind { GUE, HaarUnitary, Ginibre, NormalMatrix };

// Variance bookkeeping is tagged rather than implied so an unscaled mode can
// be added without touching call sites. MatrixScaled is the convention used
// throughout: Gaussian Hermitian weight exp(-(N/2) tr H^2), i.e.
// E[H_ij H_kl] = delta_il delta_jk / N, and normal-matrix eigenvalue weight
// exp(-(N/2) |z|^2).
enum class VarianceConvention { MatrixScaled };

struct EnsembleConfig {
  EnsembleKind kind = EnsembleKind::GUE;
  int N = 3;
  std::uint64_t seed = 0;
  VarianceConvention variance = VarianceConvention::MatrixScaled;
};

// Hermitian with E[H_ij H_kl] = delta_il delta_jk / N: diagonal N(0, 1/N),
// off-diagonal re/im N(0, 1/(2N)). Draw order: rows, then columns >= row.
Eigen::MatrixXcd sample_gue(int N, SplitMix64& rng);

// iid complex Gaussian entries with E[|G_ij|^2] = entry_variance, row-major
// draw order.
Eigen::MatrixXcd sample_ginibre(int N, double entry_variance, SplitMix64& rng);

// Haar unitary: Ginibre, QR, then column phases fixed so the R diagonal is
// positive real.
Eigen::MatrixXcd sample_haar_unitary(int N, SplitMix64& rng);

// Random normal matrix M = U diag(z) U*: U Haar, z the eigenvalues of a
// Ginibre matrix with entry variance 2/N, which carries the eigenvalue
// density prod |z_i - z_j|^2 prod exp(-(N/2)|z_i|^2).
Eigen::MatrixXcd sample_normal_matrix(int N, SplitMix64& rng);

Eigen::MatrixXcd sample_ensemble(const EnsembleConfig& config, SplitMix64& rng);

}  // namespace brickwork
