#include "brickwork/ensembles.hpp"

#include <cmath>

#include "brickwork/rational.hpp"

namespace brickwork {

Eigen::MatrixXcd sample_gue(int N, SplitMix64& rng) {
  if (N < 1) throw validation_error("matrix size must be positive");
  Eigen::MatrixXcd H(N, N);
  const double diag_sd = 1.0 / std::sqrt(static_cast<double>(N));
  const double off_sd = 1.0 / std::sqrt(2.0 * static_cast<double>(N));
  for (int i = 0; i < N; ++i) {
    H(i, i) = std::complex<double>(diag_sd * rng.next_gaussian(), 0.0);
    for (int j = i + 1; j < N; ++j) {
      const double re = off_sd * rng.next_gaussian();
      const double im = off_sd * rng.next_gaussian();
      H(i, j) = std::complex<double>(re, im);
      H(j, i) = std::conj(H(i, j));
    }
  }
  return H;
}

Eigen::MatrixXcd sample_ginibre(int N, double entry_variance, SplitMix64& rng) {
  if (N < 1) throw validation_error("matrix size must be positive");
  Eigen::MatrixXcd G(N, N);
  const double scale = std::sqrt(entry_variance);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) G(i, j) = scale * rng.next_complex_gaussian();
  return G;
}

Eigen::MatrixXcd sample_haar_unitary(int N, SplitMix64& rng) {
  const Eigen::MatrixXcd G = sample_ginibre(N, 1.0, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  Eigen::MatrixXcd Q = qr.householderQ();
  const Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < N; ++j) {
    const std::complex<double> r = R(j, j);
    const double mag = std::abs(r);
    const std::complex<double> phase = mag > 0.0 ? r / mag : std::complex<double>(1.0, 0.0);
    Q.col(j) *= phase;
  }
  return Q;
}

Eigen::MatrixXcd sample_normal_matrix(int N, SplitMix64& rng) {
  const Eigen::MatrixXcd G = sample_ginibre(N, 2.0 / static_cast<double>(N), rng);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(G, /*computeEigenvectors=*/false);
  const Eigen::VectorXcd z = es.eigenvalues();
  const Eigen::MatrixXcd U = sample_haar_unitary(N, rng);
  return U * z.asDiagonal() * U.adjoint();
}

Eigen::MatrixXcd sample_ensemble(const EnsembleConfig& config, SplitMix64& rng) {
  switch (config.kind) {
    case EnsembleKind::GUE:
      return sample_gue(config.N, rng);
    case EnsembleKind::HaarUnitary:
      return sample_haar_unitary(config.N, rng);
    case EnsembleKind::Ginibre:
      return sample_ginibre(config.N, 2.0 / static_cast<double>(config.N), rng);
    case EnsembleKind::NormalMatrix:
      return sample_normal_matrix(config.N, rng);
  }
  throw validation_error("unknown ensemble kind");
}

}  // namespace brickwork
