#include "brickwork/mc.hpp"

#include "brickwork/schur.hpp"

namespace brickwork {

MCEstimate mc_moment(const TraceWord& word, const Partition& mu, int N,
                     std::uint64_t samples, std::uint64_t seed, int workers) {
  if (word.n_factors < 1) throw validation_error("word needs at least one factor");
  if (!word.sources.empty() &&
      static_cast<int>(word.sources.size()) != word.n_factors)
    throw validation_error("source list length must match factor count");
  for (const auto& C : word.sources)
    if (C.size() != 0 && (C.rows() != N || C.cols() != N))
      throw validation_error("source matrix size mismatch");

  const int n = word.n_factors;
  return mc_run(samples, seed, workers, [&, n, N](SplitMix64& rng) {
    Eigen::MatrixXcd W = Eigen::MatrixXcd::Identity(N, N);
    for (int t = 0; t < n; ++t) {
      W = W * sample_gue(N, rng);
      if (!word.sources.empty() && word.sources[static_cast<std::size_t>(t)].size() != 0)
        W = W * word.sources[static_cast<std::size_t>(t)];
    }
    const ComplexPowerSums p = power_sums_of_matrix(W, mu.empty() ? 1 : mu.part(0));
    return p.monomial(mu);
  });
}

SchurSplitResult mc_schur_split(const Partition& lambda, const Eigen::MatrixXcd& A,
                                const Eigen::MatrixXcd& B, std::uint64_t samples,
                                std::uint64_t seed, int workers) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw validation_error("split test needs square matrices of equal size");
  const int N = static_cast<int>(A.rows());
  if (lambda.length() > N)
    throw validation_error("length(lambda) must not exceed N");

  const Rat denom = principal_specialization(lambda, N);
  SchurSplitResult result;
  result.exact =
      schur_of_matrix(lambda, A) * schur_of_matrix(lambda, B) / rat_double(denom);
  result.estimate = mc_run(samples, seed, workers, [&](SplitMix64& rng) {
    const Eigen::MatrixXcd U = sample_haar_unitary(N, rng);
    return schur_of_matrix(lambda, U * A * U.adjoint() * B);
  });
  return result;
}

MCEstimate mc_schur_gue(const Partition& lambda, int N, std::uint64_t samples,
                        std::uint64_t seed, int workers) {
  return mc_run(samples, seed, workers, [&](SplitMix64& rng) {
    return schur_of_matrix(lambda, sample_gue(N, rng));
  });
}

MCEstimate mc_weingarten_monomial(const MonomialSpec& spec, std::uint64_t samples,
                                  std::uint64_t seed, int workers) {
  if (spec.a.size() != spec.b.size() || spec.ap.size() != spec.bp.size())
    throw validation_error("row/col index lists of unequal length");
  return mc_run(samples, seed, workers, [&](SplitMix64& rng) {
    const Eigen::MatrixXcd U = sample_haar_unitary(spec.N, rng);
    std::complex<double> prod(1.0, 0.0);
    for (std::size_t k = 0; k < spec.a.size(); ++k)
      prod *= U(spec.a[k] - 1, spec.b[k] - 1);
    for (std::size_t k = 0; k < spec.ap.size(); ++k)
      prod *= std::conj(U(spec.ap[k] - 1, spec.bp[k] - 1));
    return prod;
  });
}

}  // namespace brickwork
