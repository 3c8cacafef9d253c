#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <thread>
#include <vector>

#include "brickwork/ensembles.hpp"
#include "brickwork/partition.hpp"
#include "brickwork/rng.hpp"
#include "brickwork/weingarten.hpp"

namespace brickwork {

struct MCEstimate {
  std::complex<double> mean{0.0, 0.0};
  double std_error = 0.0;  // sqrt(sample variance / samples), complex deviations
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  // Standard 4-standard-error acceptance band around an exact target.
  bool within(std::complex<double> exact, double n_sigma = 4.0) const {
    return std::abs(mean - exact) <= n_sigma * std_error;
  }
};

// Generic seeded mean estimator. Samples are split into contiguous blocks,
// one per worker, each on substream derive_stream(seed, worker); partial sums
// are combined in worker order, so output depends only on (seed, workers) and
// workers = 1 is the canonical regression stream.
template <class F>
MCEstimate mc_run(std::uint64_t samples, std::uint64_t seed, int workers, F&& sample_fn);

// Word W = H_1 C_1 H_2 C_2 ... H_n C_n with fresh GUE H_t each sample.
// An empty matrix in `sources` stands for the identity.
struct TraceWord {
  int n_factors = 1;
  std::vector<Eigen::MatrixXcd> sources;  // size 0 (all identity) or n_factors
};

// E[prod_i tr(W^{mu_i})].
MCEstimate mc_moment(const TraceWord& word, const Partition& mu, int N,
                     std::uint64_t samples, std::uint64_t seed, int workers = 1);

// Split test for the Haar average of s_lambda(U A U* B): the sampled mean
// against the exact factorized value s_lambda(A) s_lambda(B) / s_lambda(I_N).
struct SchurSplitResult {
  MCEstimate estimate;
  std::complex<double> exact;
};
SchurSplitResult mc_schur_split(const Partition& lambda, const Eigen::MatrixXcd& A,
                                const Eigen::MatrixXcd& B, std::uint64_t samples,
                                std::uint64_t seed, int workers = 1);

// E[s_lambda(H)] over GUE.
MCEstimate mc_schur_gue(const Partition& lambda, int N, std::uint64_t samples,
                        std::uint64_t seed, int workers = 1);

// Haar moment E[prod U_{a_k b_k} prod conj(U_{a'_k b'_k})].
MCEstimate mc_weingarten_monomial(const MonomialSpec& spec, std::uint64_t samples,
                                  std::uint64_t seed, int workers = 1);

// ---- implementation ----

template <class F>
MCEstimate mc_run(std::uint64_t samples, std::uint64_t seed, int workers, F&& sample_fn) {
  if (samples == 0) return {{0.0, 0.0}, 0.0, 0, seed};
  if (workers < 1) workers = 1;
  const std::uint64_t w = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), samples);

  std::vector<std::complex<double>> block_sum(w, {0.0, 0.0});
  std::vector<double> block_sumsq(w, 0.0);

  auto run_block = [&](std::uint64_t t) {
    const std::uint64_t lo = samples * t / w, hi = samples * (t + 1) / w;
    SplitMix64 rng(derive_stream(seed, t));
    std::complex<double> acc{0.0, 0.0};
    double acc2 = 0.0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::complex<double> x = sample_fn(rng);
      acc += x;
      acc2 += std::norm(x);
    }
    block_sum[t] = acc;
    block_sumsq[t] = acc2;
  };

  if (w == 1) {
    run_block(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t t = 0; t < w; ++t) threads.emplace_back(run_block, t);
    for (auto& th : threads) th.join();
  }

  std::complex<double> sum{0.0, 0.0};
  double sumsq = 0.0;
  for (std::uint64_t t = 0; t < w; ++t) {
    sum += block_sum[t];
    sumsq += block_sumsq[t];
  }
  const double n = static_cast<double>(samples);
  const std::complex<double> mean = sum / n;
  double se = 0.0;
  if (samples > 1) {
    const double var = std::max(0.0, (sumsq - std::norm(sum) / n) / (n - 1.0));
    se = std::sqrt(var / n);
  }
  return {mean, se, samples, seed};
}

}  // namespace brickwork
