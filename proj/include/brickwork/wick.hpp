#pragma once

#include "brickwork/partition.hpp"
#include "brickwork/rational.hpp"

namespace brickwork {

// Pairing caps: one trace word contributes |mu| slots per independent matrix.
inline constexpr int kWickSingleCap = 8;  // n = 1
inline constexpr int kWickProductCap = 4; // n >= 2
inline constexpr int kWickMaxFactors = 4;

// Exact Gaussian moment E[prod_i tr((H_1 H_2 ... H_n)^{mu_i})] over independent
// Hermitian H_t with E[(H_t)_ab (H_t)_cd] = delta_ad delta_bc / N, evaluated by
// summing delta-chain contractions over all pairings of like factors. Each
// complete pairing contributes N^{(free index cycles) - (number of pairs)}.
Rat product_word_moment(const Partition& mu, int n_factors, int N);

// n = 1 convenience: E[prod_i tr H^{mu_i}].
Rat wick_expectation(const Partition& mu, int N);

// E[s_lambda(H)] through the character expansion:
//   sum_{mu |- |lambda|} chi_lambda(mu) wick_expectation(mu) / z_mu.
// Odd weights vanish identically.
Rat gaussian_schur_average(const Partition& lambda, int N);

}  // namespace brickwork
