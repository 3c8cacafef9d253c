#pragma once

#include <utility>
#include <vector>

#include "brickwork/partition.hpp"
#include "brickwork/rational.hpp"

namespace brickwork {

// Unitary-group Weingarten function for cycle type mu at dimension N:
//   Wg_N(mu) = sum_{lambda |- |mu|} (dim lambda / |mu|!) chi_lambda(mu) / (N)_lambda.
// Requires N >= |mu| so every content product is nonzero; memoized by (mu, N).
Rat weingarten_value(const Partition& mu, int N);

// Joint moment of Haar-unitary entries:
//   E[ U_{a1 b1} ... U_{ad bd} . conj(U_{a'1 b'1}) ... conj(U_{a'd' b'd'}) ].
// Indices are 1-based in 1..N.
struct MonomialSpec {
  std::vector<int> a, b;    // row/col indices of the U factors
  std::vector<int> ap, bp;  // row/col indices of the conjugated factors
  int N = 0;

  int degree() const { return static_cast<int>(a.size()); }
  int degree_conj() const { return static_cast<int>(ap.size()); }
};

// (sum a - sum a', sum b - sum b'): both must vanish for a nonzero moment
// (invariance under U -> diag-phase * U * diag-phase).
std::pair<long, long> balance_numbers(const MonomialSpec& spec);

//   delta_{d d'} sum_{sigma, tau in S_d} Wg_N(tau sigma^{-1})
//     prod_k delta(a_k, a'_{sigma(k)}) delta(b_k, b'_{tau(k)}).
// Exact; the structural zero cases short-circuit before any Weingarten value
// is needed.
Rat monomial_integral(const MonomialSpec& spec);

void clear_weingarten_memo();

}  // namespace brickwork
