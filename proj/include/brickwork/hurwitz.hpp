#pragma once

#include <vector>

#include "brickwork/partition.hpp"
#include "brickwork/rational.hpp"

namespace brickwork {

// Branching data for a fixed target Euler characteristic. All profiles must
// share one weight d; euler = 2 is the sphere.
struct BranchProfile {
  std::vector<Partition> profiles;
  int euler = 2;
};

// Character-sum count of tuples (X_1, ..., X_m), X_i in C_{mu^(i)}, with
// X_1 ... X_m = id, divided by d!:
//   sum_{lambda |- d} (dim lambda / d!)^euler  prod_i phi_lambda(mu^(i))
// where phi is the normalized character. The count is possibly-disconnected:
// no inclusion-exclusion over connected covers is applied. Degree 0 returns 1.
Rat hurwitz_number(const BranchProfile& data);

// Sphere count for profiles (kappa, mu, (2^k) x n), degree 2k.
Rat brickwork_hurwitz(const Partition& kappa, const Partition& mu, int n_bricks);

}  // namespace brickwork
