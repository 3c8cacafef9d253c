#pragma once

#include <cstdint>
#include <vector>

#include "brickwork/partition.hpp"
#include "brickwork/rational.hpp"

namespace brickwork {

// Enumeration caps: degree 8 by default, 10 as an absolute limit. The oracle
// stays dumb on purpose; anything bigger belongs to the character-side
// formulas, not brute force.
inline constexpr int kDefaultEnumerationCap = 8;
inline constexpr int kHardEnumerationCap = 10;

// Permutation of {0, ..., d-1} as an image array.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(int d);  // identity
  int size() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[static_cast<std::size_t>(x)]; }
  bool operator==(const Perm&) const = default;
};

// Fixed composition convention: apply `s` first, then `t`.
Perm compose(const Perm& s, const Perm& t);
Perm inverse(const Perm& s);
bool is_identity(const Perm& s);
Partition cycle_type(const Perm& s);

// Every permutation of S_d with cycle type mu, each exactly once.
std::vector<Perm> class_elements(const Partition& mu, int cap = kDefaultEnumerationCap);

// All fixed-point-free involutions of S_{2k}; count (2k-1)!!.
std::vector<Perm> fixed_point_free_involutions(int k, int cap = kDefaultEnumerationCap);

struct FactorizationCount {
  Int raw_count;   // ordered tuples (X_1, ..., X_m) with X_1 X_2 ... X_m = id
  Rat normalized;  // raw_count / d!
};

// Brute-force count of ordered factorizations of the identity with prescribed
// cycle types. The tuple count is invariant under permuting the profile list
// (class sums commute), so the largest class is moved to the non-enumerated
// slot before the nested scan.
FactorizationCount count_factorizations(const std::vector<Partition>& profiles, int degree,
                                        int cap = kDefaultEnumerationCap, int workers = 1);

// Specialization for brickwork profiles (kappa, mu, (2^k) x n) with
// degree = |kappa| = |mu| = 2k.
FactorizationCount count_brickwork(const Partition& kappa, const Partition& mu, int n_bricks,
                                   int cap = kDefaultEnumerationCap, int workers = 1);

}  // namespace brickwork
