#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>

#include "brickwork/characters.hpp"
#include "brickwork/partition.hpp"
#include "brickwork/rational.hpp"

namespace brickwork {

namespace detail {

template <class Scalar>
Scalar scalar_from_rat(const Rat& q) {
  return Scalar(rat_double(q));
}
template <>
inline Rat scalar_from_rat<Rat>(const Rat& q) {
  return q;
}

}  // namespace detail

// Sparse power-sum assignment p_1, p_2, ...; absent entries are zero.
// Scalar is Rat on the exact path or std::complex<double> on the floating
// path; evaluation code is shared between the two.
template <class Scalar>
class PowerSumSpec {
 public:
  PowerSumSpec() = default;

  void set(int m, Scalar value) {
    if (m < 1) throw validation_error("power-sum index must be >= 1");
    values_[m] = std::move(value);
  }

  Scalar get(int m) const {
    auto it = values_.find(m);
    return it == values_.end() ? Scalar(0) : it->second;
  }

  const std::map<int, Scalar>& entries() const { return values_; }

  // p_m = value for all 1 <= m <= max_m.
  static PowerSumSpec constant(const Scalar& value, int max_m) {
    PowerSumSpec p;
    for (int m = 1; m <= max_m; ++m) p.set(m, value);
    return p;
  }

  // Single nonzero entry p_m = value.
  static PowerSumSpec single(int m, const Scalar& value) {
    PowerSumSpec p;
    p.set(m, value);
    return p;
  }

  // p_mu = prod_i p_{mu_i}.
  Scalar monomial(const Partition& mu) const {
    Scalar prod(1);
    for (int part : mu.parts()) prod *= get(part);
    return prod;
  }

 private:
  std::map<int, Scalar> values_;
};

using ExactPowerSums = PowerSumSpec<Rat>;
using ComplexPowerSums = PowerSumSpec<std::complex<double>>;

// Character expansion s_lambda = sum_{mu |- |lambda|} chi_lambda(mu) p_mu / z_mu.
template <class Scalar>
Scalar schur_from_power_sums(const Partition& lambda, const PowerSumSpec<Scalar>& p) {
  Scalar total(0);
  for (const Partition& mu : enumerate_partitions(lambda.weight())) {
    const Scalar coeff =
        detail::scalar_from_rat<Scalar>(make_rat(character(lambda, mu), z_of(mu)));
    total += coeff * p.monomial(mu);
  }
  return total;
}

// s_lambda(1^N) = (N)_lambda / hook_product(lambda); zero when length > N.
Rat principal_specialization(const Partition& lambda, int N);

// s_lambda at p = (0, c, 0, 0, ...): zero for odd weight, otherwise
// chi_lambda((2^k)) c^k / (2^k k!) with k = |lambda|/2.
template <class Scalar>
Scalar brick_specialization(const Partition& lambda, const Scalar& c) {
  const int d = lambda.weight();
  if (d % 2 != 0) return Scalar(0);
  const int k = d / 2;
  const Int chi = character(lambda, Partition::repeated(2, k));
  const Scalar coeff = detail::scalar_from_rat<Scalar>(
      make_rat(chi, z_of(Partition::repeated(2, k))));
  Scalar ck(1);
  for (int i = 0; i < k; ++i) ck *= c;
  return coeff * ck;
}

// p_m = tr X^m for m = 1..max_m.
ComplexPowerSums power_sums_of_matrix(const Eigen::MatrixXcd& X, int max_m);

// s_lambda evaluated on the eigenvalues of X (via trace power sums).
std::complex<double> schur_of_matrix(const Partition& lambda, const Eigen::MatrixXcd& X);

}  // namespace brickwork
