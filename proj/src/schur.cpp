#include "brickwork/schur.hpp"

namespace brickwork {

Rat principal_specialization(const Partition& lambda, int N) {
  if (N < 0) throw validation_error("matrix size must be nonnegative");
  return make_rat(content_product(lambda, N), hook_product(lambda));
}

ComplexPowerSums power_sums_of_matrix(const Eigen::MatrixXcd& X, int max_m) {
  if (X.rows() != X.cols()) throw validation_error("power sums need a square matrix");
  ComplexPowerSums p;
  Eigen::MatrixXcd power = X;
  for (int m = 1; m <= max_m; ++m) {
    p.set(m, power.trace());
    if (m < max_m) power = power * X;
  }
  return p;
}

std::complex<double> schur_of_matrix(const Partition& lambda, const Eigen::MatrixXcd& X) {
  return schur_from_power_sums(lambda, power_sums_of_matrix(X, lambda.weight()));
}

}  // namespace brickwork
