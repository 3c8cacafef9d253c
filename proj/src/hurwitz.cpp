#include "brickwork/hurwitz.hpp"

#include "brickwork/characters.hpp"

namespace brickwork {

Rat hurwitz_number(const BranchProfile& data) {
  if (data.profiles.empty()) return Rat(1);
  const int d = data.profiles.front().weight();
  for (const Partition& p : data.profiles)
    if (p.weight() != d) throw validation_error("incompatible weights in profile list");
  if (d == 0) return Rat(1);

  const Int dfact = factorial(static_cast<unsigned long>(d));
  Rat total(0);
  for (const Partition& lambda : enumerate_partitions(d)) {
    Rat term = rat_pow(make_rat(dimension(lambda), dfact), data.euler);
    for (const Partition& mu : data.profiles) term *= normalized_character(lambda, mu);
    total += term;
  }
  return total;
}

Rat brickwork_hurwitz(const Partition& kappa, const Partition& mu, int n_bricks) {
  if (kappa.weight() != mu.weight()) throw validation_error("incompatible weights");
  if (kappa.weight() % 2 != 0) throw validation_error("brickwork requires even degree");
  if (n_bricks < 0) throw validation_error("negative brick count");
  const int k = kappa.weight() / 2;
  BranchProfile data;
  data.euler = 2;
  data.profiles = {kappa, mu};
  for (int i = 0; i < n_bricks; ++i) data.profiles.push_back(Partition::repeated(2, k));
  return hurwitz_number(data);
}

}  // namespace brickwork
