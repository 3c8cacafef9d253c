#include "brickwork/weingarten.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "brickwork/characters.hpp"
#include "brickwork/permutation.hpp"

namespace brickwork {

namespace {

std::map<std::pair<Partition, int>, Rat>& wg_memo() {
  static std::map<std::pair<Partition, int>, Rat> memo;
  return memo;
}

std::mutex& wg_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Rat weingarten_value(const Partition& mu, int N) {
  const int d = mu.weight();
  if (d == 0) return Rat(1);
  if (N < d) throw window_error("Weingarten undefined below degree (N < |mu|)");

  const std::pair<Partition, int> key{mu, N};
  {
    std::lock_guard lock(wg_mutex());
    auto it = wg_memo().find(key);
    if (it != wg_memo().end()) return it->second;
  }

  const Int dfact = factorial(static_cast<unsigned long>(d));
  Rat total(0);
  for (const Partition& lambda : enumerate_partitions(d)) {
    // length(lambda) <= d <= N, so (N)_lambda never vanishes here.
    total += make_rat(dimension(lambda) * character(lambda, mu),
                      dfact * content_product(lambda, N));
  }

  std::lock_guard lock(wg_mutex());
  wg_memo().emplace(key, total);
  return total;
}

std::pair<long, long> balance_numbers(const MonomialSpec& spec) {
  auto sum = [](const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0L);
  };
  return {sum(spec.a) - sum(spec.ap), sum(spec.b) - sum(spec.bp)};
}

Rat monomial_integral(const MonomialSpec& spec) {
  if (spec.a.size() != spec.b.size() || spec.ap.size() != spec.bp.size())
    throw validation_error("row/col index lists of unequal length");
  if (spec.N < 1) throw validation_error("matrix size must be positive");
  auto in_range = [&](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [&](int i) { return i >= 1 && i <= spec.N; });
  };
  if (!in_range(spec.a) || !in_range(spec.b) || !in_range(spec.ap) || !in_range(spec.bp))
    throw validation_error("monomial index outside 1..N");

  const int d = spec.degree();
  // Structural zeros first: these hold for every N.
  if (d != spec.degree_conj()) return Rat(0);
  if (d == 0) return Rat(1);
  const auto [bal_a, bal_b] = balance_numbers(spec);
  if (bal_a != 0 || bal_b != 0) return Rat(0);
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(spec.a) != sorted(spec.ap) || sorted(spec.b) != sorted(spec.bp)) return Rat(0);

  if (d > kDefaultEnumerationCap) throw cap_error("monomial degree too large for enumeration");
  if (spec.N < d) throw window_error("Weingarten undefined below degree (N < d)");

  Rat total(0);
  Perm sigma(d);
  std::vector<int> idx(static_cast<std::size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  // sigma runs over bijections matching a to a', tau over those matching b
  // to b'; the Weingarten argument is the cycle type of tau sigma^{-1}.
  do {
    bool ok_a = true;
    for (int k = 0; k < d && ok_a; ++k)
      ok_a = spec.a[static_cast<std::size_t>(k)] ==
             spec.ap[static_cast<std::size_t>(sigma(k))];
    if (!ok_a) continue;
    const Perm sigma_inv = inverse(sigma);
    Perm tau(d);
    do {
      bool ok_b = true;
      for (int k = 0; k < d && ok_b; ++k)
        ok_b = spec.b[static_cast<std::size_t>(k)] ==
               spec.bp[static_cast<std::size_t>(tau(k))];
      if (!ok_b) continue;
      total += weingarten_value(cycle_type(compose(sigma_inv, tau)), spec.N);
    } while (std::next_permutation(tau.img.begin(), tau.img.end()));
  } while (std::next_permutation(sigma.img.begin(), sigma.img.end()));
  return total;
}

void clear_weingarten_memo() {
  std::lock_guard lock(wg_mutex());
  wg_memo().clear();
}

}  // namespace brickwork
