#include "brickwork/wick.hpp"

#include <vector>

#include "brickwork/characters.hpp"

namespace brickwork {

namespace {

struct SlotGraph {
  std::vector<int> succ;  // next slot within the trace cycle
  std::vector<int> tag;   // which independent matrix occupies the slot
};

// Trace word prod_i tr((H_1 ... H_n)^{mu_i}): one cycle of mu_i * n slots per
// part, factors tagged 1..n in order around the cycle.
SlotGraph build_slots(const Partition& mu, int n_factors) {
  SlotGraph g;
  int base = 0;
  for (int part : mu.parts()) {
    const int len = part * n_factors;
    for (int i = 0; i < len; ++i) {
      g.succ.push_back(base + (i + 1) % len);
      g.tag.push_back(i % n_factors);
    }
    base += len;
  }
  return g;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

Rat product_word_moment(const Partition& mu, int n_factors, int N) {
  if (N < 1) throw validation_error("matrix size must be positive");
  if (n_factors < 1 || n_factors > kWickMaxFactors)
    throw validation_error("factor count outside 1..4");
  const int cap = n_factors == 1 ? kWickSingleCap : kWickProductCap;
  if (mu.weight() > cap) throw cap_error("trace-word weight above pairing cap");
  if (mu.weight() == 0) return Rat(1);
  if (mu.weight() % 2 != 0) return Rat(0);

  const SlotGraph g = build_slots(mu, n_factors);
  const int total = static_cast<int>(g.succ.size());

  std::vector<std::vector<int>> groups(static_cast<std::size_t>(n_factors));
  for (int s = 0; s < total; ++s) groups[static_cast<std::size_t>(g.tag[static_cast<std::size_t>(s)])].push_back(s);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(total / 2));
  std::vector<char> used(static_cast<std::size_t>(total), 0);
  Rat sum(0);

  // Enumerate perfect matchings group by group; evaluate the delta chain at
  // each complete pairing by merging index variables y_s: pairing (j, k)
  // forces y_j = y_{succ(k)} and y_{succ(j)} = y_k.
  auto evaluate = [&]() {
    std::vector<int> parent(static_cast<std::size_t>(total));
    for (int s = 0; s < total; ++s) parent[static_cast<std::size_t>(s)] = s;
    auto unite = [&](int x, int y) {
      const int rx = find_root(parent, x), ry = find_root(parent, y);
      if (rx != ry) parent[static_cast<std::size_t>(rx)] = ry;
    };
    for (const auto& [j, k] : pairs) {
      unite(j, g.succ[static_cast<std::size_t>(k)]);
      unite(g.succ[static_cast<std::size_t>(j)], k);
    }
    int classes = 0;
    for (int s = 0; s < total; ++s)
      if (find_root(parent, s) == s) ++classes;
    sum += rat_pow(Rat(N), classes - total / 2);
  };

  auto match_group = [&](auto&& self, std::size_t gi) -> void {
    if (gi == groups.size()) {
      evaluate();
      return;
    }
    const std::vector<int>& slots = groups[gi];
    // Find first unused slot in this group; none left -> next group.
    int a = -1;
    for (int s : slots)
      if (!used[static_cast<std::size_t>(s)]) {
        a = s;
        break;
      }
    if (a < 0) {
      self(self, gi + 1);
      return;
    }
    used[static_cast<std::size_t>(a)] = 1;
    for (int b : slots) {
      if (b <= a || used[static_cast<std::size_t>(b)]) continue;
      used[static_cast<std::size_t>(b)] = 1;
      pairs.emplace_back(a, b);
      self(self, gi);
      pairs.pop_back();
      used[static_cast<std::size_t>(b)] = 0;
    }
    used[static_cast<std::size_t>(a)] = 0;
  };

  // Odd group size has no perfect matching; the recursion simply never
  // reaches a complete pairing, so the sum stays 0 as it should.
  match_group(match_group, 0);
  return sum;
}

Rat wick_expectation(const Partition& mu, int N) {
  return product_word_moment(mu, 1, N);
}

Rat gaussian_schur_average(const Partition& lambda, int N) {
  if (lambda.weight() % 2 != 0) return Rat(0);
  Rat total(0);
  for (const Partition& mu : enumerate_partitions(lambda.weight())) {
    const Int chi = character(lambda, mu);
    if (chi == 0) continue;
    total += make_rat(chi, z_of(mu)) * wick_expectation(mu, N);
  }
  return total;
}

}  // namespace brickwork
