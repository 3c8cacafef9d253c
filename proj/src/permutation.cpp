#include "brickwork/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace brickwork {

namespace {

void check_cap(int degree, int cap, const char* what) {
  if (degree < 0) throw validation_error("negative degree");
  if (cap > kHardEnumerationCap)
    throw cap_error("enumeration cap above hard limit 10");
  if (degree > cap)
    throw cap_error(std::string("degree too large for enumeration (") + what + ")");
}

// Sorted-descending cycle lengths without constructing a Partition.
void cycle_lengths(const Perm& s, std::vector<int>& out) {
  out.clear();
  const int d = s.size();
  thread_local std::vector<char> seen;
  seen.assign(static_cast<std::size_t>(d), 0);
  for (int x = 0; x < d; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    int len = 0, y = x;
    while (!seen[static_cast<std::size_t>(y)]) {
      seen[static_cast<std::size_t>(y)] = 1;
      y = s(y);
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
}

}  // namespace

Perm::Perm(int d) : img(static_cast<std::size_t>(d)) {
  std::iota(img.begin(), img.end(), 0);
}

Perm compose(const Perm& s, const Perm& t) {
  if (s.size() != t.size()) throw validation_error("composing permutations of unequal degree");
  Perm r;
  r.img.resize(s.img.size());
  for (int x = 0; x < s.size(); ++x) r.img[static_cast<std::size_t>(x)] = t(s(x));
  return r;
}

Perm inverse(const Perm& s) {
  Perm r;
  r.img.resize(s.img.size());
  for (int x = 0; x < s.size(); ++x) r.img[static_cast<std::size_t>(s(x))] = x;
  return r;
}

bool is_identity(const Perm& s) {
  for (int x = 0; x < s.size(); ++x)
    if (s(x) != x) return false;
  return true;
}

Partition cycle_type(const Perm& s) {
  std::vector<int> lens;
  cycle_lengths(s, lens);
  return Partition(std::move(lens));
}

std::vector<Perm> class_elements(const Partition& mu, int cap) {
  const int d = mu.weight();
  check_cap(d, cap, "class_elements");
  std::vector<Perm> out;
  Perm p(d);
  std::vector<int> lens;
  const std::vector<int>& target = mu.parts();
  do {
    cycle_lengths(p, lens);
    if (lens == target) out.push_back(p);
  } while (std::next_permutation(p.img.begin(), p.img.end()));
  return out;
}

std::vector<Perm> fixed_point_free_involutions(int k, int cap) {
  if (k < 0) throw validation_error("negative brick count");
  check_cap(2 * k, cap, "fixed_point_free_involutions");
  std::vector<Perm> out;
  Perm cur(2 * k);
  std::vector<char> used(static_cast<std::size_t>(2 * k), 0);
  // Pair the smallest unused point with every partner; (2k-1)!! leaves.
  auto rec = [&](auto&& self) -> void {
    int a = -1;
    for (int x = 0; x < 2 * k; ++x)
      if (!used[static_cast<std::size_t>(x)]) {
        a = x;
        break;
      }
    if (a < 0) {
      out.push_back(cur);
      return;
    }
    used[static_cast<std::size_t>(a)] = 1;
    for (int b = a + 1; b < 2 * k; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      used[static_cast<std::size_t>(b)] = 1;
      cur.img[static_cast<std::size_t>(a)] = b;
      cur.img[static_cast<std::size_t>(b)] = a;
      self(self);
      used[static_cast<std::size_t>(b)] = 0;
    }
    used[static_cast<std::size_t>(a)] = 0;
  };
  rec(rec);
  return out;
}

namespace {

// Count tuples over classes[0..m-1] whose product has cycle type `target`,
// scanning classes[first..] with `prefix` = product of the chosen earlier
// factors. Innermost level only compares sorted cycle lengths.
std::uint64_t scan(const std::vector<std::vector<Perm>>& classes, std::size_t first,
                   const Perm& prefix, const std::vector<int>& target) {
  std::uint64_t count = 0;
  std::vector<int> lens;
  if (first + 1 == classes.size()) {
    for (const Perm& x : classes[first]) {
      const Perm prod = compose(prefix, x);
      cycle_lengths(prod, lens);
      if (lens == target) ++count;
    }
    return count;
  }
  for (const Perm& x : classes[first]) count += scan(classes, first + 1, compose(prefix, x), target);
  return count;
}

}  // namespace

FactorizationCount count_factorizations(const std::vector<Partition>& profiles, int degree,
                                        int cap, int workers) {
  check_cap(degree, cap, "count_factorizations");
  if (profiles.empty()) throw validation_error("need at least one profile");
  for (const Partition& p : profiles)
    if (p.weight() != degree) throw validation_error("incompatible weights in profile list");

  if (degree == 0) return {Int(1), Rat(1)};

  // Leave the largest class as the checked slot; enumerate the rest.
  std::size_t checked = 0;
  Int best = class_size(profiles[0]);
  for (std::size_t i = 1; i < profiles.size(); ++i) {
    const Int cs = class_size(profiles[i]);
    if (cs > best) {
      best = cs;
      checked = i;
    }
  }
  const std::vector<int>& target = profiles[checked].parts();

  std::vector<std::vector<Perm>> classes;
  for (std::size_t i = 0; i < profiles.size(); ++i)
    if (i != checked) classes.push_back(class_elements(profiles[i], cap));

  Int raw = 0;
  if (classes.empty()) {
    // Single profile: the only tuple is (id).
    raw = (profiles[checked] == Partition::repeated(1, degree)) ? 1 : 0;
  } else if (workers <= 1 || classes[0].size() < 2) {
    raw = Int(static_cast<unsigned long>(scan(classes, 0, Perm(degree), target)));
  } else {
    const std::size_t w =
        std::min<std::size_t>(static_cast<std::size_t>(workers), classes[0].size());
    std::vector<std::uint64_t> partial(w, 0);
    std::vector<std::thread> threads;
    const std::size_t outer = classes[0].size();
    for (std::size_t t = 0; t < w; ++t) {
      threads.emplace_back([&, t]() {
        const std::size_t lo = outer * t / w, hi = outer * (t + 1) / w;
        std::uint64_t acc = 0;
        for (std::size_t i = lo; i < hi; ++i) {
          if (classes.size() == 1) {
            std::vector<int> lens;
            cycle_lengths(classes[0][i], lens);
            if (lens == target) ++acc;
          } else {
            acc += scan(classes, 1, classes[0][i], target);
          }
        }
        partial[t] = acc;
      });
    }
    for (auto& th : threads) th.join();
    for (std::uint64_t c : partial) raw += Int(static_cast<unsigned long>(c));
  }

  return {raw, make_rat(raw, factorial(static_cast<unsigned long>(degree)))};
}

FactorizationCount count_brickwork(const Partition& kappa, const Partition& mu, int n_bricks,
                                   int cap, int workers) {
  if (kappa.weight() != mu.weight()) throw validation_error("incompatible weights");
  if (kappa.weight() % 2 != 0) throw validation_error("brickwork requires even degree");
  if (n_bricks < 0) throw validation_error("negative brick count");
  const int k = kappa.weight() / 2;
  std::vector<Partition> profiles{kappa, mu};
  for (int i = 0; i < n_bricks; ++i) profiles.push_back(Partition::repeated(2, k));
  return count_factorizations(profiles, 2 * k, cap, workers);
}

}  // namespace brickwork
