#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "brickwork/rational.hpp"

namespace brickwork {

// Integer partition: weakly decreasing positive parts. The empty partition is
// the unique partition of 0 and prints as "0".
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);
  // (part, part, ..., part) with `count` copies; count = 0 gives the empty
  // partition.
  static Partition repeated(int part, int count);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  // Multiplicity of `value` among the parts.
  int multiplicity(int value) const;

  bool operator==(const Partition&) const = default;

  std::string str() const;
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Canonical order: by weight, then reverse-lexicographic within a weight
// ((4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)). Containers keyed on Partition
// iterate in serialization order.
bool operator<(const Partition& a, const Partition& b);

std::ostream& operator<<(std::ostream& os, const Partition& p);

// All partitions of d in reverse-lexicographic order. d = 0 yields { () }.
std::vector<Partition> enumerate_partitions(int d);

Partition conjugate(const Partition& p);

// Product of hook lengths over all cells.
Int hook_product(const Partition& p);

// Number of standard Young tableaux: |λ|! / hook_product(λ).
Int dimension(const Partition& p);

// Centralizer order z_μ = prod_i i^{m_i} m_i!  (m_i = multiplicity of i).
Int z_of(const Partition& p);

// Conjugacy class size |C_μ| = |μ|! / z_μ.
Int class_size(const Partition& p);

// Pochhammer-type content product (N)_λ = prod_{(i,j) in λ} (N + j - i),
// 1-based cell coordinates. Zero iff length(λ) > N >= 0.
Int content_product(const Partition& p, long N);

}  // namespace brickwork
