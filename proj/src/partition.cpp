#include "brickwork/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace brickwork {

namespace {

void validate_parts(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw validation_error("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw validation_error("partition parts must be weakly decreasing");
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate_parts(parts_);
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::repeated(int part, int count) {
  if (count < 0) throw validation_error("negative repetition count");
  return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  if (text == "0" || text.empty()) return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw validation_error("malformed partition text: '" + text + "'");
    for (char c : tok)
      if (c < '0' || c > '9')
        throw validation_error("malformed partition text: '" + text + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  std::vector<int> sorted = parts;
  std::sort(sorted.rbegin(), sorted.rend());
  if (sorted != parts)
    throw validation_error("partition parts must be weakly decreasing: '" + text + "'");
  return Partition(std::move(parts));
}

bool operator<(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  // Reverse-lexicographic: (4) before (3,1); i.e. lexicographically larger
  // part vectors come first.
  return a.parts() > b.parts();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.str();
}

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw validation_error("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Descending-first recursion emits reverse-lexicographic order directly.
  auto rec = [&](auto&& self, int remaining, int bound) -> void {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int next = std::min(bound, remaining); next >= 1; --next) {
      cur.push_back(next);
      self(self, remaining - next, next);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return Partition();
  std::vector<int> cols(static_cast<std::size_t>(p.part(0)), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

Int hook_product(const Partition& p) {
  const Partition conj = conjugate(p);
  Int prod = 1;
  for (int i = 1; i <= p.length(); ++i) {
    const int row = p.part(i - 1);
    for (int j = 1; j <= row; ++j) {
      const int hook = row - j + conj.part(j - 1) - i + 1;
      prod *= hook;
    }
  }
  return prod;
}

Int dimension(const Partition& p) {
  return factorial(static_cast<unsigned long>(p.weight())) / hook_product(p);
}

Int z_of(const Partition& p) {
  Int z = 1;
  int i = 0;
  const auto& parts = p.parts();
  while (i < static_cast<int>(parts.size())) {
    int j = i;
    while (j < static_cast<int>(parts.size()) && parts[j] == parts[i]) ++j;
    const unsigned long mult = static_cast<unsigned long>(j - i);
    z *= int_pow(Int(parts[static_cast<std::size_t>(i)]), mult);
    z *= factorial(mult);
    i = j;
  }
  return z;
}

Int class_size(const Partition& p) {
  return factorial(static_cast<unsigned long>(p.weight())) / z_of(p);
}

Int content_product(const Partition& p, long N) {
  Int prod = 1;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i - 1); ++j) prod *= Int(N + j - i);
  return prod;
}

}  // namespace brickwork
