#include "brickwork/characters.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include <nlohmann/json.hpp>

namespace brickwork {

namespace {

constexpr const char* kCacheVersion = "brickwork-characters-1";

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;

std::map<MemoKey, Int>& memo_table() {
  static std::map<MemoKey, Int> table;
  return table;
}

std::shared_mutex& memo_mutex() {
  static std::shared_mutex m;
  return m;
}

// chi on raw descending part vectors; mu is consumed largest part first.
Int chi_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return 1;

  const MemoKey key{lambda, mu};
  {
    std::shared_lock lock(memo_mutex());
    auto it = memo_table().find(key);
    if (it != memo_table().end()) return it->second;
  }

  // Beta-numbers b_i = lambda_i + (ell - 1 - i) form a strictly decreasing
  // set; removing a border strip of length r moves one bead down by r onto an
  // unoccupied slot, with sign (-1)^{#beads passed}.
  const int ell = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.begin(), lambda.end());
  for (int i = 0; i < ell; ++i) beta[static_cast<std::size_t>(i)] += ell - 1 - i;

  const int r = mu.front();
  const std::vector<int> mu_rest(mu.begin() + 1, mu.end());

  Int total = 0;
  for (int i = 0; i < ell; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - r;
    if (to < 0) continue;
    bool occupied = false;
    int crossings = 0;
    for (int j = 0; j < ell; ++j) {
      if (j == i) continue;
      const int b = beta[static_cast<std::size_t>(j)];
      if (b == to) {
        occupied = true;
        break;
      }
      if (b > to && b < from) ++crossings;
    }
    if (occupied) continue;

    std::vector<int> next_beta = beta;
    next_beta[static_cast<std::size_t>(i)] = to;
    std::sort(next_beta.rbegin(), next_beta.rend());
    std::vector<int> next_lambda;
    next_lambda.reserve(static_cast<std::size_t>(ell));
    for (int j = 0; j < ell; ++j) {
      const int part = next_beta[static_cast<std::size_t>(j)] - (ell - 1 - j);
      if (part > 0) next_lambda.push_back(part);
    }

    const Int sub = chi_rec(next_lambda, mu_rest);
    total += (crossings % 2 == 0) ? sub : -sub;
  }

  {
    std::unique_lock lock(memo_mutex());
    memo_table().emplace(key, total);
  }
  return total;
}

}  // namespace

Int character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw validation_error("incompatible weights: |lambda| != |mu|");
  if (lambda.weight() > kCharacterWeightCap)
    throw cap_error("character weight above recursion cap");
  return chi_rec(lambda.parts(), mu.parts());
}

Rat normalized_character(const Partition& lambda, const Partition& mu) {
  return make_rat(class_size(mu) * character(lambda, mu), dimension(lambda));
}

CharacterTable character_table(int degree) {
  CharacterTable t;
  t.degree = degree;
  t.row_labels = enumerate_partitions(degree);
  t.col_labels = t.row_labels;
  t.values.reserve(t.row_labels.size());
  for (const Partition& lambda : t.row_labels) {
    std::vector<Int> row;
    row.reserve(t.col_labels.size());
    for (const Partition& mu : t.col_labels) row.push_back(character(lambda, mu));
    t.values.push_back(std::move(row));
  }
  return t;
}

void clear_character_memo() {
  std::unique_lock lock(memo_mutex());
  memo_table().clear();
}

std::size_t character_memo_size() {
  std::shared_lock lock(memo_mutex());
  return memo_table().size();
}

bool save_character_memo(const std::string& path) {
  nlohmann::json doc;
  doc["version"] = kCacheVersion;
  nlohmann::json entries = nlohmann::json::array();
  {
    std::shared_lock lock(memo_mutex());
    for (const auto& [key, value] : memo_table()) {
      entries.push_back({{"lambda", key.first}, {"mu", key.second}, {"chi", value.get_str()}});
    }
  }
  doc["entries"] = std::move(entries);
  std::ofstream out(path);
  if (!out) return false;
  out << doc.dump();
  return static_cast<bool>(out);
}

bool load_character_memo(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  if (!doc.is_object() || doc.value("version", "") != kCacheVersion) return false;
  if (!doc.contains("entries") || !doc["entries"].is_array()) return false;
  std::unique_lock lock(memo_mutex());
  for (const auto& e : doc["entries"]) {
    try {
      MemoKey key{e.at("lambda").get<std::vector<int>>(), e.at("mu").get<std::vector<int>>()};
      Int chi(e.at("chi").get<std::string>());
      memo_table().emplace(std::move(key), std::move(chi));
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

}  // namespace brickwork
