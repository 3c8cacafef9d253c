#pragma once

#include <string>
#include <vector>

#include "brickwork/partition.hpp"
#include "brickwork/rational.hpp"

namespace brickwork {

// Weight cap for the character recursion; beyond this the memo table and the
// border-strip search stop being desk-scale.
inline constexpr int kCharacterWeightCap = 16;

// Irreducible symmetric-group character chi_lambda(mu), computed by
// border-strip (Murnaghan-Nakayama) recursion over beta-numbers. Memoized;
// safe for concurrent callers. Throws validation_error on weight mismatch and
// cap_error above kCharacterWeightCap.
Int character(const Partition& lambda, const Partition& mu);

// |C_mu| * chi_lambda(mu) / dim(lambda).
Rat normalized_character(const Partition& lambda, const Partition& mu);

struct CharacterTable {
  int degree = 0;
  std::vector<Partition> row_labels;  // lambda, reverse-lex order
  std::vector<Partition> col_labels;  // mu, reverse-lex order
  std::vector<std::vector<Int>> values;
};

CharacterTable character_table(int degree);

// Memo-table management. The on-disk cache is a versioned JSON document; a
// version mismatch is ignored (treated as a cold cache).
void clear_character_memo();
std::size_t character_memo_size();
bool save_character_memo(const std::string& path);
bool load_character_memo(const std::string& path);

}  // namespace brickwork
