#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace brickwork {

// Exact arithmetic carriers for the whole library. mpq_class values stay in
// lowest terms with positive denominator as long as construction goes through
// make_rat(); plain arithmetic on canonical operands stays canonical.
using Int = mpz_class;
using Rat = mpq_class;

// Error taxonomy. The CLI maps these onto distinct exit codes.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct window_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct calibration_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat make_rat(const Int& num, const Int& den);

// base^exp with negative exponents allowed for nonzero base.
Rat rat_pow(const Rat& base, long exp);
Int int_pow(const Int& base, unsigned long exp);
Int factorial(unsigned long n);

// Canonical text form: "a" for integers, "a/b" otherwise (b > 0, reduced).
std::string rat_str(const Rat& q);
// Parses the canonical form back; returns nullopt on malformed input.
std::optional<Rat> rat_parse(const std::string& text);

double rat_double(const Rat& q);

}  // namespace brickwork
