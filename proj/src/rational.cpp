#include "brickwork/rational.hpp"

#include <cctype>

namespace brickwork {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw validation_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  if (base == 0) {
    if (exp < 0) throw validation_error("negative power of zero");
    return Rat(0);
  }
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  return exp < 0 ? make_rat(den, num) : make_rat(num, den);
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::optional<Rat> rat_parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  // Accept [-]digits or [-]digits/digits only; reject anything mpq_set_str
  // would silently truncate.
  std::size_t i = 0;
  if (text[i] == '-' || text[i] == '+') ++i;
  bool saw_digit = false, saw_slash = false;
  for (; i < text.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      saw_digit = true;
    } else if (text[i] == '/' && !saw_slash && saw_digit) {
      saw_slash = true;
      saw_digit = false;
    } else {
      return std::nullopt;
    }
  }
  if (!saw_digit) return std::nullopt;
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

double rat_double(const Rat& q) { return mpq_get_d(q.get_mpq_t()); }

}  // namespace brickwork
