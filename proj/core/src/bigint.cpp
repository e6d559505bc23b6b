#include "sumrules/bigint.hpp"

#include "sumrules/errors.hpp"

namespace sumrules {

Int power(long base, unsigned long exp) {
  if (exp == 0) return Int(1);
  Int result;
  Int b(base);
  mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), exp);
  return result;
}

Rat ratio(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rat out(num, den);
  out.canonicalize();
  return out;
}

std::string to_decimal(const Int& value) { return value.get_str(10); }

std::string to_decimal(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Int parse_int(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw UsageError("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw UsageError("not an integer: '" + text + "'");
  }
  Int value;
  value.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return value;
}

Real to_real(const Int& value) {
  // Exact for |value| < 2^113; otherwise scale the leading 128 bits.
  const std::size_t bits = mpz_sizeinbase(value.get_mpz_t(), 2);
  if (bits <= 128) return Real(value.get_str(10));
  const std::size_t shift = bits - 128;
  Int top = value;
  mpz_tdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), shift);
  return ldexp(Real(top.get_str(10)), static_cast<int>(shift));
}

Real to_real(const Rat& value) { return to_real(value.get_num()) / to_real(value.get_den()); }

}  // namespace sumrules
