#include "slopes/numbers.hpp"

#include <stdexcept>

namespace slopes {

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int pow2(long e) {
  if (e < 0) throw std::domain_error("pow2 exponent must be nonnegative");
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

Rat pow2q(long e) {
  if (e >= 0) return Rat(pow2(e));
  return Rat(Int(1), pow2(-e));
}

std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace slopes
