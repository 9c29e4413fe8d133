#include "slopes/valuation.hpp"

#include <stdexcept>

namespace slopes {

long Valuation::value() const {
  if (infinite_) throw std::logic_error("value() called on infinite valuation");
  return v_;
}

Valuation vp(const Int& x, unsigned long p) {
  if (x == 0) return Valuation::infinity();
  if (p == 2) {
    // Trailing zero bits; mpz_scan1 sees the two's-complement image for
    // negative operands, which has the same number of trailing zeros.
    return Valuation::of(static_cast<long>(mpz_scan1(x.get_mpz_t(), 0)));
  }
  Int cofactor;
  Int prime(static_cast<unsigned long>(p));
  mp_bitcnt_t v = mpz_remove(cofactor.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
  return Valuation::of(static_cast<long>(v));
}

Valuation vp(const Rat& x, unsigned long p) {
  if (x == 0) return Valuation::infinity();
  return Valuation::of(vp(x.get_num(), p).value() - vp(x.get_den(), p).value());
}

long vp_factorial(long n, unsigned long p) {
  if (n < 0) throw std::domain_error("vp_factorial of negative integer");
  long s = 0;
  for (long q = n / static_cast<long>(p); q > 0; q /= static_cast<long>(p)) s += q;
  return s;
}

long slope_weight0(long n) {
  if (n <= 0) throw std::domain_error("slope_weight0 requires n >= 1");
  return 1 + 2 * (vp_factorial(3 * n, 2) - vp_factorial(n, 2));
}

long slope_p11(long n) {
  if (n <= 0) throw std::domain_error("slope_p11 requires n >= 1");
  long v = vp_factorial((6 * n + 1) / 5, 11) + vp_factorial((6 * n + 4) / 5, 11) -
           2 * vp_factorial(n / 5, 11);
  for (long k = 1; k <= 4; ++k) v += (n + k) / 5;
  return v;
}

}  // namespace slopes
