#pragma once

#include <gmpxx.h>

#include <string>

namespace slopes {

// Exact arithmetic types used throughout. Everything is computed over Q;
// where integrality is expected it is asserted, never assumed.
using Int = mpz_class;
using Rat = mpq_class;

// n! for n >= 0. Negative arguments are a hard error.
Int factorial(long n);

// 2^e for e >= 0.
Int pow2(long e);

// 2^e as a rational; e may be negative.
Rat pow2q(long e);

// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rat& x);

}  // namespace slopes
