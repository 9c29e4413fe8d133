#include "slopes/valuation.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace slopes;

namespace {

// Independent oracle: count factors of p by trial division on the expanded
// integer, never via Legendre's formula.
long vp_by_division(Int x, unsigned long p) {
  REQUIRE(x != 0);
  long v = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p);
    if (r != 0) return v;
    ++v;
    x = q;
  }
}

Rat random_nonzero_rational(std::mt19937_64& rng) {
  auto draw = [&rng]() -> long { return static_cast<long>(rng() % 2001) - 1000; };
  long num = 0;
  while (num == 0) num = draw();
  long den = 0;
  while (den == 0) den = draw();
  Rat x(num, den);
  x.canonicalize();
  return x;
}

}  // namespace

TEST_CASE("vp on integers and rationals") {
  CHECK(vp(Int(24), 2) == Valuation::of(3));
  CHECK(vp(Int(1), 2) == Valuation::of(0));
  CHECK(vp(Rat(-8, 5), 2) == Valuation::of(3));
  CHECK(vp(Rat(5, 8), 2) == Valuation::of(-3));
  CHECK(vp(Int(-121), 11) == Valuation::of(2));
  CHECK(vp(Int(0), 2) == Valuation::infinity());
  CHECK(vp(Rat(0), 7) == Valuation::infinity());
  CHECK_FALSE(vp(Int(0), 2).is_finite());
  CHECK_THROWS_AS(vp(Int(0), 2).value(), std::logic_error);
}

TEST_CASE("valuation arithmetic") {
  CHECK(Valuation::of(2) + Valuation::of(-5) == Valuation::of(-3));
  CHECK(Valuation::of(2) + Valuation::infinity() == Valuation::infinity());
  CHECK(Valuation::min(Valuation::of(1), Valuation::infinity()) == Valuation::of(1));
  CHECK(Valuation::of(3) < Valuation::infinity());

  std::mt19937_64 rng(20240117);
  for (int iter = 0; iter < 500; ++iter) {
    Rat x = random_nonzero_rational(rng);
    Rat y = random_nonzero_rational(rng);
    for (unsigned long p : {2ul, 11ul}) {
      CHECK(vp(Rat(x * y), p) == vp(x, p) + vp(y, p));
      Rat s = x + y;
      if (s != 0) {
        Valuation lo = Valuation::min(vp(x, p), vp(y, p));
        CHECK_FALSE(vp(s, p) < lo);
      }
    }
  }
}

TEST_CASE("vp_factorial matches the expanded factorial") {
  CHECK(vp_factorial(6, 2) == 4);    // 720 = 2^4 * 45
  CHECK(vp_factorial(0, 2) == 0);
  CHECK(vp_factorial(12, 2) == 10);  // 6 + 3 + 1

  for (long n = 1; n <= 200; ++n)
    for (unsigned long p : {2ul, 11ul})
      CHECK(vp_factorial(n, p) == vp_by_division(factorial(n), p));

  CHECK_THROWS_AS(vp_factorial(-1, 2), std::domain_error);
  CHECK_THROWS_AS(factorial(-3), std::domain_error);
}

TEST_CASE("v2((2n)!) = n + v2(n!)") {
  for (long n = 0; n <= 2000; ++n)
    CHECK(vp_factorial(2 * n, 2) == n + vp_factorial(n, 2));
}

TEST_CASE("weight-0 slope formula") {
  CHECK(slope_weight0(1) == 3);
  CHECK(slope_weight0(2) == 7);
  CHECK(slope_weight0(4) == 15);
  CHECK_THROWS_AS(slope_weight0(0), std::domain_error);

  long prev = 0;
  for (long n = 1; n <= 500; ++n) {
    long s = slope_weight0(n);
    CHECK(s % 2 == 1);
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("p = 11 slope formula") {
  CHECK(slope_p11(1) == 1);
  CHECK(slope_p11(2) == 2);
  CHECK(slope_p11(5) == 4);
  for (long n = 1; n <= 100; ++n) CHECK(slope_p11(n) >= 0);
}
