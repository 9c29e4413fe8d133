#include "slopes/series.hpp"

#include "slopes/qseries.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace slopes;

namespace {

// Small independent oracle for eta-like products: plain int64 coefficient
// arrays, no QSeries involved.
std::vector<long> naive_eta24(long prec, int sign) {
  std::vector<long> acc(static_cast<std::size_t>(prec) + 1, 0);
  acc[0] = 1;
  for (int rep = 0; rep < 24; ++rep)
    for (long n = 1; n <= prec; ++n)
      for (long k = prec; k >= n; --k) acc[k] += sign * acc[k - n];
  return acc;
}

long naive_sigma(long n, int e) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      long dp = 1;
      for (int t = 0; t < e; ++t) dp *= d;
      s += dp;
    }
  return s;
}

}  // namespace

TEST_CASE("delta expansion") {
  QSeries d = delta_qexp(12);
  CHECK(d.coeff(0) == 0);
  CHECK(d.coeff(1) == 1);
  CHECK(d.coeff(2) == -24);
  CHECK(d.coeff(3) == 252);

  auto oracle = naive_eta24(10, -1);
  for (long n = 1; n <= 11; ++n) CHECK(d.coeff(n) == Rat(oracle[n - 1]));
  CHECK(delta_qexp(200).is_integral());
}

TEST_CASE("f expansion ground truth") {
  QSeries f = f_qexp(8);
  long expected[] = {0, 1, 24, 300, 2624, 18126, 105504};
  for (long n = 0; n <= 6; ++n) CHECK(f.coeff(n) == expected[n]);

  auto oracle = naive_eta24(7, +1);
  for (long n = 1; n <= 8; ++n) CHECK(f.coeff(n) == Rat(oracle[n - 1]));

  CHECK(g_qexp(4).coeff(1) == 64);
  CHECK(f_qexp(200).is_integral());
}

TEST_CASE("three constructions of f agree to 200 terms") {
  const long prec = 200;
  QSeries f1 = f_qexp(prec);

  // q prod (1 - q^{2n-1})^{-24}
  std::vector<Rat> unit(static_cast<std::size_t>(prec), Rat(0));
  unit[0] = 1;
  for (long n = 1; n < prec; n += 2)
    for (long k = prec - 1; k >= n; --k) unit[k] -= unit[k - n];
  QSeries f2 = QSeries(std::move(unit)).pow(24).inverse().shifted_up(1);

  // Delta(2 tau)/Delta(tau)
  QSeries delta = delta_qexp(2 * prec + 1);
  QSeries f3 = div_exact(delta.dilated(2), delta);

  CHECK(equal_upto(f1, f2, prec));
  CHECK(equal_upto(f1, f3, prec));
}

TEST_CASE("Eisenstein series") {
  QSeries e4 = e4_qexp(30);
  CHECK(e4.coeff(0) == 1);
  CHECK(e4.coeff(1) == 240);
  CHECK(e4.coeff(2) == 2160);
  for (long n = 1; n <= 30; ++n) CHECK(e4.coeff(n) == Rat(240 * naive_sigma(n, 3)));
  CHECK(e4_qexp(200).is_integral());

  QSeries e6 = e6_qexp(20);
  CHECK(e6.coeff(0) == 1);
  for (long n = 1; n <= 20; ++n) CHECK(e6.coeff(n) == Rat(-504 * naive_sigma(n, 5)));
}

TEST_CASE("theta series") {
  QSeries th = theta_qexp(12);
  CHECK(th.coeff(0) == 1);
  CHECK(th.coeff(1) == 6);
  CHECK(th.coeff(2) == 0);
  CHECK(th.coeff(3) == 6);
  CHECK(th.coeff(4) == 6);
  CHECK(th.coeff(7) == 12);  // (1,2),(2,1) and sign/swap images
  CHECK(theta_qexp(200).is_integral());
}

TEST_CASE("U(f) = 24 f + 2^11 f^2 as q-expansions") {
  QSeries f = f_qexp(81);
  QSeries lhs = u_on_qexp(f);
  QSeries f40 = f.truncated(40);
  QSeries rhs = Rat(24) * f40 + Rat(2048) * (f40 * f40).truncated(40);
  CHECK(equal_upto(lhs, rhs, 40));
}

TEST_CASE("f(q) f(-q) = -f(q^2) to 200 terms") {
  const long prec = 200;
  QSeries f = f_qexp(prec);
  QSeries lhs = f.negated_q() * f;
  QSeries rhs = -f.dilated(2);
  CHECK(equal_upto(lhs, rhs, prec));
}

TEST_CASE("decomposition in powers of f") {
  QSeries f = f_qexp(40);
  FPolynomial sq = decompose_in_f((f * f).truncated(40), 3);
  CHECK(sq == FPolynomial::monomial(2, Rat(1)));

  FPolynomial uf = decompose_in_f(u_on_qexp(f_qexp(81)), 2);
  FPolynomial expect;
  expect.set(1, Rat(24));
  expect.set(2, Rat(2048));
  CHECK(uf == expect);

  // U(f^2) against the recurrence column 1, 1152, 196608, 2^23
  QSeries f2 = (f_qexp(81) * f_qexp(81)).truncated(81);
  FPolynomial uf2 = decompose_in_f(u_on_qexp(f2), 4);
  CHECK(uf2.coeff(1) == 1);
  CHECK(uf2.coeff(2) == 1152);
  CHECK(uf2.coeff(3) == 196608);
  CHECK(uf2.coeff(4) == 8388608);

  CHECK_THROWS_AS(decompose_in_f(e4_qexp(20), 3), std::domain_error);
  CHECK_THROWS_AS(decompose_in_f(f.truncated(2), 3), std::invalid_argument);
}

TEST_CASE("cusp form dimensions") {
  CHECK(dim_cusp_forms(12) == 1);
  CHECK(dim_cusp_forms(14) == 0);
  CHECK(dim_cusp_forms(16) == 1);
  CHECK(dim_cusp_forms(24) == 2);
  CHECK(dim_cusp_forms(26) == 1);
  CHECK(dim_cusp_forms(2048) == 170);
  CHECK_THROWS_AS(dim_cusp_forms(13), std::invalid_argument);
  CHECK_THROWS_AS(dim_cusp_forms(10), std::invalid_argument);
}

TEST_CASE("echelon cusp form bases") {
  auto b12 = miller_basis(12, 10);
  REQUIRE(b12.size() == 1);
  CHECK(equal_upto(b12[0], delta_qexp(10), 10));

  auto b26 = miller_basis(26, 10);
  REQUIRE(b26.size() == 1);
  CHECK(b26[0].coeff(1) == 1);

  auto b24 = miller_basis(24, 10);
  REQUIRE(b24.size() == 2);
  CHECK(b24[0].coeff(1) == 1);
  CHECK(b24[0].coeff(2) == 0);
  CHECK(b24[1].coeff(1) == 0);
  CHECK(b24[1].coeff(2) == 1);

  // echelon shape with integral entries across a few weights
  for (long k : {36L, 38L, 50L, 74L}) {
    long dim = dim_cusp_forms(k);
    auto basis = miller_basis(k, 2 * dim + 1);
    REQUIRE(static_cast<long>(basis.size()) == dim);
    for (long i = 1; i <= dim; ++i) {
      for (long j = 1; j <= dim; ++j)
        CHECK(basis[i - 1].coeff(j) == (i == j ? 1 : 0));
      CHECK(basis[i - 1].is_integral());
    }
  }

  CHECK_THROWS_AS(miller_basis(13, 40), std::invalid_argument);
  CHECK_THROWS_AS(miller_basis(10, 40), std::invalid_argument);
  CHECK_THROWS_AS(miller_basis(24, 3), std::invalid_argument);
}

TEST_CASE("theta and j-inverse identities") {
  VerificationReport rep = theta_j_identities(50);
  CHECK(rep.passed());

  VerificationReport trivial = theta_j_identities(0);
  CHECK(trivial.passed());

  // spot values feeding the mod-8 congruence
  QSeries th4 = theta_qexp(4).pow(4);
  CHECK(th4.coeff(1) == 24);
  CHECK(e4_qexp(1).coeff(1) == 240);
}
