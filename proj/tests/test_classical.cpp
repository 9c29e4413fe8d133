#include "slopes/classical.hpp"

#include "slopes/series.hpp"
#include "slopes/spectral.hpp"
#include "slopes/valuation.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace slopes;

namespace {

// Oracle for the Hecke action on a single expansion: (T_2 h)_n computed
// directly from the coefficients, compared against lambda * h.
bool is_t2_eigenform(const QSeries& h, long k, const Rat& lambda, long upto) {
  Int w = pow2(k - 1);
  for (long n = 1; n <= upto; ++n) {
    Rat tn = h.coeff(2 * n);
    if (n % 2 == 0) tn += Rat(w) * h.coeff(n / 2);
    if (tn != lambda * h.coeff(n)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("T_2 matrices at small weights") {
  RationalMatrix m12 = t2_matrix(12);
  REQUIRE(m12.size() == 1);
  CHECK(m12.at(0, 0) == -24);
  CHECK(is_t2_eigenform(delta_qexp(41), 12, Rat(-24), 20));

  RationalMatrix m16 = t2_matrix(16);
  REQUIRE(m16.size() == 1);
  CHECK(m16.at(0, 0) == 216);
  QSeries e4delta = (e4_qexp(41) * delta_qexp(41)).truncated(41);
  CHECK(is_t2_eigenform(e4delta, 16, Rat(216), 20));

  RationalMatrix m24 = t2_matrix(24);
  REQUIRE(m24.size() == 2);
  CHECK(m24.trace() == 1080);

  CHECK(t2_matrix(14).size() == 0);

  for (long k = 12; k <= 60; k += 2) CHECK(t2_matrix(k).is_integral());
}

TEST_CASE("predicted classical polygons at small weights") {
  CHECK(slopes_of(conjectural_polygon_classical(12), 1, SlopeSource::conjectural).slopes ==
        std::vector<Rat>{Rat(3)});
  CHECK(slopes_of(conjectural_polygon_classical(16), 1, SlopeSource::conjectural).slopes ==
        std::vector<Rat>{Rat(3)});
  CHECK(slopes_of(conjectural_polygon_classical(22), 1, SlopeSource::conjectural).slopes ==
        std::vector<Rat>{Rat(5)});
  // k = 22: the single T_2 eigenvalue is -288 and v_2(-288) = 5
  CHECK(t2_matrix(22).at(0, 0) == -288);
  CHECK(conjectural_polygon_classical(14).extent() == 0);
}

TEST_CASE("first product term at k = 12 is -8/5") {
  // direct evaluation of 2^2 (k-8)! (k-11)! (k-14) / ((k-12)! (k-7)!) at k=12
  Rat c1 = Rat(4 * factorial(4) * factorial(1) * (-2)) / Rat(factorial(0) * factorial(5));
  CHECK(c1 == Rat(-8, 5));
  CHECK(vp(c1, 2) == Valuation::of(3));
}

TEST_CASE("overconvergent product valuations for k <= 0") {
  auto vals = conjectural_series_overconvergent(0, 200);
  REQUIRE(vals.size() == 200);
  CHECK(vals[0] == std::pair<long, long>{1, 3});  // the term is -8008

  // partial-product increments match 1 + 2 v_2((3j)!/j!) = v_2(d_{j,j})
  long prev = 0;
  for (const auto& [n, v] : vals) {
    CHECK(v - prev == slope_weight0(n));
    CHECK(vp(d_entry(n), 2) == Valuation::of(v - prev));
    prev = v;
  }

  CHECK_THROWS_WITH_AS(conjectural_series_overconvergent(-12, 3), doctest::Contains("j = 1"),
                       std::domain_error);
  CHECK_THROWS_AS(conjectural_series_overconvergent(-24, 5), std::domain_error);
  CHECK(conjectural_series_overconvergent(-24, 1).size() == 1);
  CHECK_THROWS_AS(conjectural_series_overconvergent(1, 3), std::invalid_argument);
}

TEST_CASE("classical polygon verification at small weights") {
  for (long k = 12; k <= 120; k += 2) {
    VerificationReport rep = verify_classical_polygon(k);
    CAPTURE(k);
    CHECK(rep.passed());
  }
  CHECK(verify_classical_polygon(13).outcome == Outcome::error);
}
