#include "slopes/qseries.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace slopes;

namespace {

QSeries from_ints(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.emplace_back(c);
  return QSeries(std::move(v));
}

QSeries random_series(std::mt19937_64& rng, long prec) {
  std::vector<Rat> v;
  for (long n = 0; n <= prec; ++n)
    v.emplace_back(static_cast<long>(rng() % 21) - 10);
  return QSeries(std::move(v));
}

}  // namespace

TEST_CASE("basic arithmetic") {
  QSeries a = from_ints({1, 1, 0, 0});   // 1 + q
  QSeries b = from_ints({1, -1, 0, 0});  // 1 - q
  QSeries p = a * b;
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -1);

  QSeries inv = b.inverse();  // geometric series
  for (long n = 0; n <= inv.prec(); ++n) CHECK(inv.coeff(n) == 1);

  QSeries base = from_ints({0, 1, 1, 0, 0});  // q (1 + q)
  QSeries sq = base.pow(2);
  CHECK(sq.coeff(2) == 1);
  CHECK(sq.coeff(3) == 2);
  CHECK(sq.coeff(4) == 1);
}

TEST_CASE("windows follow the min-rule adjusted for leading zeros") {
  QSeries q = QSeries::monomial(1, Rat(1), 10);  // q, window 10
  QSeries u = QSeries::one(10);

  CHECK((u * u).prec() == 10);
  CHECK((q * u).prec() == 10);
  CHECK((q * q).prec() == 11);       // both orders 1
  CHECK(q.pow(4).prec() == 13);      // 10 + 3
  CHECK(q.dilated(2).prec() == 21);  // even part fully known
  CHECK(u_on_qexp(q.dilated(2)).prec() == 10);

  CHECK_THROWS_AS(q.coeff(11), std::out_of_range);
  CHECK_THROWS_AS(equal_upto(q, q.truncated(5), 6), std::invalid_argument);
}

TEST_CASE("coefficient extraction and substitutions") {
  QSeries s = from_ints({0, 1, 1, 1, 1});  // q + q^2 + q^3 + q^4
  QSeries us = u_on_qexp(s);
  CHECK(us.prec() == 2);
  CHECK(us.coeff(0) == 0);
  CHECK(us.coeff(1) == 1);  // from q^2
  CHECK(us.coeff(2) == 1);  // from q^4

  CHECK(u_on_qexp(QSeries::one(6)).coeff(0) == 1);

  QSeries n = from_ints({1, 1, 0, 0}).negated_q();
  CHECK(n.coeff(0) == 1);
  CHECK(n.coeff(1) == -1);

  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    QSeries r = random_series(rng, 16);
    QSeries twice = r.negated_q().negated_q();
    CHECK(equal_upto(r, twice, 16));
  }
}

TEST_CASE("inverse really inverts") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 50; ++iter) {
    QSeries r = random_series(rng, 14);
    if (r.coeff(0) == 0) continue;
    QSeries prod = r * r.inverse();
    CHECK(prod.coeff(0) == 1);
    for (long n = 1; n <= prod.prec(); ++n) CHECK(prod.coeff(n) == 0);
  }
  CHECK_THROWS_AS(QSeries::monomial(1, Rat(1), 5).inverse(), std::domain_error);
}

TEST_CASE("shifts") {
  QSeries s = from_ints({0, 0, 3, 4});
  QSeries down = s.shifted_down(2);
  CHECK(down.coeff(0) == 3);
  CHECK(down.coeff(1) == 4);
  CHECK(down.prec() == 1);
  CHECK_THROWS_AS(from_ints({1, 2}).shifted_down(1), std::domain_error);
  CHECK(s.shifted_up(1).coeff(3) == 3);
}

TEST_CASE("division with a common leading power of q") {
  QSeries num = from_ints({0, 0, 1, 2, 3, 4});
  QSeries den = from_ints({0, 1, 1, 0, 0, 0});
  QSeries quot = div_exact(num, den);
  QSeries back = quot * den;
  CHECK(equal_upto(back, num, common_prec(back, num)));
  CHECK_THROWS_AS(div_exact(den, QSeries(4)), std::domain_error);
}

TEST_CASE("integrality detection") {
  CHECK(from_ints({1, 2, 3}).is_integral());
  std::vector<Rat> v{Rat(1), Rat(1, 2)};
  CHECK_FALSE(QSeries(std::move(v)).is_integral());
}
