#include "slopes/series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace slopes {

namespace {

// prod_{n>=1} (1 + sign q^n)^24 through q^prec, by repeated multiplication
// with the sparse binomial factors. Only factors with n <= prec contribute.
QSeries eta_like_product(long prec, int sign) {
  std::vector<Rat> acc(static_cast<std::size_t>(prec) + 1, Rat(0));
  acc[0] = 1;
  for (long n = 1; n <= prec; ++n) {
    // multiply by (1 + sign q^n), highest index first to stay in place
    for (long k = prec; k >= n; --k) {
      if (acc[static_cast<std::size_t>(k - n)] == 0) continue;
      if (sign > 0)
        acc[static_cast<std::size_t>(k)] += acc[static_cast<std::size_t>(k - n)];
      else
        acc[static_cast<std::size_t>(k)] -= acc[static_cast<std::size_t>(k - n)];
    }
  }
  return QSeries(std::move(acc)).pow(24);
}

// Divisor power sums sigma_e(1..prec) by sieving over divisors.
std::vector<Int> sigma_table(long prec, unsigned e) {
  std::vector<Int> sig(static_cast<std::size_t>(prec) + 1, Int(0));
  for (long d = 1; d <= prec; ++d) {
    Int dpow;
    mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(d), e);
    for (long m = d; m <= prec; m += d) sig[static_cast<std::size_t>(m)] += dpow;
  }
  return sig;
}

}  // namespace

QSeries delta_qexp(long prec) {
  if (prec < 1) throw std::invalid_argument("delta_qexp requires prec >= 1");
  return eta_like_product(prec - 1, -1).shifted_up(1);
}

QSeries f_qexp(long prec) {
  if (prec < 1) throw std::invalid_argument("f_qexp requires prec >= 1");
  return eta_like_product(prec - 1, +1).shifted_up(1);
}

QSeries g_qexp(long prec) { return Rat(64) * f_qexp(prec); }

QSeries e4_qexp(long prec) {
  if (prec < 0) throw std::invalid_argument("e4_qexp requires prec >= 0");
  auto sig = sigma_table(prec, 3);
  std::vector<Rat> c(static_cast<std::size_t>(prec) + 1);
  c[0] = 1;
  for (long n = 1; n <= prec; ++n) c[static_cast<std::size_t>(n)] = Rat(240 * sig[n]);
  return QSeries(std::move(c));
}

QSeries e6_qexp(long prec) {
  if (prec < 0) throw std::invalid_argument("e6_qexp requires prec >= 0");
  auto sig = sigma_table(prec, 5);
  std::vector<Rat> c(static_cast<std::size_t>(prec) + 1);
  c[0] = 1;
  for (long n = 1; n <= prec; ++n) c[static_cast<std::size_t>(n)] = Rat(-504 * sig[n]);
  return QSeries(std::move(c));
}

QSeries theta_qexp(long prec) {
  if (prec < 0) throw std::invalid_argument("theta_qexp requires prec >= 0");
  std::vector<Rat> c(static_cast<std::size_t>(prec) + 1, Rat(0));
  // a^2+ab+b^2 >= (3/4) max(a,b)^2 bounds the enumeration box.
  long bound = static_cast<long>(std::sqrt(4.0 * static_cast<double>(prec) / 3.0)) + 2;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b) {
      long n = a * a + a * b + b * b;
      if (n <= prec) c[static_cast<std::size_t>(n)] += 1;
    }
  return QSeries(std::move(c));
}

QSeries j_inverse_qexp(long prec) {
  if (prec < 1) throw std::invalid_argument("j_inverse_qexp requires prec >= 1");
  QSeries delta = delta_qexp(prec);
  QSeries e4cubed = e4_qexp(prec).pow(3).truncated(prec);
  return div_exact(delta, e4cubed).truncated(prec);  // = q - 744 q^2 + ...
}

FPolynomial decompose_in_f(const QSeries& s, long maxdeg) {
  if (maxdeg < 0) throw std::invalid_argument("decompose_in_f requires maxdeg >= 0");
  if (s.prec() < maxdeg)
    throw std::invalid_argument("series window smaller than requested degree");
  QSeries f = f_qexp(std::max<long>(1, s.prec()));
  FPolynomial p;
  QSeries residual = s;
  QSeries fpow = QSeries::one(s.prec());  // f^0
  for (long d = 0; d <= maxdeg; ++d) {
    Rat c = residual.coeff(d);
    if (c != 0) {
      p.set(d, c);
      residual = residual - c * fpow;
    }
    if (d < maxdeg) fpow = (fpow * f).truncated(s.prec());
  }
  if (!residual.is_zero())
    throw std::domain_error("series is not a polynomial of the claimed degree in f");
  return p;
}

long dim_cusp_forms(long k) {
  if (k < 12 || k % 2 != 0)
    throw std::invalid_argument("cusp form dimension implemented for even k >= 12");
  return k / 12 - (k % 12 == 2 ? 1 : 0);
}

std::vector<QSeries> miller_basis(long k, long prec) {
  long dim = dim_cusp_forms(k);
  if (prec < 2 * dim + 1)
    throw std::invalid_argument("miller_basis needs prec >= 2 dim + 1");

  std::vector<QSeries> rows;
  rows.reserve(static_cast<std::size_t>(dim));
  if (dim == 0) return rows;

  // Monomials Delta^i E4^{b_i} E6^c of weight k with i = 1..dim. The parity
  // of (k - 12i) mod 4 does not depend on i, so c is fixed once.
  long c6 = (k % 4 == 2) ? 1 : 0;
  QSeries delta = delta_qexp(prec);
  QSeries e4 = e4_qexp(prec);
  QSeries e6 = e6_qexp(prec);
  QSeries e4cubed = (e4 * e4 * e4).truncated(prec);

  // Delta powers upward (windows only grow that way), then walk i downward
  // so the E4 exponent b_i = (k - 12i - 6c)/4 steps by 3.
  std::vector<QSeries> dpows;
  dpows.reserve(static_cast<std::size_t>(dim) + 1);
  dpows.push_back(QSeries::one(prec));
  for (long i = 1; i <= dim; ++i)
    dpows.push_back((dpows.back() * delta).truncated(prec));

  std::vector<QSeries> monos(static_cast<std::size_t>(dim), QSeries(0));
  long bmin = (k - 12 * dim - 6 * c6) / 4;
  if (bmin < 0) throw std::logic_error("negative E4 exponent in basis construction");
  QSeries e4pow = e4.pow(bmin).truncated(prec);
  for (long i = dim; i >= 1; --i) {
    QSeries m = (dpows[static_cast<std::size_t>(i)] * e4pow).truncated(prec);
    if (c6) m = (m * e6).truncated(prec);
    monos[static_cast<std::size_t>(i - 1)] = m;
    if (i > 1) e4pow = (e4pow * e4cubed).truncated(prec);
  }

  // Each monomial is monic with leading term q^i, so echelonization is plain
  // back-substitution; the multipliers stay integral.
  for (long i = dim; i >= 1; --i) {
    QSeries row = monos[static_cast<std::size_t>(i - 1)];
    for (long j = i + 1; j <= dim; ++j) {
      Rat c = row.coeff(j);
      if (c != 0) row = row - c * monos[static_cast<std::size_t>(j - 1)];
    }
    monos[static_cast<std::size_t>(i - 1)] = row;
  }
  for (auto& m : monos) rows.push_back(std::move(m));
  return rows;
}

VerificationReport theta_j_identities(long prec) {
  if (prec < 0) throw std::invalid_argument("theta_j_identities requires prec >= 0");
  Stopwatch sw;
  VerificationReport rep;
  rep.claim = "theta-j-identities";
  rep.add_param("prec", prec);

  // theta^4 == E4 mod 8
  {
    QSeries lhs = theta_qexp(prec).pow(4).truncated(prec);
    QSeries rhs = e4_qexp(prec);
    bool ok = true;
    for (long n = 0; n <= prec; ++n) {
      Rat d = lhs.coeff(n) - rhs.coeff(n);
      if (d.get_den() != 1 || d.get_num() % 8 != 0) {
        rep.add_mismatch({{"identity", "theta4-e4-mod8"},
                          {"n", n},
                          {"difference", to_string(d)}});
        ok = false;
      }
    }
    rep.details["theta4_e4_mod8"] = ok ? "pass" : "fail";
  }

  // 64/j == g/(4g+1)^3
  {
    if (prec >= 1) {
      QSeries lhs = Rat(64) * j_inverse_qexp(prec);
      QSeries g = g_qexp(prec);
      QSeries denom = (Rat(4) * g + QSeries::one(prec)).pow(3).truncated(prec);
      QSeries rhs = (g * denom.inverse()).truncated(prec);
      bool ok = true;
      for (long n = 0; n <= prec; ++n) {
        if (lhs.coeff(n) != rhs.coeff(n)) {
          rep.add_mismatch({{"identity", "j-inverse-product"},
                            {"n", n},
                            {"lhs", to_string(lhs.coeff(n))},
                            {"rhs", to_string(rhs.coeff(n))}});
          ok = false;
        }
      }
      rep.details["j_inverse_product"] = ok ? "pass" : "fail";
    } else {
      // constant terms only: both sides start at q^1, nothing to compare
      rep.details["j_inverse_product"] = "pass";
    }
  }

  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace slopes
