#include "slopes/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace slopes {

QSeries::QSeries(long prec) {
  if (prec < 0) throw std::invalid_argument("QSeries precision must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(prec) + 1, Rat(0));
}

QSeries::QSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("QSeries needs at least the q^0 coefficient");
}

QSeries QSeries::one(long prec) {
  QSeries s(prec);
  s.coeffs_[0] = 1;
  return s;
}

QSeries QSeries::monomial(long degree, const Rat& c, long prec) {
  QSeries s(prec);
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (degree <= prec) s.coeffs_[static_cast<std::size_t>(degree)] = c;
  return s;
}

const Rat& QSeries::coeff(long n) const {
  if (n < 0 || n > prec())
    throw std::out_of_range("coefficient index outside the provable window");
  return coeffs_[static_cast<std::size_t>(n)];
}

long QSeries::order() const {
  for (long n = 0; n <= prec(); ++n)
    if (coeffs_[static_cast<std::size_t>(n)] != 0) return n;
  return prec() + 1;
}

bool QSeries::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

QSeries QSeries::truncated(long prec) const {
  if (prec < 0 || prec > this->prec())
    throw std::invalid_argument("truncation outside the known window");
  return QSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + prec + 1));
}

QSeries QSeries::operator-() const {
  std::vector<Rat> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return QSeries(std::move(out));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long p = std::min(a.prec(), b.prec());
  std::vector<Rat> out(static_cast<std::size_t>(p) + 1);
  for (long n = 0; n <= p; ++n) out[n] = a.coeff(n) + b.coeff(n);
  return QSeries(std::move(out));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  long p = std::min(a.prec(), b.prec());
  std::vector<Rat> out(static_cast<std::size_t>(p) + 1);
  for (long n = 0; n <= p; ++n) out[n] = a.coeff(n) - b.coeff(n);
  return QSeries(std::move(out));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  // Coefficient n of a*b is provable when every split i+j = n has either
  // i inside a's window or j below b's order (a known-zero), and vice versa:
  // that gives the window min(prec(a)+ord(b), prec(b)+ord(a)).
  long oa = a.order(), ob = b.order();
  long p = std::min(a.prec() + ob, b.prec() + oa);
  std::vector<Rat> out(static_cast<std::size_t>(p) + 1, Rat(0));
  Rat t;
  for (long i = oa; i <= a.prec(); ++i) {
    const Rat& ai = a.coeff(i);
    if (ai == 0) continue;
    long jmax = std::min(b.prec(), p - i);
    for (long j = ob; j <= jmax; ++j) {
      const Rat& bj = b.coeff(j);
      if (bj == 0) continue;
      t = ai * bj;
      out[static_cast<std::size_t>(i + j)] += t;
    }
  }
  return QSeries(std::move(out));
}

QSeries operator*(const Rat& c, const QSeries& a) {
  std::vector<Rat> out(static_cast<std::size_t>(a.prec()) + 1);
  for (long n = 0; n <= a.prec(); ++n) out[n] = c * a.coeff(n);
  return QSeries(std::move(out));
}

QSeries QSeries::pow(long e) const {
  if (e < 0) throw std::invalid_argument("pow exponent must be >= 0");
  QSeries acc = QSeries::one(prec());
  if (e == 0) return acc;
  QSeries base = *this;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      acc = have ? acc * base : base;
      have = true;
    }
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

QSeries QSeries::inverse() const {
  if (coeffs_[0] == 0)
    throw std::domain_error("inverse requires a nonzero constant term");
  long p = prec();
  std::vector<Rat> out(static_cast<std::size_t>(p) + 1);
  Rat lead = Rat(1) / coeffs_[0];
  out[0] = lead;
  for (long n = 1; n <= p; ++n) {
    Rat acc(0);
    for (long k = 1; k <= n; ++k) {
      const Rat& ak = coeffs_[static_cast<std::size_t>(k)];
      if (ak != 0) acc += ak * out[static_cast<std::size_t>(n - k)];
    }
    out[static_cast<std::size_t>(n)] = -lead * acc;
  }
  return QSeries(std::move(out));
}

QSeries QSeries::dilated(long m) const {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  long p = m * prec() + m - 1;
  std::vector<Rat> out(static_cast<std::size_t>(p) + 1, Rat(0));
  for (long n = 0; n <= prec(); ++n) out[static_cast<std::size_t>(m * n)] = coeffs_[n];
  return QSeries(std::move(out));
}

QSeries QSeries::scaled_q(const Rat& c) const {
  std::vector<Rat> out(coeffs_.size());
  Rat cn(1);
  for (long n = 0; n <= prec(); ++n) {
    out[static_cast<std::size_t>(n)] = cn * coeffs_[static_cast<std::size_t>(n)];
    cn *= c;
  }
  return QSeries(std::move(out));
}

QSeries QSeries::shifted_up(long m) const {
  if (m < 0) throw std::invalid_argument("shift must be >= 0");
  std::vector<Rat> out(coeffs_.size() + static_cast<std::size_t>(m), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + m] = coeffs_[i];
  return QSeries(std::move(out));
}

QSeries QSeries::shifted_down(long m) const {
  if (m < 0) throw std::invalid_argument("shift must be >= 0");
  if (m == 0) return *this;
  if (prec() < m) throw std::domain_error("window too small to divide by q^m");
  for (long n = 0; n < m; ++n)
    if (coeffs_[static_cast<std::size_t>(n)] != 0)
      throw std::domain_error("division by q^m with a nonzero low coefficient");
  return QSeries(std::vector<Rat>(coeffs_.begin() + m, coeffs_.end()));
}

QSeries u_on_qexp(const QSeries& s) {
  long p = s.prec() / 2;
  std::vector<Rat> out(static_cast<std::size_t>(p) + 1);
  for (long n = 0; n <= p; ++n) out[static_cast<std::size_t>(n)] = s.coeff(2 * n);
  return QSeries(std::move(out));
}

QSeries div_exact(const QSeries& a, const QSeries& b) {
  long ob = b.order();
  if (ob > b.prec()) throw std::domain_error("division by a series with no known nonzero term");
  return a.shifted_down(ob) * b.shifted_down(ob).inverse();
}

long common_prec(const QSeries& a, const QSeries& b) {
  return std::min(a.prec(), b.prec());
}

bool equal_upto(const QSeries& a, const QSeries& b, long upto) {
  if (upto > common_prec(a, b))
    throw std::invalid_argument("comparison beyond the provable window");
  for (long n = 0; n <= upto; ++n)
    if (a.coeff(n) != b.coeff(n)) return false;
  return true;
}

}  // namespace slopes
