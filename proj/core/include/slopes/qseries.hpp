#pragma once

#include "slopes/numbers.hpp"

#include <vector>

namespace slopes {

// Truncated q-expansion with exact rational coefficients.
//
// A QSeries knows its coefficients for q^0..q^prec and claims nothing about
// higher exponents: they are unknown, not zero. Every operation computes the
// largest window it can prove (min-rule, adjusted for leading zeros) and
// never extends a window silently. Values are immutable once built.
class QSeries {
 public:
  // All-zero series known through q^prec.
  explicit QSeries(long prec);

  // Adopts coefficients for q^0..q^{coeffs.size()-1}; must be nonempty.
  explicit QSeries(std::vector<Rat> coeffs);

  static QSeries one(long prec);
  static QSeries monomial(long degree, const Rat& c, long prec);

  long prec() const { return static_cast<long>(coeffs_.size()) - 1; }

  // Coefficient of q^n; throws std::out_of_range beyond the known window.
  const Rat& coeff(long n) const;

  // Index of the first nonzero known coefficient; prec()+1 when every known
  // coefficient vanishes (the series is zero as far as provable).
  long order() const;

  bool is_zero() const { return order() > prec(); }
  bool is_integral() const;

  QSeries truncated(long prec) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rat& c, const QSeries& a);

  // Nonnegative exponents only.
  QSeries pow(long e) const;

  // Requires a nonzero constant term.
  QSeries inverse() const;

  // q -> q^m for m >= 1; the window stretches to m*prec + m - 1.
  QSeries dilated(long m) const;

  // q -> c*q (coefficient of q^n scales by c^n).
  QSeries scaled_q(const Rat& c) const;
  QSeries negated_q() const { return scaled_q(Rat(-1)); }

  // Multiply by q^m.
  QSeries shifted_up(long m) const;

  // Divide by q^m; the low coefficients must vanish in the known window.
  QSeries shifted_down(long m) const;

 private:
  std::vector<Rat> coeffs_;
};

// Coefficient extraction (U s)_n = s_{2n}; output window floor(prec/2).
QSeries u_on_qexp(const QSeries& s);

// Exact division allowing a common power of q: requires ord(b) <= ord(a)
// within the known windows and b's leading known coefficient nonzero.
QSeries div_exact(const QSeries& a, const QSeries& b);

// Largest window on which both sides are known.
long common_prec(const QSeries& a, const QSeries& b);

// Coefficientwise comparison through q^upto; throws when either side is not
// known that far.
bool equal_upto(const QSeries& a, const QSeries& b, long upto);

}  // namespace slopes
