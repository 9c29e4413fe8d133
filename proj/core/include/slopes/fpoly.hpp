#pragma once

#include "slopes/numbers.hpp"
#include "slopes/qseries.hpp"

#include <map>

namespace slopes {

// Polynomial with exact rational coefficients and finite support, used for
// polynomials in the Hauptmodul f (e.g. the expansions of U(f^k)).
class FPolynomial {
 public:
  FPolynomial() = default;

  static FPolynomial constant(const Rat& c);
  static FPolynomial monomial(long degree, const Rat& c);

  const std::map<long, Rat>& terms() const { return terms_; }

  // -1 for the zero polynomial.
  long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  // 0 off support.
  Rat coeff(long degree) const;

  bool is_integral() const;

  // Dropping to zero removes the term, keeping the support minimal.
  void set(long degree, const Rat& c);

  friend FPolynomial operator+(const FPolynomial& a, const FPolynomial& b);
  friend FPolynomial operator*(const FPolynomial& a, const FPolynomial& b);
  friend FPolynomial operator*(const Rat& c, const FPolynomial& a);
  friend bool operator==(const FPolynomial& a, const FPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // Substitute a series for the variable (Horner).
  QSeries evaluated_at(const QSeries& s) const;

 private:
  std::map<long, Rat> terms_;
};

}  // namespace slopes
