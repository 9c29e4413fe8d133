#include "slopes/fpoly.hpp"

#include <stdexcept>

namespace slopes {

FPolynomial FPolynomial::constant(const Rat& c) { return monomial(0, c); }

FPolynomial FPolynomial::monomial(long degree, const Rat& c) {
  FPolynomial p;
  p.set(degree, c);
  return p;
}

Rat FPolynomial::coeff(long degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool FPolynomial::is_integral() const {
  for (const auto& [d, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

void FPolynomial::set(long degree, const Rat& c) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (c == 0)
    terms_.erase(degree);
  else
    terms_[degree] = c;
}

FPolynomial operator+(const FPolynomial& a, const FPolynomial& b) {
  FPolynomial out = a;
  for (const auto& [d, c] : b.terms_) out.set(d, out.coeff(d) + c);
  return out;
}

FPolynomial operator*(const FPolynomial& a, const FPolynomial& b) {
  FPolynomial out;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) out.set(da + db, out.coeff(da + db) + ca * cb);
  return out;
}

FPolynomial operator*(const Rat& c, const FPolynomial& a) {
  FPolynomial out;
  if (c == 0) return out;
  for (const auto& [d, ca] : a.terms_) out.set(d, c * ca);
  return out;
}

QSeries FPolynomial::evaluated_at(const QSeries& s) const {
  QSeries acc(s.prec());
  if (terms_.empty()) return acc;
  long d = degree();
  acc = QSeries::one(s.prec());
  acc = coeff(d) * acc;
  for (long k = d - 1; k >= 0; --k) {
    acc = acc * s;
    Rat c = coeff(k);
    if (c != 0) acc = acc + c * QSeries::one(acc.prec());
  }
  return acc;
}

}  // namespace slopes
