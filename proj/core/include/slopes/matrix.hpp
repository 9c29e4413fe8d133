#pragma once

#include "slopes/numbers.hpp"

#include <vector>

namespace slopes {

// Dense square matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(long n);
  static RationalMatrix identity(long n);

  long size() const { return n_; }

  Rat& at(long i, long j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Rat& at(long i, long j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  bool is_integral() const;
  Rat trace() const;

 private:
  long n_ = 0;
  std::vector<Rat> a_;
};

// Coefficients c_0..c_n of det(I - X M), c_0 = 1. Small or non-integral
// matrices go through the division-free Berkowitz scheme; larger integral
// ones through the modular CRT path. Both are exact.
std::vector<Rat> reversed_charpoly(const RationalMatrix& m);

// Berkowitz: division-free, works over any exact entries, O(n^4) products.
std::vector<Rat> reversed_charpoly_berkowitz(const RationalMatrix& m);

// Hessenberg charpoly modulo word-size primes, recombined by CRT below a
// Hadamard-style bound; requires integral entries.
std::vector<Int> reversed_charpoly_modular(const RationalMatrix& m);

// Determinant of the principal submatrix on the given (0-based, distinct)
// row/column indices.
Rat principal_minor(const RationalMatrix& m, const std::vector<long>& indices);

}  // namespace slopes
