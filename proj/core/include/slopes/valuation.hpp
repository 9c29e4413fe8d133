#pragma once

#include "slopes/numbers.hpp"

namespace slopes {

// A p-adic valuation: a finite integer, or +infinity for the valuation of 0.
// Infinity is a distinct state, not a sentinel integer; consumers that build
// Newton polygons skip infinite points.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation of(long v) { return Valuation(false, v); }

  bool is_finite() const { return !infinite_; }

  // Throws std::logic_error when infinite.
  long value() const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }

  // v(xy) = v(x) + v(y); infinity absorbs.
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (!a.infinite_ && !b.infinite_) return of(a.v_ + b.v_);
    return infinity();
  }

  static Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

 private:
  Valuation(bool infinite, long v) : infinite_(infinite), v_(v) {}
  bool infinite_;
  long v_;
};

// Exponent of the prime p in x; infinite for x = 0, negative when p divides
// the denominator.
Valuation vp(const Int& x, unsigned long p);
Valuation vp(const Rat& x, unsigned long p);

// Legendre's formula sum_{i>=1} floor(n/p^i) = v_p(n!).
long vp_factorial(long n, unsigned long p);

// 1 + 2 v_2((3n)!/n!), the 2-adic slope of the n-th weight-0 eigenvalue;
// always a positive odd integer, strictly increasing in n.
long slope_weight0(long n);

// The conjectural 11-adic slope of the n-th weight-0 eigenvalue:
// v_11([(6n+1)/5]! [(6n+4)/5]! / [n/5]!^2) + sum_{k=1..4} [(n+k)/5].
long slope_p11(long n);

}  // namespace slopes
