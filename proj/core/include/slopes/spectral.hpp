#pragma once

#include "slopes/fpoly.hpp"
#include "slopes/newton.hpp"
#include "slopes/numbers.hpp"
#include "slopes/report.hpp"

#include <optional>
#include <vector>

namespace slopes {

// Table of the integers s_{i,j} defined by U(f^j) = sum_i s_{i,j} f^i.
// Zero outside the band i <= 2j, j <= 2i.
class STable {
 public:
  STable(long imax, long jmax);
  long imax() const { return imax_; }
  long jmax() const { return jmax_; }
  const Int& at(long i, long j) const;

 private:
  friend STable s_table(long imax, long jmax);
  Int& cell(long i, long j);
  long imax_, jmax_;
  std::vector<Int> v_;
};

// Fills the table from the recurrence
//   s_{i,j} = 48 s_{i-1,j-1} + 2^12 s_{i-2,j-1} + s_{i-1,j-2}   (i,j >= 2)
// over the base data s_{0,0}=1, s_{1,1}=24, s_{2,1}=2^11, s_{1,2}=1.
STable s_table(long imax, long jmax);

// Closed form s_{i,j} = (i+j-1)! 3j 2^{8i-4j-1} / ((2i-j)! (2j-i)!);
// throws outside the band.
Rat s_closed(long i, long j);

// Matrix entry of U on the basis {g, g^2, ...}:
//   u_{i,j} = 2^{6j-6i} s_{i,j} = (i+j-1)! 3j 2^{2i+2j-1} / ((2i-j)! (2j-i)!),
// zero outside the band. Both forms are evaluated and must agree.
Rat u_entry(long i, long j);

// The triangular factors and the diagonal:
//   a_{i,j} on 2j >= i >= j, b_{i,j} on 2i >= j >= i,
//   d_{i,i} = 2^{4i+1} (3i)!^2 i!^2 / (3 (2i)!^4).
Rat a_entry(long i, long j);
Rat b_entry(long i, long j);
Rat d_entry(long i);

struct ABDEntry {
  Rat a, b;
  std::optional<Rat> d;  // present when i = j
};
ABDEntry abd_entries(long i, long j);

// Checks, for all indices <= nmax: a_{i,i} = b_{i,i} = 1, off-diagonal
// support entries of A and B are even, v_2(d_{i,i}) = 1 + 2 v_2((3i)!/i!),
// and i b_{i,j} = j a_{j,i}.
VerificationReport verify_integrality(long nmax);

// Entrywise factorization check: sum_k a_{i,k} d_{k,k} b_{k,j} = u_{i,j}.
VerificationReport verify_adb(long i, long j);

// The finite rational identity behind the factorization:
//   (2i)!(2j)!(i+j-1)! / (4 i!^2 j!^2 (2i-j)!(2j-i)!)
//     = sum_k (2k+i-1)! k (2k+j-1)! / ((i-k)!(i+k)!(j-k)!(j+k)!(2k-i)!(2k-j)!).
// Requires 2i >= j and 2j >= i.
VerificationReport minor_identity(long i, long j);

// Coefficients c_0..c_N of det(I - X U_N) for the N x N truncation, exact.
std::vector<Rat> truncated_char_series(long N);

struct SpectralSlopes {
  SlopeSequence slopes;
  long truncation = 0;  // N whose slope prefix agrees with the 2N truncation
};

// First n slopes of the characteristic-series polygon, certified by
// agreement between the N and 2N truncations (N starts at 2n+8 and
// doubles). Throws if no agreement is reached by truncation_cap.
SpectralSlopes spectral_slopes(long n, long truncation_cap = 1024);

// Self-adjointness at one entry pair: i u_{i,j} and j u_{j,i} both equal
// 2^{2i+2j-1} 3ij (i+j-1)! / ((2i-j)!(2j-i)!) in the band, 0 outside.
VerificationReport selfadjoint_check(long i, long j);

// U in weight -12m against the basis {h g, h g^2, ...}: 2^{-6m} u_{i+m,j+2m}.
Rat weight_matrix_entry(long m, long i, long j);

// Pseudorandom C = Id mod 2 (seeded): principal minors of D and CD of size
// <= 4 have equal 2-adic valuation, and det(I-XD), det(I-XCD) have the same
// Newton polygon.
VerificationReport np_diagonal_check(long N, unsigned long long seed);

// X_0..X_kmax with X_k = U(f^k) as a polynomial in f, from the recurrence
// X_k = (48f + 2^12 f^2) X_{k-1} + f X_{k-2}.
std::vector<FPolynomial> uf_polynomials(long kmax);

}  // namespace slopes
